#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfsk/cli.hpp"
#include "cfsk/error.hpp"
#include "cfsk/spectral.hpp"

namespace cfsk::cli {

namespace {

using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NegativeCoefficient:
        return kExitRegime;
    case ErrorCode::NotHermitian:
    case ErrorCode::NotPsd:
    case ErrorCode::NoConvergence:
    case ErrorCode::NotNormalized:
        return kExitNumerical;
    case ErrorCode::InvalidParameter:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OutOfRange:
    case ErrorCode::NegativePhotons:
        return kExitConfig;
    }
    return kExitNumerical;
}

double parse_number(const std::string &text, const char *what) {
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) {
        throw ConfigError(std::string(what) + " expects a number, got '" + text + "'");
    }
    return value;
}

std::optional<double> parse_angle(const std::string &text, const char *what) {
    if (text == "optimize") {
        return std::nullopt;
    }
    return parse_number(text, what);
}

/// 15 significant digits, stored back as a double for JSON output.
double rounded15(double v) {
    const auto s = format_double(v, 15);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Writes to `path` when given, otherwise to `out`.
void emit(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &writer) {
    if (path.empty()) {
        writer(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write output file '" + path + "'");
    }
    writer(file);
}

struct SweepFlags {
    std::string config_path;
    std::vector<std::string> alphabets;
    std::vector<int> sizes;
    int l = 1;
    std::string dtheta;
    std::string domega_t;
    std::vector<double> energies;
    double energy_min = 0.01;
    double energy_max = 10.0;
    int energy_points = 40;
    std::vector<std::string> outputs;
    std::string format;
    std::string phase_offset;
    double phase_offset_value = 0.0;
    std::string objective;
    int resolution = 64;
    double tune_photons = 1.0;
    bool with_psk = false;
    std::string output;

    struct Options {
        CLI::Option *config, *alphabet, *m, *l, *dtheta, *domega_t, *energies, *emin, *emax, *epoints, *outputs,
            *format, *phase_offset, *phase_value, *objective, *resolution, *tune_photons, *with_psk;
    } opt{};

    void attach(CLI::App *cmd) {
        opt.config = cmd->add_option("--config", config_path, "JSON config file; flags override its fields");
        opt.alphabet = cmd->add_option("--alphabet", alphabets, "cfsk, psk and/or dcfsk");
        opt.m = cmd->add_option("--m", sizes, "Alphabet size(s) M");
        opt.l = cmd->add_option("--l", l, "dCFSK half-bandwidth L (2L+1 modes)");
        opt.dtheta = cmd->add_option("--dtheta", dtheta, "Phase step in radians, or 'optimize'");
        opt.domega_t = cmd->add_option("--domega-t", domega_t, "Frequency step times duration, or 'optimize'");
        opt.energies = cmd->add_option("--energies", energies, "Explicit energy grid");
        opt.emin = cmd->add_option("--energy-min", energy_min, "Log grid lower end");
        opt.emax = cmd->add_option("--energy-max", energy_max, "Log grid upper end");
        opt.epoints = cmd->add_option("--energy-points", energy_points, "Log grid point count");
        opt.outputs = cmd->add_option("--outputs", outputs,
                                      "Column groups: SRM BOUNDS OPTIMALITY_GAP HOLEVO RATE CAPACITY_RATIO");
        opt.format = cmd->add_option("--format", format, "csv or json");
        opt.phase_offset = cmd->add_option("--phase-offset", phase_offset, "matched, half-pi or explicit");
        opt.phase_value = cmd->add_option("--phase-offset-value", phase_offset_value, "Explicit dCFSK phase step");
        opt.objective = cmd->add_option("--objective", objective, "Tuning objective: srm, holevo or upper");
        opt.resolution = cmd->add_option("--resolution", resolution, "Tuning grid resolution");
        opt.tune_photons = cmd->add_option("--tune-photons", tune_photons, "|alpha|^2 used when tuning");
        opt.with_psk = cmd->add_flag("--with-psk", with_psk, "Add a PSK column at equal total photons");
        cmd->add_option("--output", output, "Output file (default stdout)");
    }

    [[nodiscard]] SweepConfig resolve() const {
        SweepConfig config;
        if (opt.config->count() > 0) {
            apply_json_config(read_file(config_path), config);
        }
        if (opt.alphabet->count() > 0) {
            config.alphabets.clear();
            for (const auto &a : alphabets) {
                config.alphabets.push_back(parse_alphabet(a));
            }
        }
        if (opt.m->count() > 0) {
            config.sizes = sizes;
        }
        if (opt.l->count() > 0) {
            config.l = l;
        }
        if (opt.dtheta->count() > 0) {
            config.delta_theta = parse_angle(dtheta, "--dtheta");
        }
        if (opt.domega_t->count() > 0) {
            config.delta_omega_t = parse_angle(domega_t, "--domega-t");
        }
        if (opt.energies->count() > 0) {
            config.energy_grid = energies;
        } else if (opt.emin->count() + opt.emax->count() + opt.epoints->count() > 0) {
            config.energy_grid = log_grid(energy_min, energy_max, energy_points);
        }
        if (opt.outputs->count() > 0) {
            config.outputs.clear();
            for (const auto &o : outputs) {
                config.outputs.push_back(parse_output_group(o));
            }
        }
        if (opt.format->count() > 0) {
            config.format = parse_format(format);
        }
        if (opt.phase_offset->count() > 0) {
            config.phase_offset.mode = parse_phase_offset(phase_offset);
        }
        if (opt.phase_value->count() > 0) {
            config.phase_offset.value = phase_offset_value;
        }
        if (opt.objective->count() > 0) {
            config.objective = parse_objective(objective);
        }
        if (opt.resolution->count() > 0) {
            config.tuning_resolution = resolution;
        }
        if (opt.tune_photons->count() > 0) {
            config.tuning_photons = tune_photons;
        }
        if (opt.with_psk->count() > 0) {
            config.companion_psk = with_psk;
        }
        if (config.sizes.empty() || config.alphabets.empty()) {
            throw ConfigError("at least one alphabet and one size are required");
        }
        if (!config.energy_grid.empty()) {
            validate_energy_grid(config.energy_grid);
        }
        return config;
    }
};

struct GramFlags {
    std::string alphabet = "cfsk";
    int m = 2;
    int l = 1;
    double dtheta = 0.0;
    double domega_t = 0.0;
    double photons = 0.0;
    std::string phase_offset = "matched";
    double phase_offset_value = 0.0;
    std::string format = "json";
    std::string output;
};

void run_gram(const GramFlags &f, std::ostream &out) {
    const Alphabet alphabet = parse_alphabet(f.alphabet);
    const Format format = parse_format(f.format);
    std::optional<GramMatrix> gram;
    switch (alphabet) {
    case Alphabet::Cfsk:
        gram = gram_cfsk(
            {.m = f.m, .delta_theta = f.dtheta, .delta_omega_t = f.domega_t, .total_photons = f.photons});
        break;
    case Alphabet::Psk:
        gram = gram_psk({.m = f.m, .photons = f.photons});
        break;
    case Alphabet::Dcfsk:
        gram = gram_dcfsk({.m = f.m,
                           .l = f.l,
                           .delta_theta = f.dtheta,
                           .delta_omega_t = f.domega_t,
                           .total_photons = f.photons,
                           .phase_offset = {parse_phase_offset(f.phase_offset), f.phase_offset_value}});
        break;
    }
    const ComplexMatrix &g = gram->entries();
    const StructureReport structure = structure_check(g);
    const int m = gram->dim();

    emit(f.output, out, [&](std::ostream &os) {
        if (format == Format::Csv) {
            Table table;
            table.columns = {"j", "k", "re", "im"};
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    table.rows.push_back({static_cast<long long>(j), static_cast<long long>(k),
                                          rounded15(g(j, k).real()), rounded15(g(j, k).imag())});
                }
            }
            write_csv(table, os);
            return;
        }
        ordered_json doc;
        doc["alphabet"] = std::string(to_string(alphabet));
        doc["m"] = m;
        ordered_json re = ordered_json::array();
        ordered_json im = ordered_json::array();
        for (int j = 0; j < m; ++j) {
            ordered_json rrow = ordered_json::array();
            ordered_json irow = ordered_json::array();
            for (int k = 0; k < m; ++k) {
                rrow.push_back(rounded15(g(j, k).real()));
                irow.push_back(rounded15(g(j, k).imag()));
            }
            re.push_back(std::move(rrow));
            im.push_back(std::move(irow));
        }
        doc["re"] = std::move(re);
        doc["im"] = std::move(im);
        doc["structure"] = {{"is_toeplitz", structure.is_toeplitz},
                            {"is_circulant", structure.is_circulant},
                            {"max_toeplitz_dev", structure.max_toeplitz_dev},
                            {"max_circulant_dev", structure.max_circulant_dev}};
        os << doc.dump(2) << '\n';
    });
}

struct OptimizeFlags {
    int m = 4;
    double photons = 1.0;
    std::string objective = "SRM_SUCCESS";
    int resolution = 64;
    std::optional<double> dtheta;
    std::optional<double> domega_t;
    std::string output;
};

void run_optimize(const OptimizeFlags &f, std::ostream &out) {
    TuningOptions options;
    options.resolution = f.resolution;
    options.fixed_delta_theta = f.dtheta;
    options.fixed_delta_omega_t = f.domega_t;
    const auto result = grid_optimize(f.m, f.photons, parse_objective(f.objective), options);
    ordered_json doc;
    doc["m"] = f.m;
    doc["total_photons"] = f.photons;
    doc["best_delta_theta"] = result.best_delta_theta;
    doc["best_delta_omega_T"] = result.best_delta_omega_t;
    doc["objective_value"] = result.objective_value;
    doc["objective_kind"] = std::string(to_string(result.objective_kind));
    doc["grid_resolution"] = result.grid_resolution;
    doc["refinement_iterations"] = result.refinement_iterations;
    emit(f.output, out, [&](std::ostream &os) { os << doc.dump(2) << '\n'; });
}

struct FigureFlags {
    std::string id;
    std::string output_dir = ".";
    int scan_resolution = 32;
    int resolution = 64;
    std::vector<double> energies;
};

void run_figures(const FigureFlags &f, std::ostream &out) {
    FigureOptions options;
    options.scan_resolution = f.scan_resolution;
    options.tuning_resolution = f.resolution;
    options.energy_grid = f.energies;
    if (options.scan_resolution < 1) {
        throw ConfigError("--scan-resolution must be >= 1");
    }
    const auto tables = figure_tables(f.id, options);
    std::filesystem::create_directories(f.output_dir);
    for (const auto &[name, table] : tables) {
        const auto path = (std::filesystem::path(f.output_dir) / name).string();
        emit(path, out, [&](std::ostream &os) { write_csv(table, os); });
        out << path << '\n';
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gram-matrix performance analysis of coherent-state keying alphabets"};
    app.require_subcommand(1);

    GramFlags gram_flags;
    auto *gram = app.add_subcommand("gram", "Print the Gram matrix of one alphabet");
    gram->add_option("--alphabet", gram_flags.alphabet, "cfsk, psk or dcfsk");
    gram->add_option("--m", gram_flags.m, "Alphabet size M");
    gram->add_option("--l", gram_flags.l, "dCFSK half-bandwidth L");
    gram->add_option("--dtheta", gram_flags.dtheta, "Phase step in radians");
    gram->add_option("--domega-t", gram_flags.domega_t, "Frequency step times duration");
    gram->add_option("--photons", gram_flags.photons, "Total photons per signal");
    gram->add_option("--phase-offset", gram_flags.phase_offset, "matched, half-pi or explicit");
    gram->add_option("--phase-offset-value", gram_flags.phase_offset_value, "Explicit dCFSK phase step");
    gram->add_option("--format", gram_flags.format, "json or csv");
    gram->add_option("--output", gram_flags.output, "Output file (default stdout)");

    SweepFlags disc_flags;
    auto *disc = app.add_subcommand("discriminate", "SRM success probability, bounds and optimality gap");
    disc_flags.attach(disc);

    SweepFlags rate_flags;
    auto *rates = app.add_subcommand("rates", "Holevo rate, mode efficiency and capacity ratio");
    rate_flags.attach(rates);

    OptimizeFlags opt_flags;
    auto *optimize = app.add_subcommand("optimize", "Grid search over (delta_theta, delta_omega_t)");
    optimize->add_option("--m", opt_flags.m, "Alphabet size M");
    optimize->add_option("--photons", opt_flags.photons, "Total photons per signal");
    optimize->add_option("--objective", opt_flags.objective, "SRM_SUCCESS, HOLEVO_RATE or UPPER_BOUND");
    optimize->add_option("--resolution", opt_flags.resolution, "Grid points per axis");
    optimize->add_option("--dtheta", opt_flags.dtheta, "Hold delta_theta fixed");
    optimize->add_option("--domega-t", opt_flags.domega_t, "Hold delta_omega_t fixed");
    optimize->add_option("--output", opt_flags.output, "Output file (default stdout)");

    FigureFlags fig_flags;
    auto *figures = app.add_subcommand("figures", "Write the data table of one figure");
    figures->add_option("id", fig_flags.id, "1a, 1b, 2, 3 or 4")->required();
    figures->add_option("--output-dir", fig_flags.output_dir, "Directory for the CSV files");
    figures->add_option("--scan-resolution", fig_flags.scan_resolution, "Grid points per axis for 1a");
    figures->add_option("--resolution", fig_flags.resolution, "Tuning grid resolution");
    figures->add_option("--energies", fig_flags.energies, "Energy grid override");

    std::vector<const char *> argv{"cfsk"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        if (gram->parsed()) {
            run_gram(gram_flags, out);
        } else if (disc->parsed()) {
            const auto config = disc_flags.resolve();
            const auto table = discriminate_table(config);
            emit(disc_flags.output, out, [&](std::ostream &os) { write_table(table, config.format, os); });
        } else if (rates->parsed()) {
            const auto config = rate_flags.resolve();
            const auto table = rates_table(config);
            emit(rate_flags.output, out, [&](std::ostream &os) { write_table(table, config.format, os); });
        } else if (optimize->parsed()) {
            run_optimize(opt_flags, out);
        } else if (figures->parsed()) {
            run_figures(fig_flags, out);
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

} // namespace cfsk::cli
