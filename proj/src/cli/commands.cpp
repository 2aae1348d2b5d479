#include <cmath>
#include <numbers>
#include <string>

#include "cfsk/cli.hpp"
#include "cfsk/discrimination.hpp"
#include "cfsk/parallel.hpp"
#include "cfsk/rates.hpp"
#include "cfsk/spectral.hpp"

namespace cfsk::cli {

namespace {

// Reference energy and frequency step used by the figure tables. The
// dCFSK tables fix delta_omega_t = pi, the one value at which the literal
// pi/2 phase offset and the CFSK-matched offset coincide.
constexpr double kFigureOneEnergy = 1.0;
constexpr double kDcfskShape = std::numbers::pi;

struct AlphabetPoint {
    Alphabet alphabet;
    int m;
    ResolvedAngles angles;
    std::optional<FourierExpansion> expansion;
};

AlphabetPoint prepare(const SweepConfig &config, Alphabet alphabet, int m) {
    AlphabetPoint p{alphabet, m, {}, std::nullopt};
    if (alphabet == Alphabet::Psk) {
        validate(PskParams{.m = m});
        p.angles = {kTwoPi / m, 0.0, false};
        return p;
    }
    p.angles = resolve_angles(config, m);
    if (alphabet == Alphabet::Dcfsk) {
        p.expansion = fourier_coefficients(m, config.l, p.angles.delta_omega_t);
    }
    return p;
}

DcfskParams dcfsk_params(const SweepConfig &config, const AlphabetPoint &p, double total_photons) {
    return {.m = p.m,
            .l = config.l,
            .delta_theta = p.angles.delta_theta,
            .delta_omega_t = p.angles.delta_omega_t,
            .total_photons = total_photons,
            .phase_offset = config.phase_offset};
}

GramMatrix gram_at(const SweepConfig &config, const AlphabetPoint &p, double total_photons) {
    switch (p.alphabet) {
    case Alphabet::Cfsk:
        return gram_cfsk({.m = p.m,
                          .delta_theta = p.angles.delta_theta,
                          .delta_omega_t = p.angles.delta_omega_t,
                          .total_photons = total_photons});
    case Alphabet::Psk:
        return gram_psk({.m = p.m, .photons = total_photons});
    case Alphabet::Dcfsk:
        return gram_dcfsk(dcfsk_params(config, p, total_photons), *p.expansion);
    }
    throw ConfigError("unreachable alphabet");
}

void append_identity(std::vector<Cell> &row, const SweepConfig &config, const AlphabetPoint &p) {
    row.emplace_back(std::string(to_string(p.alphabet)));
    row.emplace_back(static_cast<long long>(p.m));
    if (p.alphabet == Alphabet::Dcfsk) {
        row.emplace_back(static_cast<long long>(config.l));
    } else {
        row.emplace_back(std::monostate{});
    }
    row.emplace_back(p.angles.delta_theta);
    row.emplace_back(p.angles.delta_omega_t);
}

const std::vector<double> &grid_of(const SweepConfig &config, std::vector<double> &storage) {
    if (config.energy_grid.empty()) {
        storage = default_energy_grid();
        return storage;
    }
    validate_energy_grid(config.energy_grid);
    return config.energy_grid;
}

} // namespace

ResolvedAngles resolve_angles(const SweepConfig &config, int m) {
    if (config.delta_theta && config.delta_omega_t) {
        return {*config.delta_theta, *config.delta_omega_t, false};
    }
    TuningOptions options;
    options.resolution = config.tuning_resolution;
    options.fixed_delta_theta = config.delta_theta;
    options.fixed_delta_omega_t = config.delta_omega_t;
    const auto tuned = grid_optimize(m, config.tuning_photons, config.objective, options);
    return {tuned.best_delta_theta, tuned.best_delta_omega_t, true};
}

Table discriminate_table(const SweepConfig &config) {
    std::vector<double> storage;
    const auto &energies = grid_of(config, storage);

    Table table;
    table.columns = {"alphabet", "m", "l", "delta_theta", "delta_omega_t", "energy"};
    if (config.wants(OutputGroup::Srm)) {
        table.columns.insert(table.columns.end(), {"p_srm"});
    }
    if (config.wants(OutputGroup::Bounds)) {
        table.columns.insert(table.columns.end(), {"p_lower", "p_upper", "p_upper_raw"});
    }
    if (config.wants(OutputGroup::OptimalityGap)) {
        table.columns.insert(table.columns.end(), {"optimality_gap", "srm_is_optimal"});
    }
    if (config.companion_psk) {
        table.columns.emplace_back("p_psk");
    }

    for (Alphabet alphabet : config.alphabets) {
        for (int m : config.sizes) {
            const AlphabetPoint p = prepare(config, alphabet, m);
            std::vector<std::vector<Cell>> rows(energies.size());
            parallel_for(energies.size(), [&](std::size_t i) {
                const double energy = energies[i];
                const auto report = discriminate(gram_at(config, p, energy));
                auto &row = rows[i];
                append_identity(row, config, p);
                row.emplace_back(energy);
                if (config.wants(OutputGroup::Srm)) {
                    row.emplace_back(report.p_srm);
                }
                if (config.wants(OutputGroup::Bounds)) {
                    row.emplace_back(report.p_lower);
                    row.emplace_back(report.p_upper);
                    row.emplace_back(report.p_upper_raw);
                }
                if (config.wants(OutputGroup::OptimalityGap)) {
                    row.emplace_back(report.optimality_gap);
                    row.emplace_back(report.srm_is_optimal);
                }
                if (config.companion_psk) {
                    row.emplace_back(srm_success(gram_psk({.m = m, .photons = energy})).p_srm);
                }
            });
            for (auto &row : rows) {
                table.rows.push_back(std::move(row));
            }
        }
    }
    return table;
}

Table rates_table(const SweepConfig &config) {
    std::vector<double> storage;
    const auto &grid = grid_of(config, storage);

    Table table;
    table.columns = {"alphabet", "m", "l", "delta_theta", "delta_omega_t", "n"};
    if (config.wants(OutputGroup::Holevo)) {
        table.columns.emplace_back("chi");
    }
    if (config.wants(OutputGroup::Rate)) {
        table.columns.insert(table.columns.end(), {"modes", "total_photons", "rate_per_mode"});
    }
    if (config.wants(OutputGroup::CapacityRatio)) {
        table.columns.insert(table.columns.end(), {"capacity", "ratio"});
    }

    for (Alphabet alphabet : config.alphabets) {
        for (int m : config.sizes) {
            const AlphabetPoint p = prepare(config, alphabet, m);
            std::vector<std::vector<Cell>> rows(grid.size());
            parallel_for(grid.size(), [&](std::size_t i) {
                const double n = grid[i];
                RateReport report;
                switch (alphabet) {
                case Alphabet::Cfsk:
                    report = rate_cfsk({.m = m,
                                        .delta_theta = p.angles.delta_theta,
                                        .delta_omega_t = p.angles.delta_omega_t},
                                       n);
                    break;
                case Alphabet::Psk:
                    report = rate_psk(m, n);
                    break;
                case Alphabet::Dcfsk:
                    report = rate_dcfsk(dcfsk_params(config, p, 0.0), *p.expansion, n);
                    break;
                }
                auto &row = rows[i];
                append_identity(row, config, p);
                row.emplace_back(n);
                if (config.wants(OutputGroup::Holevo)) {
                    row.emplace_back(report.holevo_bits);
                }
                if (config.wants(OutputGroup::Rate)) {
                    row.emplace_back(static_cast<long long>(report.modes));
                    row.emplace_back(report.total_photons);
                    row.emplace_back(report.rate_per_mode);
                }
                if (config.wants(OutputGroup::CapacityRatio)) {
                    row.emplace_back(report.capacity);
                    if (report.ratio) {
                        row.emplace_back(*report.ratio);
                    } else {
                        row.emplace_back(std::monostate{});
                    }
                }
            });
            for (auto &row : rows) {
                table.rows.push_back(std::move(row));
            }
        }
    }
    return table;
}

namespace {

Table figure_1a(const FigureOptions &options) {
    constexpr int m = 16;
    const int res = options.scan_resolution;
    Table table;
    table.columns = {"delta_theta", "delta_omega_t", "sqrt_g11", "sqrt_g22", "optimality_gap"};
    table.rows.resize(static_cast<std::size_t>(res) * static_cast<std::size_t>(res));
    parallel_for(table.rows.size(), [&](std::size_t idx) {
        const double theta = kTwoPi * static_cast<double>(idx / static_cast<std::size_t>(res)) / res;
        const double omega = kTwoPi * static_cast<double>(idx % static_cast<std::size_t>(res)) / res;
        const auto srm = srm_success(
            gram_cfsk({.m = m, .delta_theta = theta, .delta_omega_t = omega, .total_photons = kFigureOneEnergy}));
        const auto gap = srm_optimality_gap(srm.sqrt_diag);
        table.rows[idx] = {theta, omega, srm.sqrt_diag[0], srm.sqrt_diag[1], gap.gap};
    });
    return table;
}

Table figure_1b(const FigureOptions &options) {
    SweepConfig config;
    config.alphabets = {Alphabet::Cfsk};
    config.sizes = {16};
    config.tuning_resolution = options.tuning_resolution;
    config.tuning_photons = kFigureOneEnergy;
    config.energy_grid = options.energy_grid;
    config.outputs = {OutputGroup::Srm, OutputGroup::Bounds};
    config.companion_psk = true;
    return discriminate_table(config);
}

Table figure_rates(const FigureOptions &options, Alphabet alphabet) {
    SweepConfig config;
    config.alphabets = {alphabet, Alphabet::Psk};
    config.sizes = {2, 4, 8, 16};
    config.l = 1;
    config.tuning_resolution = options.tuning_resolution;
    config.energy_grid = options.energy_grid;
    if (alphabet == Alphabet::Dcfsk) {
        config.delta_omega_t = kDcfskShape;
    }
    return rates_table(config);
}

Table figure_3(const FigureOptions &options) {
    constexpr int m = 4;
    std::vector<double> storage;
    SweepConfig base;
    base.energy_grid = options.energy_grid;
    const auto &energies = grid_of(base, storage);

    TuningOptions tuning;
    tuning.resolution = options.tuning_resolution;
    tuning.fixed_delta_omega_t = kDcfskShape;
    const auto tuned = grid_optimize(m, kFigureOneEnergy * m, Objective::SrmSuccess, tuning);

    Table table;
    table.columns = {"l", "delta_theta", "delta_omega_t", "energy", "p_srm_dcfsk", "p_srm_cfsk", "ratio"};
    for (int l : {1, 2}) {
        const auto expansion = fourier_coefficients(m, l, kDcfskShape);
        std::vector<std::vector<Cell>> rows(energies.size());
        parallel_for(energies.size(), [&](std::size_t i) {
            const double e = energies[i];
            const double pd = srm_success(gram_dcfsk({.m = m,
                                                      .l = l,
                                                      .delta_theta = tuned.best_delta_theta,
                                                      .delta_omega_t = kDcfskShape,
                                                      .total_photons = e},
                                                     expansion))
                                  .p_srm;
            const double pc = srm_success(gram_cfsk({.m = m,
                                                     .delta_theta = tuned.best_delta_theta,
                                                     .delta_omega_t = kDcfskShape,
                                                     .total_photons = e}))
                                  .p_srm;
            rows[i] = {static_cast<long long>(l), tuned.best_delta_theta, kDcfskShape, e, pd, pc, pd / pc};
        });
        for (auto &row : rows) {
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

} // namespace

std::vector<std::pair<std::string, Table>> figure_tables(std::string_view id, const FigureOptions &options) {
    std::vector<std::pair<std::string, Table>> out;
    if (id == "1a") {
        out.emplace_back("figure_1a.csv", figure_1a(options));
    } else if (id == "1b") {
        out.emplace_back("figure_1b.csv", figure_1b(options));
    } else if (id == "2") {
        out.emplace_back("figure_2.csv", figure_rates(options, Alphabet::Cfsk));
    } else if (id == "3") {
        out.emplace_back("figure_3.csv", figure_3(options));
    } else if (id == "4") {
        out.emplace_back("figure_4.csv", figure_rates(options, Alphabet::Dcfsk));
    } else {
        throw ConfigError("unknown figure id '" + std::string(id) + "' (expected 1a, 1b, 2, 3 or 4)");
    }
    return out;
}

} // namespace cfsk::cli
