#pragma once

/**
 * @file
 * Command-line front end: sweep configuration, tabular output and the
 * `gram` / `discriminate` / `rates` / `optimize` / `figures` subcommands.
 */

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cfsk/alphabet.hpp"
#include "cfsk/tuning.hpp"

namespace cfsk::cli {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitNumerical = 3,
    kExitRegime = 4,
};

enum class Alphabet { Cfsk, Psk, Dcfsk };
enum class OutputGroup { Srm, Bounds, OptimalityGap, Holevo, Rate, CapacityRatio };
enum class Format { Csv, Json };

std::string_view to_string(Alphabet alphabet) noexcept;
Alphabet parse_alphabet(std::string_view name);
OutputGroup parse_output_group(std::string_view name);
Format parse_format(std::string_view name);
PhaseOffset::Mode parse_phase_offset(std::string_view name);

/// Thrown for malformed configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    std::vector<Alphabet> alphabets{Alphabet::Cfsk};
    std::vector<int> sizes{4};
    int l = 1;
    /// Absent means "optimize".
    std::optional<double> delta_theta;
    std::optional<double> delta_omega_t;
    std::vector<double> energy_grid;
    /// Empty selects every group the command can emit.
    std::vector<OutputGroup> outputs;
    Format format = Format::Csv;
    PhaseOffset phase_offset{};
    Objective objective = Objective::SrmSuccess;
    int tuning_resolution = 64;
    /// |alpha|^2 of the CFSK alphabet at which "optimize" tunes.
    double tuning_photons = 1.0;
    bool companion_psk = false;

    [[nodiscard]] bool wants(OutputGroup group) const;
};

/// n points log-spaced over [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> default_energy_grid();
/// Throws ConfigError unless values are >= 0 and strictly increasing.
void validate_energy_grid(const std::vector<double> &grid);

/// Applies a JSON document mirroring SweepConfig onto `config`.
void apply_json_config(std::string_view json_text, SweepConfig &config);

using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    [[nodiscard]] std::size_t column(std::string_view name) const;
};

/// `value` printed like %.{digits}g, independent of the global locale.
std::string format_double(double value, int digits = 17);
void write_csv(const Table &table, std::ostream &out);
void write_json(const Table &table, std::ostream &out);
void write_table(const Table &table, Format format, std::ostream &out);

struct ResolvedAngles {
    double delta_theta = 0.0;
    double delta_omega_t = 0.0;
    bool tuned = false;
};

/// Fixed angles pass through; missing ones come from grid_optimize on the
/// CFSK alphabet of size m at config.tuning_photons.
ResolvedAngles resolve_angles(const SweepConfig &config, int m);

/// Rows (alphabet, m, l, delta_theta, delta_omega_t, energy, ...) where
/// energy is the total photon number per signal.
Table discriminate_table(const SweepConfig &config);

/// Rows (alphabet, m, l, delta_theta, delta_omega_t, n, ...) where n is the
/// photon number per mode.
Table rates_table(const SweepConfig &config);

struct FigureOptions {
    int scan_resolution = 32;
    int tuning_resolution = 64;
    std::vector<double> energy_grid;
};

inline constexpr std::string_view kFigureIds[] = {"1a", "1b", "2", "3", "4"};

/// Named tables for one figure id; throws ConfigError for unknown ids.
std::vector<std::pair<std::string, Table>> figure_tables(std::string_view id, const FigureOptions &options);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cfsk::cli
