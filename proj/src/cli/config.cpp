#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <string>

#include <json.hpp>

#include "cfsk/cli.hpp"
#include "cfsk/error.hpp"

namespace cfsk::cli {

namespace {

using nlohmann::json;

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    std::replace(out.begin(), out.end(), '-', '_');
    return out;
}

std::optional<double> angle_setting(const json &value, const char *key) {
    if (value.is_string()) {
        if (upper(value.get<std::string>()) == "OPTIMIZE") {
            return std::nullopt;
        }
        throw ConfigError(std::string(key) + " must be a number or \"optimize\"");
    }
    if (!value.is_number()) {
        throw ConfigError(std::string(key) + " must be a number or \"optimize\"");
    }
    return value.get<double>();
}

template <class T, class F> std::vector<T> one_or_many(const json &value, F &&convert) {
    std::vector<T> out;
    if (value.is_array()) {
        for (const auto &item : value) {
            out.push_back(convert(item));
        }
    } else {
        out.push_back(convert(value));
    }
    return out;
}

int as_int(const json &value, const char *key) {
    if (!value.is_number_integer()) {
        throw ConfigError(std::string(key) + " must be an integer");
    }
    return value.get<int>();
}

} // namespace

std::string_view to_string(Alphabet alphabet) noexcept {
    switch (alphabet) {
    case Alphabet::Cfsk:
        return "cfsk";
    case Alphabet::Psk:
        return "psk";
    case Alphabet::Dcfsk:
        return "dcfsk";
    }
    return "unknown";
}

Alphabet parse_alphabet(std::string_view name) {
    const auto key = upper(name);
    if (key == "CFSK") {
        return Alphabet::Cfsk;
    }
    if (key == "PSK") {
        return Alphabet::Psk;
    }
    if (key == "DCFSK") {
        return Alphabet::Dcfsk;
    }
    throw ConfigError("unknown alphabet '" + std::string(name) + "' (expected cfsk, psk or dcfsk)");
}

OutputGroup parse_output_group(std::string_view name) {
    const auto key = upper(name);
    if (key == "SRM") {
        return OutputGroup::Srm;
    }
    if (key == "BOUNDS") {
        return OutputGroup::Bounds;
    }
    if (key == "OPTIMALITY_GAP") {
        return OutputGroup::OptimalityGap;
    }
    if (key == "HOLEVO") {
        return OutputGroup::Holevo;
    }
    if (key == "RATE") {
        return OutputGroup::Rate;
    }
    if (key == "CAPACITY_RATIO") {
        return OutputGroup::CapacityRatio;
    }
    throw ConfigError("unknown output '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
    const auto key = upper(name);
    if (key == "CSV") {
        return Format::Csv;
    }
    if (key == "JSON") {
        return Format::Json;
    }
    throw ConfigError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

PhaseOffset::Mode parse_phase_offset(std::string_view name) {
    const auto key = upper(name);
    if (key == "CFSK_MATCHED" || key == "MATCHED") {
        return PhaseOffset::Mode::CfskMatched;
    }
    if (key == "HALF_PI") {
        return PhaseOffset::Mode::HalfPi;
    }
    if (key == "EXPLICIT") {
        return PhaseOffset::Mode::Explicit;
    }
    throw ConfigError("unknown phase offset mode '" + std::string(name) + "'");
}

bool SweepConfig::wants(OutputGroup group) const {
    return outputs.empty() || std::find(outputs.begin(), outputs.end(), group) != outputs.end();
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (points < 1 || !(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
        throw ConfigError("log-spaced grid needs 0 < min <= max and points >= 1");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        out.push_back(lo);
        return out;
    }
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < points; ++i) {
        out.push_back(i == points - 1 ? hi : std::pow(10.0, a + (b - a) * i / (points - 1)));
    }
    return out;
}

std::vector<double> default_energy_grid() { return log_grid(0.01, 10.0, 40); }

void validate_energy_grid(const std::vector<double> &grid) {
    if (grid.empty()) {
        throw ConfigError("energy grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || grid[i] < 0.0) {
            throw ConfigError("energy grid values must be finite and >= 0");
        }
        if (i > 0 && !(grid[i] > grid[i - 1])) {
            throw ConfigError("energy grid must be strictly increasing");
        }
    }
}

void apply_json_config(std::string_view json_text, SweepConfig &config) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const std::set<std::string> known{
        "alphabet",     "M",           "L",                  "delta_theta", "delta_omega_T",
        "energy_grid",  "outputs",     "format",             "phase_offset", "phase_offset_value",
        "objective",    "tuning_resolution", "tuning_photons", "companion_psk"};
    for (const auto &[key, _] : doc.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    try {
        if (doc.contains("alphabet")) {
            config.alphabets = one_or_many<Alphabet>(doc["alphabet"], [](const json &v) {
                return parse_alphabet(v.get<std::string>());
            });
        }
        if (doc.contains("M")) {
            config.sizes = one_or_many<int>(doc["M"], [](const json &v) { return as_int(v, "M"); });
        }
        if (doc.contains("L")) {
            config.l = as_int(doc["L"], "L");
        }
        if (doc.contains("delta_theta")) {
            config.delta_theta = angle_setting(doc["delta_theta"], "delta_theta");
        }
        if (doc.contains("delta_omega_T")) {
            config.delta_omega_t = angle_setting(doc["delta_omega_T"], "delta_omega_T");
        }
        if (doc.contains("energy_grid")) {
            const auto &grid = doc["energy_grid"];
            if (grid.is_array()) {
                config.energy_grid = grid.get<std::vector<double>>();
            } else if (grid.is_object()) {
                config.energy_grid = log_grid(grid.at("min").get<double>(), grid.at("max").get<double>(),
                                              grid.at("points").get<int>());
            } else {
                throw ConfigError("energy_grid must be a list or {min, max, points}");
            }
        }
        if (doc.contains("outputs")) {
            config.outputs = one_or_many<OutputGroup>(doc["outputs"], [](const json &v) {
                return parse_output_group(v.get<std::string>());
            });
        }
        if (doc.contains("format")) {
            config.format = parse_format(doc["format"].get<std::string>());
        }
        if (doc.contains("phase_offset")) {
            config.phase_offset.mode = parse_phase_offset(doc["phase_offset"].get<std::string>());
        }
        if (doc.contains("phase_offset_value")) {
            config.phase_offset.value = doc["phase_offset_value"].get<double>();
        }
        if (doc.contains("objective")) {
            config.objective = parse_objective(doc["objective"].get<std::string>());
        }
        if (doc.contains("tuning_resolution")) {
            config.tuning_resolution = as_int(doc["tuning_resolution"], "tuning_resolution");
        }
        if (doc.contains("tuning_photons")) {
            config.tuning_photons = doc["tuning_photons"].get<double>();
        }
        if (doc.contains("companion_psk")) {
            config.companion_psk = doc["companion_psk"].get<bool>();
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    } catch (const cfsk::Error &e) {
        throw ConfigError(e.what());
    }
}

} // namespace cfsk::cli
