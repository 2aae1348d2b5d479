#include <array>
#include <charconv>
#include <ostream>

#include <json.hpp>

#include "cfsk/cli.hpp"

namespace cfsk::cli {

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

struct CsvCell {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string &s) const { return csv_field(s); }
};

struct JsonCell {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string &s) const { return s; }
};

} // namespace

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column '" + std::string(name) + "'");
}

std::string format_double(double value, int digits) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
    return {buf.data(), res.ptr};
}

void write_csv(const Table &table, std::ostream &out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(table.columns[i]);
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        }
        out << '\n';
    }
}

void write_json(const Table &table, std::ostream &out) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = std::visit(JsonCell{}, row[i]);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

void write_table(const Table &table, Format format, std::ostream &out) {
    if (format == Format::Json) {
        write_json(table, out);
    } else {
        write_csv(table, out);
    }
}

} // namespace cfsk::cli
