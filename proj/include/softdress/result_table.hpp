#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace softdress {

inline constexpr const char* kToolVersion = "0.1.0";

// Rectangular table of reals with a provenance header. Deterministic row
// order; identical config and version produce identical bytes.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> meta;  // config_hash, tool_version, subcommand

    void add_row(std::vector<double> row)
    {
        if (row.size() != columns.size())
            throw std::invalid_argument("ResultTable: row width does not match columns");
        rows.push_back(std::move(row));
    }
};

namespace detail {

// scientific notation, 12 significant mantissa digits
inline std::string format_real(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", x);
    return buf;
}

}  // namespace detail

inline std::string write_csv(const ResultTable& t)
{
    std::ostringstream os;
    for (const auto& [k, v] : t.meta) os << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << detail::format_real(row[i]);
        os << "\n";
    }
    return os.str();
}

inline std::string write_json(const ResultTable& t)
{
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (double x : row) r.push_back(detail::format_real(x));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["meta"] = t.meta;
    return j.dump(2) + "\n";
}

inline std::string write_output(const ResultTable& t, const std::string& format)
{
    if (format == "csv") return write_csv(t);
    if (format == "json") return write_json(t);
    throw std::invalid_argument("write_output: format must be csv or json");
}

}  // namespace softdress
