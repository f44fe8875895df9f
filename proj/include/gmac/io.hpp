#pragma once

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmac/region.hpp"
#include "gmac/sweep.hpp"

namespace gmac {

/// Locale-independent shortest round-trip formatting (std::to_chars).
inline std::string fmt_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed-precision variant for plot coordinates.
inline std::string fmt_fixed(double v, int precision) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

inline std::string region_to_csv(const RateRegion2D& region) {
    std::string out = "# R1,R2\n";
    for (const Point& v : region.vertices)
        out += fmt_double(v.r1) + "," + fmt_double(v.r2) + "\n";
    return out;
}

inline nlohmann::json region_to_json(const RateRegion2D& region) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const Point& v : region.vertices) j["vertices"].push_back({v.r1, v.r2});
    return j;
}

inline RateRegion2D region_from_json(const nlohmann::json& j) {
    RateRegion2D r;
    for (const auto& v : j.at("vertices")) r.vertices.push_back({v.at(0), v.at(1)});
    return r;
}

inline std::string trace_to_csv(const TraceResult& t) {
    std::string out = "# mu";
    for (const std::string& n : t.axis_names) out += "," + n;
    out += ",R1,R2\n";
    for (const TraceRow& row : t.rows) {
        out += fmt_double(row.mu);
        for (double v : row.values) out += "," + fmt_double(v);
        out += "," + fmt_double(row.point.r1) + "," + fmt_double(row.point.r2) + "\n";
    }
    return out;
}

inline std::string sir_rows_to_csv(const std::vector<SirRow>& rows) {
    std::string out = "# sir_db,q_db,sum_rate,full_cooperation,no_cooperation\n";
    for (const SirRow& r : rows)
        out += fmt_double(r.sir_db) + "," + fmt_double(r.q_db) + "," + fmt_double(r.best) + "," +
               fmt_double(r.full_coop) + "," + fmt_double(r.no_coop) + "\n";
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

} // namespace gmac
