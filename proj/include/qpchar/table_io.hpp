#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpchar/series.hpp"

namespace qpchar {

// Coefficient tables. Rows are always in (q, y1, y2) lexicographic order and
// coefficients are decimal strings in both formats.

inline void write_csv(std::ostream& os, const TruncatedSeries& s) {
    os << "q,y1,y2,coeff\n";
    for (const auto& r : to_records(s))
        os << r.q_deg << ',' << r.y1_deg << ',' << r.y2_deg << ',' << r.coeff << '\n';
}

inline nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& r : to_records(s))
        terms.push_back({{"q", r.q_deg}, {"y1", r.y1_deg}, {"y2", r.y2_deg}, {"coeff", r.coeff}});
    return {{"qmax", s.truncation()}, {"terms", std::move(terms)}};
}

inline void write_json(std::ostream& os, const TruncatedSeries& s) { os << to_json(s).dump(2) << '\n'; }

inline std::vector<SeriesRecord> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "q,y1,y2,coeff")
        throw std::runtime_error("csv table: missing header");
    std::vector<SeriesRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        SeriesRecord r{};
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(row >> r.q_deg >> c1 >> r.y1_deg >> c2 >> r.y2_deg >> c3) || c1 != ',' ||
            c2 != ',' || c3 != ',' || !std::getline(row, r.coeff) || r.coeff.empty())
            throw std::runtime_error("csv table: malformed row '" + line + "'");
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<SeriesRecord> read_json(const nlohmann::json& j) {
    std::vector<SeriesRecord> out;
    for (const auto& t : j.at("terms"))
        out.push_back({t.at("q").get<std::uint32_t>(), t.at("y1").get<std::uint32_t>(),
                       t.at("y2").get<std::uint32_t>(), t.at("coeff").get<std::string>()});
    return out;
}

}  // namespace qpchar
