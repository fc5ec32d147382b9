#pragma once

// JSON serialisation for report emission. Every rational is rendered as an
// exact "p/q" string (plain "p" when the denominator is 1), matrices as
// row-major arrays of such strings, polynomials through their canonical
// printed form. Nothing here parses JSON back; reports are write-only.

#include "slhilb/matrix.hpp"
#include "slhilb/poly.hpp"
#include "slhilb/sl2rep.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace slhilb {

using Json = nlohmann::json;

inline Json json_rational(const Rational& r) { return r.get_str(); }

inline Json json_matrix(const Mat& m) {
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(json_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json json_vector(const Vec& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(json_rational(v(i)));
    return out;
}

inline Json json_polys(const std::vector<SparsePoly>& polys) {
    Json out = Json::array();
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

inline Json json_isotypic_table(const IsotypicTable& table) {
    Json mult = Json::array();
    for (const auto& row : table.mult) mult.push_back(row);
    return Json{{"N", table.N}, {"mult", std::move(mult)}};
}

inline Json json_hilbert_function(const std::map<int, HilbertValue>& h) {
    Json out = Json::object();
    for (const auto& [d, v] : h) {
        Json entry{{"value", v.value}};
        if (v.truncation_limited) entry["truncation_limited"] = true;
        out[std::to_string(d)] = std::move(entry);
    }
    return out;
}

}  // namespace slhilb
