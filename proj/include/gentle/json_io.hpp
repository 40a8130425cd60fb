#pragma once
// JSON views of the library types. All output is deterministic: phi entries
// come out sorted, series as plain coefficient arrays (low degree first).

#include <limits>

#include <json.hpp>

#include "gentle/ag_invariant.hpp"
#include "gentle/cochain.hpp"
#include "gentle/series.hpp"

namespace gentle {

using Json = nlohmann::ordered_json;

inline long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("coefficient does not fit in 64 bits");
    return v.convert_to<long long>();
}

// sorted array of [n, m, multiplicity]
inline Json phi_to_json(const PhiInvariant& phi_inv) {
    Json arr = Json::array();
    for (const auto& [key, mult] : phi_inv.entries)
        arr.push_back({key.first, key.second, mult});
    return arr;
}

inline Json dims_to_json(const DimSeries& d) {
    return Json{{"characteristic", d.characteristic}, {"dims", d.dims}};
}

inline Json series_to_json(const TruncSeries& s) {
    Json arr = Json::array();
    for (const auto& c : s.c) arr.push_back(to_int64(c));
    return arr;
}

inline Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    if (p.is_zero()) return Json::array({0});
    for (const auto& c : p.c) arr.push_back(to_int64(c));
    return arr;
}

inline Json rational_form_to_json(const RationalSeriesForm& f) {
    return Json{{"numerator", poly_to_json(f.numerator)},
                {"denominator", poly_to_json(f.denominator)}};
}

}  // namespace gentle
