#pragma once

#include <string>

#include "json.hpp"
#include "qharm/mpoly.hpp"
#include "qharm/ratfunc.hpp"

namespace qharm {

using nlohmann::json;

// {"l":., "n":., "terms":[{"exp":[[row-major]], "coef":"(...)/(...)"}, ...]},
// terms in the global monomial order; bit-exact round trip.
inline json mpoly_to_json(const MPoly<RatFuncQ>& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json rows = json::array();
        for (int i = 0; i < f.shape().l; ++i) {
            json row = json::array();
            for (int j = 0; j < f.shape().n; ++j) row.push_back(e[static_cast<size_t>(i * f.shape().n + j)]);
            rows.push_back(std::move(row));
        }
        terms.push_back({{"exp", std::move(rows)}, {"coef", c.to_string()}});
    }
    return {{"l", f.shape().l}, {"n", f.shape().n}, {"terms", std::move(terms)}};
}

inline MPoly<RatFuncQ> mpoly_from_json(const json& j) {
    Shape s{j.at("l").get<int>(), j.at("n").get<int>()};
    MPoly<RatFuncQ> f(s);
    for (const auto& t : j.at("terms")) {
        Exponents e;
        e.reserve(static_cast<size_t>(s.vars()));
        for (const auto& row : t.at("exp"))
            for (const auto& x : row) e.push_back(x.get<int>());
        f.add_term(std::move(e), RatFuncQ::from_string(t.at("coef").get<std::string>()));
    }
    return f;
}

}  // namespace qharm
