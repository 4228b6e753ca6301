#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/mpoly.hpp"
#include "qharm/rational.hpp"

namespace qharm {

// graded scan order: by total degree, then lexicographically larger d first
struct GradedOrder {
    bool operator()(const MultiDegree& a, const MultiDegree& b) const {
        int ta = total_degree(a), tb = total_degree(b);
        if (ta != tb) return ta < tb;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

using HilbertData = std::map<MultiDegree, long, GradedOrder>;

// D_W(t) = prod_{k=1..n} (t^{km} - 1)/(t - 1), expanded; value at t=1 is m^n n!.
inline std::vector<Int> hilbert_product_formula(int m, int n) {
    std::vector<Int> acc{Int(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Int> factor(static_cast<size_t>(k * m), Int(1));  // 1 + t + ... + t^{km-1}
        std::vector<Int> next(acc.size() + factor.size() - 1, Int(0));
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < factor.size(); ++j) next[i + j] += acc[i] * factor[j];
        acc = std::move(next);
    }
    return acc;
}

inline std::string series_to_string(const std::vector<Int>& coeffs) {
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::string term;
        if (i == 0)
            term = coeffs[i].get_str();
        else {
            std::string var = (i == 1) ? "t" : ("t^" + std::to_string(i));
            term = (coeffs[i] == 1) ? var : coeffs[i].get_str() + var;
        }
        if (!first) out += "+";
        out += term;
        first = false;
    }
    return first ? "0" : out;
}

namespace detail {

// partitions of k with at most l parts, lexicographically descending
inline std::vector<std::vector<int>> partitions_max_parts(int k, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == l) return;
        for (int part = std::min(rem, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// h_lambda as a polynomial in l variables: map exponent vector -> coefficient
inline std::map<std::vector<int>, Int> h_lambda_poly(const std::vector<int>& lambda, int l) {
    std::map<std::vector<int>, Int> acc{{std::vector<int>(static_cast<size_t>(l), 0), Int(1)}};
    Shape s{1, l};
    for (int part : lambda) {
        std::map<std::vector<int>, Int> next;
        for (const auto& mono : monomials_of_multidegree(s, {part}))
            for (const auto& [e, c] : acc) {
                std::vector<int> e2 = e;
                for (int i = 0; i < l; ++i) e2[static_cast<size_t>(i)] += mono[static_cast<size_t>(i)];
                next[e2] += c;
            }
        acc = std::move(next);
    }
    return acc;
}

// exact dense linear solve A x = b over the rationals (A square nonsingular)
inline std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) throw Error("solve_rational: singular matrix");
        std::swap(a[sel], a[col]);
        std::swap(b[sel], b[col]);
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = b[i] / a[i][i];
        x[i].canonicalize();
    }
    return x;
}

inline std::string h_term_name(const std::vector<int>& lambda) {
    bool wide = false;
    for (int p : lambda)
        if (p >= 10) wide = true;
    std::string out = "h";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i && wide) out += ",";
        out += std::to_string(lambda[i]);
    }
    return out;
}

}  // namespace detail

// The unique expansion of an S_l-symmetric Hilbert series in products of
// complete homogeneous symmetric polynomials h_lambda (partitions with at
// most l parts), found per degree by exact linear solve in the monomial
// symmetric coordinates. Canonical term order: total degree ascending, then
// lexicographically smaller partition first (so h11 precedes h2).
inline std::string hbasis_expression(const HilbertData& hilbert, int l) {
    // symmetry check: every multidegree agrees with its sorted representative
    auto dim_at = [&](const MultiDegree& d) -> long {
        auto it = hilbert.find(d);
        return it == hilbert.end() ? 0 : it->second;
    };
    int maxdeg = 0;
    for (const auto& [d, dim] : hilbert) {
        if (dim == 0) continue;
        if (static_cast<int>(d.size()) != l) throw ShapeMismatch("hbasis: multidegree length");
        maxdeg = std::max(maxdeg, total_degree(d));
        MultiDegree sorted = d;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (dim_at(sorted) != dim)
            throw NotSymmetric("Hilbert data is not symmetric under permuting degree axes");
    }
    std::string out;
    long c0 = dim_at(MultiDegree(static_cast<size_t>(l), 0));
    if (c0 != 0) out = std::to_string(c0);
    for (int k = 1; k <= maxdeg; ++k) {
        std::vector<std::vector<int>> parts = detail::partitions_max_parts(k, l);
        std::reverse(parts.begin(), parts.end());
        size_t np = parts.size();
        // coordinates: monomial symmetric functions indexed by the same partitions
        std::vector<std::vector<Rat>> a(np, std::vector<Rat>(np, Rat(0)));
        std::vector<Rat> b(np, Rat(0));
        for (size_t col = 0; col < np; ++col) {
            auto poly = detail::h_lambda_poly(parts[col], l);
            for (const auto& [e, c] : poly) {
                std::vector<int> sorted = e;
                std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
                auto it = std::find(parts.begin(), parts.end(), sorted);
                if (it == parts.end()) continue;  // counted once per m-orbit
                // record the coefficient at the sorted-descending exponent only
                std::vector<int> rep(sorted);
                rep.resize(static_cast<size_t>(l), 0);
                if (e == rep) a[static_cast<size_t>(it - parts.begin())][col] = Rat(c);
            }
        }
        for (size_t rowi = 0; rowi < np; ++rowi) {
            std::vector<int> rep = parts[rowi];
            rep.resize(static_cast<size_t>(l), 0);
            b[rowi] = Rat(dim_at(rep));
        }
        std::vector<Rat> x = detail::solve_rational(std::move(a), std::move(b));
        for (size_t i = 0; i < np; ++i) {
            if (x[i] == 0) continue;
            std::string coef;
            if (x[i] != 1) coef = rat_to_string(x[i]);
            std::string term = coef + detail::h_term_name(parts[i]);
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace qharm
