#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qharm/cyclotomic.hpp"
#include "qharm/errors.hpp"
#include "qharm/matrix.hpp"
#include "qharm/mpoly.hpp"

namespace qharm {

// G(m,p,n): monomial n x n matrices with m-th root-of-unity entries whose
// exponent sum is divisible by p. p must divide m; G(m,1,n) = G(m,n).
struct GroupSpec {
    int m = 1;
    int p = 1;
    int n = 1;

    GroupSpec() = default;
    GroupSpec(int m_, int p_, int n_) : m(m_), p(p_), n(n_) {
        if (m < 1 || p < 1 || n < 1 || m % p != 0) throw Error("GroupSpec: p must divide m");
    }

    Int order() const {
        Int o = factorial(static_cast<unsigned long>(n));
        for (int i = 0; i < n; ++i) o *= m;
        return o / p;
    }
};

// (sigma, c): x_{ij} |-> zeta^{c_j} x_{i sigma(j)}, sigma in one-line notation
// (0-based), c_j in Z_m with sum c_j = 0 (mod p).
struct GroupElement {
    std::vector<int> perm;
    std::vector<int> zeta_exps;

    bool is_identity() const {
        for (size_t j = 0; j < perm.size(); ++j)
            if (perm[j] != static_cast<int>(j) || zeta_exps[j] != 0) return false;
        return true;
    }

    // "(one-line permutation, 1-based | zeta exponents)"
    std::string label() const {
        std::string out = "(";
        for (size_t j = 0; j < perm.size(); ++j) out += (j ? " " : "") + std::to_string(perm[j] + 1);
        out += " | ";
        for (size_t j = 0; j < zeta_exps.size(); ++j) out += (j ? " " : "") + std::to_string(zeta_exps[j]);
        return out + ")";
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// group law: (a b)(x) = a(b(x)) as actions on polynomials
inline GroupElement compose(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    size_t n = a.perm.size();
    GroupElement r;
    r.perm.resize(n);
    r.zeta_exps.resize(n);
    for (size_t j = 0; j < n; ++j) {
        // x_j -> (by b) zeta^{b.c_j} x_{b.perm(j)} -> (by a) ...
        r.perm[j] = a.perm[static_cast<size_t>(b.perm[j])];
        r.zeta_exps[j] = (b.zeta_exps[j] + a.zeta_exps[static_cast<size_t>(b.perm[j])]) % g.m;
    }
    return r;
}

// All elements, deterministically ordered (identity first): permutations in
// lexicographic order, exponent vectors in lexicographic order within each.
inline std::vector<GroupElement> enumerate(const GroupSpec& spec, long limit = 100000) {
    if (spec.order() > limit)
        throw TooLarge("group order " + spec.order().get_str() + " exceeds limit " + std::to_string(limit));
    std::vector<GroupElement> out;
    std::vector<int> perm(static_cast<size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> exps(static_cast<size_t>(spec.n), 0);
        for (;;) {
            int sum = std::accumulate(exps.begin(), exps.end(), 0);
            if (sum % spec.p == 0) out.push_back(GroupElement{perm, exps});
            int j = spec.n - 1;
            while (j >= 0 && ++exps[static_cast<size_t>(j)] == spec.m) {
                exps[static_cast<size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Diagonal action w . f(X) = f(X w): permutes columns and scales by roots of
// unity; a degree-preserving algebra automorphism.
template <class C>
MPoly<CycElem> act(const GroupSpec& g, const GroupElement& w, const MPoly<C>& f) {
    const Shape& s = f.shape();
    if (static_cast<int>(w.perm.size()) != s.n) throw ShapeMismatch("act: rank mismatch");
    MPoly<CycElem> out(s);
    for (const auto& [e, c] : f.terms()) {
        Exponents e2(e.size(), 0);
        long zexp = 0;
        for (int j = 0; j < s.n; ++j) {
            int tgt = w.perm[static_cast<size_t>(j)];
            for (int i = 0; i < s.l; ++i)
                e2[static_cast<size_t>(i * s.n + tgt)] = e[static_cast<size_t>(i * s.n + j)];
            zexp += static_cast<long>(w.zeta_exps[static_cast<size_t>(j)]) * column_degree(s, e, j);
        }
        out.add_term(std::move(e2), CycElem{c} * CycElem::zeta_power(g.m, zexp));
    }
    return out;
}

// Trace of w on the span of `basis`, by exact linear solve; the basis must be
// w-stable (NotStable otherwise). Empty basis has trace 0.
inline CycElem graded_trace(const GroupSpec& g, const GroupElement& w,
                            const std::vector<MPoly<RatFuncQ>>& basis) {
    if (basis.empty()) return CycElem();
    const Shape& s = basis.front().shape();
    // common monomial support of basis and images
    std::map<Exponents, size_t, MonoOrder> index;
    std::vector<MPoly<CycElem>> images;
    images.reserve(basis.size());
    for (const auto& b : basis) {
        for (const auto& [e, c] : b.terms()) index.emplace(e, 0);
        images.push_back(act(g, w, b));
    }
    for (const auto& img : images)
        for (const auto& [e, c] : img.terms()) index.emplace(e, 0);
    size_t row = 0;
    for (auto& [e, i] : index) i = row++;
    ExactMatrix<CycElem> bm(index.size(), basis.size());
    ExactMatrix<CycElem> rhs(index.size(), basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        for (const auto& [e, c] : basis[k].terms()) bm.at(index.at(e), k) = CycElem{c};
        for (const auto& [e, c] : images[k].terms()) rhs.at(index.at(e), k) = c;
    }
    std::vector<std::vector<CycElem>> sols = solve_in_span(bm, rhs);
    CycElem tr;
    for (size_t k = 0; k < basis.size(); ++k) tr += sols[k][k];
    return tr;
}

}  // namespace qharm
