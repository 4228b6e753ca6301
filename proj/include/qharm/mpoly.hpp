#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/ratfunc.hpp"
#include "qharm/rational.hpp"

namespace qharm {

// l sets of n variables: the l x n variable matrix X
struct Shape {
    int l = 1;
    int n = 1;
    friend bool operator==(const Shape&, const Shape&) = default;
    int vars() const { return l * n; }
};

// row-wise total degrees, one entry per set of variables
using MultiDegree = std::vector<int>;

inline int total_degree(const MultiDegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

// Exponent matrix of a monomial, row-major l x n.
using Exponents = std::vector<int>;

// Global monomial order: lexicographic on the flattened exponent matrix,
// larger vector first (x^2 before xy before y^2).
struct MonoOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

inline MultiDegree exps_multidegree(const Shape& s, const Exponents& e) {
    MultiDegree d(static_cast<size_t>(s.l), 0);
    for (int i = 0; i < s.l; ++i)
        for (int j = 0; j < s.n; ++j) d[static_cast<size_t>(i)] += e[static_cast<size_t>(i * s.n + j)];
    return d;
}

inline int column_degree(const Shape& s, const Exponents& e, int j) {
    int deg = 0;
    for (int i = 0; i < s.l; ++i) deg += e[static_cast<size_t>(i * s.n + j)];
    return deg;
}

// All l x n exponent matrices with row sums d, in the global monomial order.
// Count: prod_i C(d_i + n - 1, n - 1).
inline std::vector<Exponents> monomials_of_multidegree(const Shape& s, const MultiDegree& d) {
    if (static_cast<int>(d.size()) != s.l) throw ShapeMismatch("multidegree length");
    std::vector<std::vector<std::vector<int>>> rows;
    for (int i = 0; i < s.l; ++i) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur(static_cast<size_t>(s.n), 0);
        // compositions of d[i] into n parts
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == s.n - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                comps.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, d[static_cast<size_t>(i)]);
        rows.push_back(std::move(comps));
    }
    std::vector<Exponents> out;
    std::vector<size_t> idx(static_cast<size_t>(s.l), 0);
    for (;;) {
        Exponents e;
        e.reserve(static_cast<size_t>(s.vars()));
        for (int i = 0; i < s.l; ++i) {
            const auto& row = rows[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
            e.insert(e.end(), row.begin(), row.end());
        }
        out.push_back(std::move(e));
        int i = s.l - 1;
        while (i >= 0 && ++idx[static_cast<size_t>(i)] == rows[static_cast<size_t>(i)].size()) {
            idx[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end(), MonoOrder{});
    return out;
}

// Finitely supported map monomial -> coefficient over the shape's variables.
template <class C>
class MPoly {
public:
    using Terms = std::map<Exponents, C, MonoOrder>;

    MPoly() = default;
    explicit MPoly(Shape s) : shape_(s) {}

    static MPoly<C> constant(Shape s, const C& c) {
        MPoly<C> p(s);
        p.add_term(Exponents(static_cast<size_t>(s.vars()), 0), c);
        return p;
    }

    static MPoly<C> monomial(Shape s, Exponents e, const C& c) {
        MPoly<C> p(s);
        p.add_term(std::move(e), c);
        return p;
    }

    // variable x_{ij} (0-based row, column)
    static MPoly<C> variable(Shape s, int i, int j) {
        Exponents e(static_cast<size_t>(s.vars()), 0);
        e[static_cast<size_t>(i * s.n + j)] = 1;
        return monomial(s, std::move(e), C{1});
    }

    const Shape& shape() const { return shape_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents e, const C& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(e.size()) != shape_.vars()) throw ShapeMismatch("term exponent size");
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C{} : it->second;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.shape_ == b.shape_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_shapes(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        check_shapes(a, b);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, C{} - c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_shapes(a, b);
        MPoly r(a.shape_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e = ea;
                for (size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    MPoly scaled(const C& s) const {
        MPoly r(shape_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    // defined (the common row-sum vector) only when homogeneous
    bool is_homogeneous(MultiDegree* out = nullptr) const {
        bool first = true;
        MultiDegree d;
        for (const auto& [e, c] : terms_) {
            MultiDegree cur = exps_multidegree(shape_, e);
            if (first) {
                d = cur;
                first = false;
            } else if (cur != d) {
                return false;
            }
        }
        if (out && !first) *out = d;
        return true;
    }

private:
    Shape shape_{};
    Terms terms_;

    static void check_shapes(const MPoly& a, const MPoly& b) {
        if (!(a.shape_ == b.shape_)) throw ShapeMismatch("MPoly shapes differ");
    }
};

// x^A -> x^{rA}, an algebra morphism (coefficients unchanged)
template <class C>
MPoly<C> inflate(const MPoly<C>& f, int r) {
    MPoly<C> out(f.shape());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        for (auto& x : e2) x *= r;
        out.add_term(std::move(e2), c);
    }
    return out;
}

// Linear map sending x^A to (A!/(rA)!) x^{rA}: divided-power monomials map to
// divided-power monomials, x^{(A)} -> x^{(rA)}.
template <class C>
MPoly<C> inflate_dual(const MPoly<C>& f, int r) {
    MPoly<C> out(f.shape());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        Rat scale(1);
        for (auto& x : e2) {
            Rat fac(factorial(static_cast<unsigned long>(x)),
                    factorial(static_cast<unsigned long>(x) * static_cast<unsigned long>(r)));
            fac.canonicalize();
            scale *= fac;
            x *= r;
        }
        out.add_term(std::move(e2), c * C::from_rat(scale));
    }
    return out;
}

// Largest k with e_n^k dividing the monomial: the minimum exponent (l = 1 only).
inline int en_valuation(const Shape& s, const Exponents& e) {
    if (s.l != 1) throw NotSingleSet("en_valuation requires l = 1");
    int v = e.empty() ? 0 : e[0];
    for (int x : e) v = std::min(v, x);
    return v;
}

// minimum over the monomials of a polynomial; 0 for the zero polynomial
template <class C>
int en_valuation(const MPoly<C>& f) {
    if (f.shape().l != 1) throw NotSingleSet("en_valuation requires l = 1");
    bool first = true;
    int v = 0;
    for (const auto& [e, c] : f.terms()) {
        int ve = en_valuation(f.shape(), e);
        v = first ? ve : std::min(v, ve);
        first = false;
    }
    return v;
}

}  // namespace qharm
