#pragma once

#include <map>
#include <string>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/qpoly.hpp"
#include "qharm/ratfunc.hpp"

namespace qharm {

// m-th cyclotomic polynomial over Z, ascending coefficients, monic.
inline const std::vector<Int>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by the product of Phi_d over proper divisors d
    QPoly num = QPoly::monomial(Int(1), m) - QPoly(Int(1));
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<Int>& cd = cyclotomic_polynomial(d);
        num = qpoly_div_exact(num, QPoly(cd));
    }
    return cache.emplace(m, num.coeffs()).first->second;
}

inline int cyclotomic_degree(int m) {
    return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

// Element of Q(zeta_m)(q), coordinates in the power basis 1, zeta, ...,
// zeta^{deg(Phi_m)-1} over Q(q). Order 1 doubles as the plain Q(q) scalar and
// promotes silently; distinct orders > 1 do not mix.
class CycElem {
public:
    CycElem() : m_(1), a_(1, RatFuncQ()) {}
    explicit CycElem(long v) : m_(1), a_(1, RatFuncQ(v)) {}
    explicit CycElem(const RatFuncQ& v) : m_(1), a_(1, v) {}
    CycElem(int m, std::vector<RatFuncQ> coords) : m_(m), a_(std::move(coords)) {
        if (static_cast<int>(a_.size()) != cyclotomic_degree(m_))
            throw ShapeMismatch("CycElem: coordinate count");
    }

    static CycElem zero() { return CycElem(); }
    static CycElem one() { return CycElem(1); }
    static CycElem from_rat(const Rat& v) { return CycElem(RatFuncQ(v)); }

    // primitive m-th root of unity
    static CycElem zeta(int m) {
        int d = cyclotomic_degree(m);
        std::vector<RatFuncQ> a(static_cast<size_t>(d), RatFuncQ());
        if (m == 1)
            a[0] = RatFuncQ(1);
        else if (m == 2)
            a[0] = RatFuncQ(-1);
        else
            a[1] = RatFuncQ(1);
        return CycElem(m, std::move(a));
    }

    static CycElem zeta_power(int m, long e) {
        long r = e % m;
        if (r < 0) r += m;
        CycElem acc = promote_const(RatFuncQ(1), m);
        CycElem z = zeta(m);
        for (long i = 0; i < r; ++i) acc = acc * z;
        return acc;
    }

    int order() const { return m_; }
    const std::vector<RatFuncQ>& coords() const { return a_; }

    bool is_zero() const {
        for (const auto& c : a_)
            if (!c.is_zero()) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < a_.size(); ++i)
            if (!a_[i].is_zero()) return false;
        return true;
    }

    // the coordinate on 1; meaningful when is_rational()
    const RatFuncQ& rational_part() const { return a_[0]; }

    friend bool operator==(const CycElem& x, const CycElem& y) {
        auto [a, b] = align(x, y);
        return a.a_ == b.a_;
    }
    friend bool operator!=(const CycElem& x, const CycElem& y) { return !(x == y); }

    friend CycElem operator+(const CycElem& x, const CycElem& y) {
        auto [a, b] = align(x, y);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend CycElem operator-(const CycElem& x, const CycElem& y) {
        auto [a, b] = align(x, y);
        for (size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend CycElem operator-(const CycElem& x) {
        CycElem r = x;
        for (auto& c : r.a_) c = -c;
        return r;
    }
    friend CycElem operator*(const CycElem& x, const CycElem& y) {
        auto [a, b] = align(x, y);
        size_t d = a.a_.size();
        std::vector<RatFuncQ> conv(2 * d - 1, RatFuncQ());
        for (size_t i = 0; i < d; ++i) {
            if (a.a_[i].is_zero()) continue;
            for (size_t j = 0; j < d; ++j)
                if (!b.a_[j].is_zero()) conv[i + j] += a.a_[i] * b.a_[j];
        }
        reduce_mod_phi(conv, a.m_);
        conv.resize(d);
        return CycElem(a.m_, std::move(conv));
    }
    friend CycElem operator/(const CycElem& x, const CycElem& y) { return x * y.inverse(); }

    CycElem& operator+=(const CycElem& y) { return *this = *this + y; }
    CycElem& operator-=(const CycElem& y) { return *this = *this - y; }
    CycElem& operator*=(const CycElem& y) { return *this = *this * y; }

    // inverse via the extended Euclidean algorithm in Q(q)[z] modulo Phi_m
    CycElem inverse() const {
        if (is_zero()) throw Error("CycElem: inverse of zero");
        if (is_rational()) {
            CycElem r = *this;
            r.a_[0] = a_[0].inverse();
            for (size_t i = 1; i < r.a_.size(); ++i) r.a_[i] = RatFuncQ();
            return r;
        }
        std::vector<RatFuncQ> phi = phi_over_field(m_);
        std::vector<RatFuncQ> a = a_;
        poly_trim(a);
        // r0 = phi, r1 = a; s0 = 0, s1 = 1; invariant s_i * a = r_i (mod phi)
        std::vector<RatFuncQ> r0 = phi, r1 = a;
        std::vector<RatFuncQ> s0, s1{RatFuncQ(1)};
        while (poly_deg(r1) > 0) {
            auto [quo, rem] = poly_divmod(r0, r1);
            std::vector<RatFuncQ> s2 = poly_sub(s0, poly_mul(quo, s1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.empty()) throw Error("CycElem: not invertible");
        RatFuncQ g = r1[0];
        std::vector<RatFuncQ> inv = s1;
        for (auto& c : inv) c /= g;
        auto [q2, rem2] = poly_divmod(inv, phi);
        (void)q2;
        rem2.resize(a_.size(), RatFuncQ());
        return CycElem(m_, std::move(rem2));
    }

    // Galois conjugate zeta -> zeta^k, for gcd(k, m) = 1
    CycElem galois(int k) const {
        CycElem zk = zeta_power(m_, k);
        CycElem acc = promote_const(RatFuncQ(), m_);
        CycElem pw = promote_const(RatFuncQ(1), m_);
        for (size_t i = 0; i < a_.size(); ++i) {
            if (!a_[i].is_zero()) acc += promote_const(a_[i], m_) * pw;
            pw = pw * zk;
        }
        return acc;
    }

    std::vector<std::string> coord_strings() const {
        std::vector<std::string> out;
        out.reserve(a_.size());
        for (const auto& c : a_) out.push_back(c.to_string());
        return out;
    }

private:
    int m_;
    std::vector<RatFuncQ> a_;

    static CycElem promote_const(const RatFuncQ& v, int m) {
        std::vector<RatFuncQ> a(static_cast<size_t>(cyclotomic_degree(m)), RatFuncQ());
        a[0] = v;
        return CycElem(m, std::move(a));
    }

    static std::pair<CycElem, CycElem> align(const CycElem& x, const CycElem& y) {
        if (x.m_ == y.m_) return {x, y};
        if (x.m_ == 1 && x.is_rational()) return {promote_const(x.a_[0], y.m_), y};
        if (y.m_ == 1 && y.is_rational()) return {x, promote_const(y.a_[0], x.m_)};
        if (x.m_ == 2 && x.is_rational()) return {promote_const(x.a_[0], y.m_), y};
        if (y.m_ == 2 && y.is_rational()) return {x, promote_const(y.a_[0], x.m_)};
        throw OrderMismatch("orders " + std::to_string(x.m_) + " and " + std::to_string(y.m_));
    }

    static std::vector<RatFuncQ> phi_over_field(int m) {
        const std::vector<Int>& c = cyclotomic_polynomial(m);
        std::vector<RatFuncQ> out;
        out.reserve(c.size());
        for (const auto& x : c) out.emplace_back(x);
        return out;
    }

    static void reduce_mod_phi(std::vector<RatFuncQ>& v, int m) {
        const std::vector<Int>& phi = cyclotomic_polynomial(m);
        size_t d = phi.size() - 1;  // Phi is monic of degree d
        for (size_t k = v.size(); k-- > d;) {
            if (v[k].is_zero()) continue;
            RatFuncQ c = v[k];
            for (size_t j = 0; j <= d; ++j) {
                if (phi[j] == 0) continue;
                v[k - d + j] -= c * RatFuncQ(phi[j]);
            }
        }
    }

    // small dense polynomial helpers over Q(q)
    static int poly_deg(const std::vector<RatFuncQ>& p) { return static_cast<int>(p.size()) - 1; }
    static void poly_trim(std::vector<RatFuncQ>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    }
    static std::vector<RatFuncQ> poly_mul(const std::vector<RatFuncQ>& a, const std::vector<RatFuncQ>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<RatFuncQ> c(a.size() + b.size() - 1, RatFuncQ());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                if (!a[i].is_zero() && !b[j].is_zero()) c[i + j] += a[i] * b[j];
        poly_trim(c);
        return c;
    }
    static std::vector<RatFuncQ> poly_sub(const std::vector<RatFuncQ>& a, const std::vector<RatFuncQ>& b) {
        std::vector<RatFuncQ> c(std::max(a.size(), b.size()), RatFuncQ());
        for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
        poly_trim(c);
        return c;
    }
    static std::pair<std::vector<RatFuncQ>, std::vector<RatFuncQ>> poly_divmod(
        std::vector<RatFuncQ> a, const std::vector<RatFuncQ>& b) {
        poly_trim(a);
        std::vector<RatFuncQ> bb = b;
        poly_trim(bb);
        if (bb.empty()) throw Error("CycElem: polynomial division by zero");
        if (a.size() < bb.size()) return {{}, a};
        std::vector<RatFuncQ> quo(a.size() - bb.size() + 1, RatFuncQ());
        RatFuncQ lead = bb.back();
        for (size_t k = quo.size(); k-- > 0;) {
            RatFuncQ c = a[k + bb.size() - 1] / lead;
            quo[k] = c;
            if (c.is_zero()) continue;
            for (size_t j = 0; j < bb.size(); ++j) a[k + j] -= c * bb[j];
        }
        poly_trim(a);
        return {quo, a};
    }
};

}  // namespace qharm
