#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/rational.hpp"

namespace qharm {

// Dense integer polynomial in the formal parameter q.
// Canonical form: the highest-index coefficient is nonzero; zero is the empty list.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(Int v) {
        if (v != 0) c_.push_back(std::move(v));
    }
    explicit QPoly(long v) : QPoly(Int(v)) {}
    explicit QPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly q() { return QPoly(std::vector<Int>{Int(0), Int(1)}); }

    static QPoly monomial(Int coef, int k) {
        if (coef == 0) return QPoly();
        std::vector<Int> c(static_cast<size_t>(k) + 1, Int(0));
        c.back() = std::move(coef);
        return QPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lead() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Int(0);
        return c_[static_cast<size_t>(i)];
    }

    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return QPoly(std::move(c));
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return QPoly(std::move(c));
    }

    friend QPoly operator-(const QPoly& a) {
        std::vector<Int> c = a.c_;
        for (auto& x : c) x = -x;
        return QPoly(std::move(c));
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return QPoly(std::move(c));
    }

    QPoly scaled(const Int& s) const {
        if (s == 0) return QPoly();
        std::vector<Int> c = c_;
        for (auto& x : c) x *= s;
        return QPoly(std::move(c));
    }

    // gcd of the coefficients, nonnegative; 0 for the zero polynomial
    Int content() const {
        Int g = 0;
        for (const auto& x : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    QPoly primitive_part() const {
        if (is_zero()) return QPoly();
        Int g = content();
        if (lead() < 0) g = -g;
        return divided_by_int(g);
    }

    QPoly divided_by_int(const Int& s) const {
        std::vector<Int> c = c_;
        for (auto& x : c) {
            Int r;
            mpz_tdiv_qr(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
            if (r != 0) throw Error("QPoly: inexact integer division");
        }
        return QPoly(std::move(c));
    }

    Rat eval(const Rat& q0) const {
        Rat acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + Rat(c_[i]);
        return acc;
    }

    // ascending-power string; "0" for zero. Terms: "c", "q", "-q", "c*q", "c*q^k".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            const Int& ci = c_[i];
            if (ci == 0) continue;
            std::string term;
            if (i == 0) {
                term = ci.get_str();
            } else {
                std::string var = (i == 1) ? "q" : ("q^" + std::to_string(i));
                if (ci == 1)
                    term = var;
                else if (ci == -1)
                    term = "-" + var;
                else
                    term = ci.get_str() + "*" + var;
            }
            if (!first && term[0] != '-') out += "+";
            out += term;
            first = false;
        }
        return out;
    }

    static QPoly from_string(const std::string& s);

private:
    std::vector<Int> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// { quotient, remainder } over the rationals; throws if not exact when `exact`
inline QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw Error("QPoly: division by zero");
    if (a.is_zero()) return QPoly();
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    int db = b.degree();
    int da = a.degree();
    if (da < db) throw Error("QPoly: inexact division");
    std::vector<Rat> quo(static_cast<size_t>(da - db) + 1, Rat(0));
    Rat bl = Rat(b.lead());
    for (int k = da - db; k >= 0; --k) {
        Rat c = rem[static_cast<size_t>(k + db)] / bl;
        quo[static_cast<size_t>(k)] = c;
        if (c != 0)
            for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= c * Rat(b.coeff(j));
    }
    for (const auto& r : rem)
        if (r != 0) throw Error("QPoly: inexact division");
    std::vector<Int> qi;
    qi.reserve(quo.size());
    for (auto& c : quo) {
        if (c.get_den() != 1) throw Error("QPoly: non-integer quotient");
        qi.push_back(c.get_num());
    }
    return QPoly(std::move(qi));
}

// primitive gcd with positive leading coefficient (primitive PRS)
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.primitive_part().is_zero() ? QPoly() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_constant() || b.is_constant()) return QPoly(Int(1));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        QPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            QPoly t = QPoly::monomial(r.lead(), shift) * b;
            r = r.scaled(b.lead()) - t;
        }
        a = b;
        b = r.primitive_part();
        if (!b.is_zero() && b.is_constant()) return QPoly(Int(1));
    }
    return a;
}

inline QPoly QPoly::from_string(const std::string& s) {
    if (s == "0") return QPoly();
    std::vector<Int> coeffs;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t end = pos + 1;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (!term.empty() && term[0] == '+') term.erase(0, 1);
        int sign = 1;
        if (!term.empty() && term[0] == '-') {
            sign = -1;
            term.erase(0, 1);
        }
        Int coef;
        int power = 0;
        size_t qpos = term.find('q');
        if (qpos == std::string::npos) {
            coef = Int(term);
        } else {
            std::string cpart = term.substr(0, qpos);
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
            coef = cpart.empty() ? Int(1) : Int(cpart);
            std::string ppart = term.substr(qpos + 1);
            if (ppart.empty())
                power = 1;
            else if (ppart[0] == '^')
                power = std::atoi(ppart.c_str() + 1);
            else
                throw Error("QPoly: parse error in '" + s + "'");
        }
        if (power < 0) throw Error("QPoly: negative power");
        if (coeffs.size() < static_cast<size_t>(power) + 1) coeffs.resize(static_cast<size_t>(power) + 1, Int(0));
        coeffs[static_cast<size_t>(power)] += sign * coef;
        pos = end;
    }
    return QPoly(std::move(coeffs));
}

}  // namespace qharm
