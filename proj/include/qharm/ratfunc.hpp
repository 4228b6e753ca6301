#pragma once

#include <string>
#include <utility>

#include "qharm/errors.hpp"
#include "qharm/qpoly.hpp"
#include "qharm/rational.hpp"

namespace qharm {

// Element of Q(q), the field of rational functions in the formal parameter q.
// Canonical form: num/den integer polynomials with no common polynomial factor,
// coprime integer contents, and positive leading coefficient of the denominator.
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(Int(1)) {}
    RatFuncQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RatFuncQ(const QPoly& p) : num_(p), den_(Int(1)) {}
    explicit RatFuncQ(long v) : num_(Int(v)), den_(Int(1)) {}
    explicit RatFuncQ(const Int& v) : num_(v), den_(Int(1)) {}
    explicit RatFuncQ(const Rat& v) : num_(v.get_num()), den_(v.get_den()) { normalize(); }

    // the generator q itself
    static RatFuncQ q() { return RatFuncQ(QPoly::q()); }
    static RatFuncQ zero() { return RatFuncQ(); }
    static RatFuncQ one() { return RatFuncQ(1); }
    static RatFuncQ from_rat(const Rat& v) { return RatFuncQ(v); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
        return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncQ operator-(const RatFuncQ& a) {
        RatFuncQ r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
        if (a.is_zero() || b.is_zero()) return RatFuncQ();
        return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
        if (b.is_zero()) throw Error("RatFuncQ: division by zero");
        if (a.is_zero()) return RatFuncQ();
        return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFuncQ& operator+=(const RatFuncQ& b) { return *this = *this + b; }
    RatFuncQ& operator-=(const RatFuncQ& b) { return *this = *this - b; }
    RatFuncQ& operator*=(const RatFuncQ& b) { return *this = *this * b; }
    RatFuncQ& operator/=(const RatFuncQ& b) { return *this = *this / b; }

    RatFuncQ inverse() const {
        if (is_zero()) throw Error("RatFuncQ: inverse of zero");
        return RatFuncQ(den_, num_);
    }

    // exact specialization at q = q0
    Rat specialize(const Rat& q0) const {
        Rat d = den_.eval(q0);
        if (d == 0) throw PoleAtQ0("denominator vanishes at q0 = " + rat_to_string(q0));
        Rat n = num_.eval(q0);
        Rat r = n / d;
        r.canonicalize();
        return r;
    }

    // substitute q -> value (a rational function), staying in Q(q)
    RatFuncQ substitute(const RatFuncQ& value) const {
        RatFuncQ n = eval_poly_at(num_, value);
        RatFuncQ d = eval_poly_at(den_, value);
        if (d.is_zero()) throw PoleAtQ0("denominator vanishes under substitution");
        return n / d;
    }

    std::string to_string() const {
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    static RatFuncQ from_string(const std::string& s) {
        size_t split = s.find(")/(");
        if (split == std::string::npos || s.empty() || s.front() != '(' || s.back() != ')')
            throw Error("RatFuncQ: parse error in '" + s + "'");
        QPoly n = QPoly::from_string(s.substr(1, split - 1));
        QPoly d = QPoly::from_string(s.substr(split + 3, s.size() - split - 4));
        return RatFuncQ(std::move(n), std::move(d));
    }

private:
    QPoly num_, den_;

    static RatFuncQ eval_poly_at(const QPoly& p, const RatFuncQ& value) {
        RatFuncQ acc;
        for (int i = p.degree(); i >= 0; --i) acc = acc * value + RatFuncQ(p.coeff(i));
        return acc;
    }

    void normalize() {
        if (den_.is_zero()) throw Error("RatFuncQ: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(Int(1));
            return;
        }
        if (!den_.is_constant() && !num_.is_constant()) {
            QPoly g = qpoly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = qpoly_div_exact(num_, g);
                den_ = qpoly_div_exact(den_, g);
            }
        }
        Int cn = num_.content(), cd = den_.content();
        Int g;
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g > 1) {
            num_ = num_.divided_by_int(g);
            den_ = den_.divided_by_int(g);
        }
        if (den_.lead() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

}  // namespace qharm
