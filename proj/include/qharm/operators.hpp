#pragma once

#include <string>
#include <vector>

#include "qharm/errors.hpp"
#include "qharm/matrix.hpp"
#include "qharm/mpoly.hpp"
#include "qharm/ratfunc.hpp"

namespace qharm {

// <d>_k = d (d-1) ... (d-k+1) (1 + q (d-k)), at an arbitrary parameter value;
// vanishes whenever d < k.
inline RatFuncQ pochhammer_q(long d, unsigned long k, const RatFuncQ& qv = RatFuncQ::q()) {
    Int prod = falling_factorial(d, k);
    if (prod == 0) return RatFuncQ();
    return RatFuncQ(prod) * (RatFuncQ(1) + qv * RatFuncQ(d - static_cast<long>(k)));
}

// D_{q,d} = sum_j (1 + q E_j) del_j^d, with E_j the column-j Euler operator.
// On x^A: sum_j [prod_i (A_ij)_{d_i}] (1 + q (|A_.j| - |d|)) x^{A - d e_j}.
template <class C>
MPoly<C> apply_D(const MPoly<C>& f, const MultiDegree& d, const RatFuncQ& qv = RatFuncQ::q()) {
    const Shape& s = f.shape();
    if (static_cast<int>(d.size()) != s.l) throw ShapeMismatch("apply_D: multidegree length");
    int dtot = total_degree(d);
    MPoly<C> out(s);
    for (const auto& [e, c] : f.terms()) {
        for (int j = 0; j < s.n; ++j) {
            Int fall = 1;
            bool dead = false;
            for (int i = 0; i < s.l && !dead; ++i) {
                int a = e[static_cast<size_t>(i * s.n + j)];
                int di = d[static_cast<size_t>(i)];
                if (a < di) {
                    dead = true;
                    break;
                }
                fall *= falling_factorial(a, static_cast<unsigned long>(di));
            }
            if (dead || fall == 0) continue;
            int coldeg = column_degree(s, e, j) - dtot;
            RatFuncQ w = RatFuncQ(fall) * (RatFuncQ(1) + qv * RatFuncQ(static_cast<long>(coldeg)));
            if (w.is_zero()) continue;
            Exponents e2 = e;
            for (int i = 0; i < s.l; ++i) e2[static_cast<size_t>(i * s.n + j)] -= d[static_cast<size_t>(i)];
            out.add_term(std::move(e2), c * C{w});
        }
    }
    return out;
}

// P_{q,d} = sum_j x_j^d (1 + q E_j). On x^A: sum_j (1 + q |A_.j|) x^{A + d e_j}.
template <class C>
MPoly<C> apply_P(const MPoly<C>& f, const MultiDegree& d, const RatFuncQ& qv = RatFuncQ::q()) {
    const Shape& s = f.shape();
    if (static_cast<int>(d.size()) != s.l) throw ShapeMismatch("apply_P: multidegree length");
    MPoly<C> out(s);
    for (const auto& [e, c] : f.terms()) {
        for (int j = 0; j < s.n; ++j) {
            int coldeg = column_degree(s, e, j);
            RatFuncQ w = RatFuncQ(1) + qv * RatFuncQ(static_cast<long>(coldeg));
            if (w.is_zero()) continue;
            Exponents e2 = e;
            for (int i = 0; i < s.l; ++i) e2[static_cast<size_t>(i * s.n + j)] += d[static_cast<size_t>(i)];
            out.add_term(std::move(e2), c * C{w});
        }
    }
    return out;
}

// (del_1 ... del_n)^s for a single set of variables
template <class C>
MPoly<C> apply_eps_power(const MPoly<C>& f, int s) {
    const Shape& sh = f.shape();
    if (sh.l != 1) throw NotSingleSet("apply_eps_power requires l = 1");
    MPoly<C> out(sh);
    for (const auto& [e, c] : f.terms()) {
        Int fall = 1;
        bool dead = false;
        for (int j = 0; j < sh.n; ++j) {
            if (e[static_cast<size_t>(j)] < s) {
                dead = true;
                break;
            }
            fall *= falling_factorial(e[static_cast<size_t>(j)], static_cast<unsigned long>(s));
        }
        if (dead) continue;
        Exponents e2 = e;
        for (auto& x : e2) x -= s;
        out.add_term(std::move(e2), c * C{RatFuncQ(fall)});
    }
    return out;
}

// ---------------------------------------------------------------------------

enum class OpKind { D, P, EpsPower };

// One operator of the deformed algebra, with its parameter value. Formal q is
// the generator of Q(q); exact rational values are constants.
struct OpSpec {
    OpKind kind = OpKind::D;
    MultiDegree d;  // for D, P
    int s = 0;      // for EpsPower
    RatFuncQ qv = RatFuncQ::q();

    static OpSpec make_D(MultiDegree deg, RatFuncQ q = RatFuncQ::q()) {
        return OpSpec{OpKind::D, std::move(deg), 0, std::move(q)};
    }
    static OpSpec make_P(MultiDegree deg, RatFuncQ q = RatFuncQ::q()) {
        return OpSpec{OpKind::P, std::move(deg), 0, std::move(q)};
    }
    static OpSpec make_eps(int power) { return OpSpec{OpKind::EpsPower, {}, power, RatFuncQ()}; }

    std::string label() const {
        switch (kind) {
            case OpKind::D:
            case OpKind::P: {
                std::string out = kind == OpKind::D ? "D(" : "P(";
                for (size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
                return out + ")";
            }
            case OpKind::EpsPower:
                return "eps^" + std::to_string(s);
        }
        return {};
    }
};

template <class C>
MPoly<C> apply_op(const OpSpec& op, const MPoly<C>& f) {
    switch (op.kind) {
        case OpKind::D:
            return apply_D(f, op.d, op.qv);
        case OpKind::P:
            return apply_P(f, op.d, op.qv);
        case OpKind::EpsPower:
            return apply_eps_power(f, op.s);
    }
    return MPoly<C>(f.shape());
}

inline MultiDegree op_target_multidegree(const OpSpec& op, const Shape& shape, const MultiDegree& source) {
    MultiDegree t = source;
    switch (op.kind) {
        case OpKind::D:
            for (size_t i = 0; i < t.size(); ++i) t[i] -= op.d[i];
            break;
        case OpKind::P:
            for (size_t i = 0; i < t.size(); ++i) t[i] += op.d[i];
            break;
        case OpKind::EpsPower:
            if (shape.l != 1) throw NotSingleSet("eps power requires l = 1");
            t[0] -= op.s * shape.n;
            break;
    }
    for (int x : t)
        if (x < 0) throw DegreeUnderflow("operator " + op.label() + " is zero on this component");
    return t;
}

// Matrix of the operator from the `source` homogeneous component to its image
// component, columns indexed by source monomials in the global order.
inline ExactMatrix<RatFuncQ> operator_matrix(const OpSpec& op, const Shape& shape, const MultiDegree& source) {
    MultiDegree target = op_target_multidegree(op, shape, source);
    std::vector<Exponents> src = monomials_of_multidegree(shape, source);
    std::vector<Exponents> dst = monomials_of_multidegree(shape, target);
    std::map<Exponents, size_t, MonoOrder> dst_index;
    for (size_t i = 0; i < dst.size(); ++i) dst_index.emplace(dst[i], i);
    ExactMatrix<RatFuncQ> m(dst.size(), src.size());
    for (size_t k = 0; k < src.size(); ++k) {
        MPoly<RatFuncQ> img = apply_op(op, MPoly<RatFuncQ>::monomial(shape, src[k], RatFuncQ(1)));
        for (const auto& [e, c] : img.terms()) m.at(dst_index.at(e), k) = c;
    }
    return m;
}

// ---------------------------------------------------------------------------

struct BracketReport {
    bool ok = true;
    std::vector<Exponents> counterexamples;
};

// Verify [D_{q,d}, D_{q,d'}] = q (|d| - |d'|) D_{q,d+d'} on every monomial of
// total degree <= maxdeg.
inline BracketReport bracket_check(const MultiDegree& d, const MultiDegree& d2, const Shape& shape,
                                   int maxdeg, const RatFuncQ& qv = RatFuncQ::q()) {
    BracketReport rep;
    MultiDegree dsum = d;
    for (size_t i = 0; i < dsum.size(); ++i) dsum[i] += d2[i];
    RatFuncQ factor = qv * RatFuncQ(static_cast<long>(total_degree(d) - total_degree(d2)));
    for (int tot = 0; tot <= maxdeg; ++tot) {
        // all multidegrees with this total
        std::vector<MultiDegree> mds;
        MultiDegree cur(static_cast<size_t>(shape.l), 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == shape.l - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                mds.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, tot);
        for (const auto& md : mds) {
            for (const auto& e : monomials_of_multidegree(shape, md)) {
                MPoly<RatFuncQ> x = MPoly<RatFuncQ>::monomial(shape, e, RatFuncQ(1));
                MPoly<RatFuncQ> lhs =
                    apply_D(apply_D(x, d2, qv), d, qv) - apply_D(apply_D(x, d, qv), d2, qv);
                MPoly<RatFuncQ> rhs = apply_D(x, dsum, qv).scaled(factor);
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.counterexamples.push_back(e);
                }
            }
        }
    }
    return rep;
}

}  // namespace qharm
