#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qharm/errors.hpp"
#include "qharm/groups.hpp"
#include "qharm/hilbert.hpp"
#include "qharm/matrix.hpp"
#include "qharm/mpoly.hpp"
#include "qharm/operators.hpp"
#include "qharm/serialize.hpp"

namespace qharm {

// top degree of the l=1 harmonic space: sum_{k=1..n} (km - 1)
inline int top_harmonic_degree(int m, int n) { return m * n * (n + 1) / 2 - n; }

struct HarmonicQuery {
    GroupSpec group;
    int l = 1;
    RatFuncQ qv = RatFuncQ::q();  // formal by default; constants for exact specialization
    int degree_bound = -1;        // l = 1: defaults to one past the top degree

    HarmonicQuery(GroupSpec g, int l_, RatFuncQ q = RatFuncQ::q(), int bound = -1)
        : group(g), l(l_), qv(std::move(q)), degree_bound(bound) {
        if (group.p > 1 && l != 1)
            throw NotSingleSet("G(m,p,n) harmonics with p > 1 are defined for one set of variables");
        if (degree_bound < 0) {
            if (l != 1) throw Error("degree_bound is required for l >= 2");
            degree_bound = top_harmonic_degree(group.m, group.n) + 1;
        }
    }

    Shape shape() const { return Shape{l, group.n}; }
};

// All D_{q,d} with |d| in {m, 2m}, in graded order; plus eps^{m/p} for p > 1.
// The reduction to |d| <= 2m needs q != 0 (the commutators that generate the
// higher operators carry a factor of q), so at q = 0 the full set
// |d| in {m, 2m, ..., nm} is used.
inline std::vector<OpSpec> defining_ops(const HarmonicQuery& query) {
    std::vector<OpSpec> ops;
    std::vector<int> totals{query.group.m, 2 * query.group.m};
    if (query.qv.is_zero()) {
        totals.clear();
        for (int k = 1; k <= query.group.n; ++k) totals.push_back(k * query.group.m);
    }
    for (int total : totals) {
        std::vector<MultiDegree> mds;
        MultiDegree cur(static_cast<size_t>(query.l), 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == query.l - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                mds.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, total);
        for (auto& d : mds) ops.push_back(OpSpec::make_D(std::move(d), query.qv));
    }
    if (query.group.p > 1) ops.push_back(OpSpec::make_eps(query.group.m / query.group.p));
    return ops;
}

// Reduced-echelon basis of the joint kernel of `ops` on the d-component.
inline std::vector<MPoly<RatFuncQ>> joint_kernel_component(const Shape& shape,
                                                           const std::vector<OpSpec>& ops,
                                                           const MultiDegree& d) {
    std::vector<Exponents> monos = monomials_of_multidegree(shape, d);
    ExactMatrix<RatFuncQ> stacked(0, monos.size());
    for (const auto& op : ops) {
        try {
            stacked.stack(operator_matrix(op, shape, d));
        } catch (const DegreeUnderflow&) {
            // the operator is identically zero on this component
        }
    }
    std::vector<MPoly<RatFuncQ>> basis;
    if (stacked.rows() == 0) {
        for (const auto& e : monos) basis.push_back(MPoly<RatFuncQ>::monomial(shape, e, RatFuncQ(1)));
        return basis;
    }
    for (const auto& v : nullspace(std::move(stacked))) {
        MPoly<RatFuncQ> f(shape);
        for (size_t k = 0; k < monos.size(); ++k)
            if (!v[k].is_zero()) f.add_term(monos[k], v[k]);
        basis.push_back(std::move(f));
    }
    return basis;
}

inline std::vector<MPoly<RatFuncQ>> harmonic_component(const HarmonicQuery& query, const MultiDegree& d) {
    return joint_kernel_component(query.shape(), defining_ops(query), d);
}

struct HarmonicSpace {
    HarmonicQuery query;
    std::map<MultiDegree, std::vector<MPoly<RatFuncQ>>, GradedOrder> components;
    HilbertData hilbert;
    long total_dim = 0;
    bool bound_touched = false;  // a nonzero component sits at the degree bound

    long dim_at(const MultiDegree& d) const {
        auto it = hilbert.find(d);
        return it == hilbert.end() ? 0 : it->second;
    }

    // l = 1 convenience: coefficient vector of the Hilbert series in t
    std::vector<Int> series() const {
        std::vector<Int> out;
        for (const auto& [d, dim] : hilbert) {
            size_t deg = static_cast<size_t>(total_degree(d));
            if (out.size() <= deg) out.resize(deg + 1, Int(0));
            out[deg] += dim;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    }
};

inline std::vector<MultiDegree> multidegrees_up_to(int l, int bound) {
    std::vector<MultiDegree> out;
    for (int tot = 0; tot <= bound; ++tot) {
        MultiDegree cur(static_cast<size_t>(l), 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == l - 1) {
                cur[static_cast<size_t>(pos)] = rem;
                out.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[static_cast<size_t>(pos)] = v;
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, tot);
    }
    return out;
}

inline HarmonicSpace harmonic_space(const HarmonicQuery& query) {
    HarmonicSpace space{query, {}, {}, 0, false};
    std::vector<OpSpec> ops = defining_ops(query);
    for (const auto& d : multidegrees_up_to(query.l, query.degree_bound)) {
        std::vector<MPoly<RatFuncQ>> basis = joint_kernel_component(query.shape(), ops, d);
        long dim = static_cast<long>(basis.size());
        if (dim == 0) continue;
        if (total_degree(d) == query.degree_bound) {
            // for l = 1 the top degree is known, so only a bound strictly below
            // it can truncate; for l >= 2 touching the bound is a warning
            if (query.l >= 2 ||
                query.degree_bound < top_harmonic_degree(query.group.m, query.group.n))
                space.bound_touched = true;
        }
        space.hilbert[d] = dim;
        space.total_dim += dim;
        space.components.emplace(d, std::move(basis));
    }
    return space;
}

inline json harmonic_space_to_json(const HarmonicSpace& space, bool with_basis = true) {
    json j;
    j["group"] = {{"m", space.query.group.m}, {"p", space.query.group.p}, {"n", space.query.group.n}};
    j["sets"] = space.query.l;
    j["q"] = space.query.qv.to_string();
    j["max_deg"] = space.query.degree_bound;
    j["total_dim"] = space.total_dim;
    j["bound_touched"] = space.bound_touched;
    json hilbert = json::array();
    for (const auto& [d, dim] : space.hilbert) hilbert.push_back({{"deg", d}, {"dim", dim}});
    j["hilbert"] = std::move(hilbert);
    if (with_basis) {
        json comps = json::array();
        for (const auto& [d, basis] : space.components) {
            json b = json::array();
            for (const auto& f : basis) b.push_back(mpoly_to_json(f));
            comps.push_back({{"deg", d}, {"dim", basis.size()}, {"basis", std::move(b)}});
        }
        j["components"] = std::move(comps);
    }
    return j;
}

// ---------------------------------------------------------------------------
// span comparison helpers

// coordinate matrix of polynomials supported on one homogeneous component,
// rows = polynomials, columns = monomials in the global order
inline ExactMatrix<RatFuncQ> coordinate_rows(const Shape& shape, const MultiDegree& d,
                                             const std::vector<MPoly<RatFuncQ>>& polys) {
    std::vector<Exponents> monos = monomials_of_multidegree(shape, d);
    std::map<Exponents, size_t, MonoOrder> index;
    for (size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    ExactMatrix<RatFuncQ> m(polys.size(), monos.size());
    for (size_t i = 0; i < polys.size(); ++i)
        for (const auto& [e, c] : polys[i].terms()) m.at(i, index.at(e)) = c;
    return m;
}

inline bool spans_equal(const Shape& shape, const MultiDegree& d,
                        const std::vector<MPoly<RatFuncQ>>& a, const std::vector<MPoly<RatFuncQ>>& b) {
    ExactMatrix<RatFuncQ> ma = coordinate_rows(shape, d, a);
    ExactMatrix<RatFuncQ> mb = coordinate_rows(shape, d, b);
    size_t ra = ma.rank(), rb = mb.rank();
    if (ra != rb) return false;
    ExactMatrix<RatFuncQ> stacked = ma;
    stacked.stack(mb);
    return stacked.rank() == ra;
}

// ---------------------------------------------------------------------------

// Explicit basis of the G(m,p,2) harmonics (l = 1): the monomials x^a y^b
// (a,b < m) and the binomials <b+m>_m x^{a+m} y^b - <a+m>_m x^a y^{b+m},
// filtered by ker(eps^{m/p}); dimension 2 m^2 / p.
inline std::vector<MPoly<RatFuncQ>> closed_form_n2(int m, int p,
                                                   std::optional<Rat> q0 = std::nullopt) {
    if (m % p != 0) throw Error("closed_form_n2: p must divide m");
    RatFuncQ qv = RatFuncQ::q();
    if (q0) {
        // the closed form is invalid at the singular specializations
        Rat v = *q0;
        v.canonicalize();
        if (sgn(v) < 0) {
            Int u = -v.get_num(), b = v.get_den();
            bool singular = (p == m) ? (u == 1 && b <= m) : (u <= 2 && v >= -1);
            if (singular)
                throw SingularQ("closed form invalid at q0 = " + rat_to_string(*q0));
        }
        qv = RatFuncQ(v);
    }
    Shape s{1, 2};
    std::vector<MPoly<RatFuncQ>> out;
    auto xy = [&](int a, int b, RatFuncQ c) { return MPoly<RatFuncQ>::monomial(s, {a, b}, c); };
    std::vector<MPoly<RatFuncQ>> all;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) all.push_back(xy(a, b, RatFuncQ(1)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            all.push_back(xy(a + m, b, pochhammer_q(b + m, static_cast<unsigned long>(m), qv)) -
                          xy(a, b + m, pochhammer_q(a + m, static_cast<unsigned long>(m), qv)));
    int eps_pow = m / p;
    for (auto& f : all)
        if (apply_eps_power(f, eps_pow).is_zero()) out.push_back(std::move(f));
    return out;
}

// ---------------------------------------------------------------------------
// layer decomposition

struct LayerReport {
    int m = 0, n = 0;
    std::vector<long> layer_sizes;                  // one entry per layer k = 0..m-1
    std::map<int, std::vector<long>> sizes_by_deg;  // layer k -> per-degree sizes
    bool eps_maps_full_rank = true;
    std::vector<std::string> mixing;  // representatives whose monomials mix valuations
    json details;
};

namespace detail {

// bases (coordinate rows per degree) of H_q(G(m,n)) intersected with ker(eps^{k+1})
inline std::map<int, std::vector<MPoly<RatFuncQ>>> filtration_level(int m, int n, int k,
                                                                    const RatFuncQ& qv, int bound) {
    HarmonicQuery query{GroupSpec(m, 1, n), 1, qv, bound};
    std::vector<OpSpec> ops = defining_ops(query);
    if (k + 1 < m) ops.push_back(OpSpec::make_eps(k + 1));
    std::map<int, std::vector<MPoly<RatFuncQ>>> out;
    for (int deg = 0; deg <= bound; ++deg) {
        auto basis = joint_kernel_component(query.shape(), ops, {deg});
        if (!basis.empty()) out.emplace(deg, std::move(basis));
    }
    return out;
}

}  // namespace detail

// Layers of H_q(G(m,n)) via the eps-kernel filtration F_k = H_q ∩ ker(eps^{k+1}):
// layer k has dimension dim F_k - dim F_{k-1}, with representatives extending a
// basis of F_{k-1} to F_k. For each k >= 1 the eps image of the layer-k
// representatives is checked to span F_{k-1} at parameter q/(1+q) modulo F_{k-2}
// with full rank. Representatives mixing e_n-valuations are reported, not fatal.
inline LayerReport layer_decomposition(int m, int n, int bound = -1) {
    if (bound < 0) bound = top_harmonic_degree(m, n) + 1;
    LayerReport rep;
    rep.m = m;
    rep.n = n;
    Shape shape{1, n};
    RatFuncQ q = RatFuncQ::q();
    RatFuncQ q_shift = q / (RatFuncQ(1) + q);  // parameter of the eps image

    std::vector<std::map<int, std::vector<MPoly<RatFuncQ>>>> levels, levels_shift;
    for (int k = 0; k < m; ++k) {
        levels.push_back(detail::filtration_level(m, n, k, q, bound));
        levels_shift.push_back(detail::filtration_level(m, n, k, q_shift, bound));
    }

    // representatives of layer k = basis vectors of F_k outside span(F_{k-1})
    std::vector<std::map<int, std::vector<MPoly<RatFuncQ>>>> reps(static_cast<size_t>(m));
    rep.layer_sizes.assign(static_cast<size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
        for (const auto& [deg, basis] : levels[static_cast<size_t>(k)]) {
            std::vector<MPoly<RatFuncQ>> prev;
            if (k > 0) {
                auto it = levels[static_cast<size_t>(k - 1)].find(deg);
                if (it != levels[static_cast<size_t>(k - 1)].end()) prev = it->second;
            }
            ExactMatrix<RatFuncQ> span = coordinate_rows(shape, {deg}, prev);
            size_t rank = span.rank();
            for (const auto& f : basis) {
                ExactMatrix<RatFuncQ> trial = span;
                trial.stack(coordinate_rows(shape, {deg}, {f}));
                size_t r2 = trial.rank();
                if (r2 > rank) {
                    span = std::move(trial);
                    rank = r2;
                    reps[static_cast<size_t>(k)][deg].push_back(f);
                    rep.layer_sizes[static_cast<size_t>(k)] += 1;
                    rep.sizes_by_deg[k].resize(static_cast<size_t>(bound) + 1, 0);
                    rep.sizes_by_deg[k][static_cast<size_t>(deg)] += 1;
                    // valuation homogeneity of the representative
                    std::set<int> vals;
                    for (const auto& [e, c] : f.terms()) vals.insert(en_valuation(shape, e));
                    if (vals.size() > 1 || (vals.size() == 1 && *vals.begin() != k))
                        rep.mixing.push_back("layer " + std::to_string(k) + " degree " +
                                             std::to_string(deg));
                }
            }
        }
    }

    // eps: L_k(q) -> L_{k-1}(q/(1+q)) with full rank
    json eps_checks = json::array();
    for (int k = 1; k < m; ++k) {
        for (const auto& [deg, rlist] : reps[static_cast<size_t>(k)]) {
            int tdeg = deg - n;
            std::vector<MPoly<RatFuncQ>> images;
            for (const auto& f : rlist) images.push_back(apply_eps_power(f, 1));
            std::vector<MPoly<RatFuncQ>> target, below;
            if (tdeg >= 0) {
                auto it = levels_shift[static_cast<size_t>(k - 1)].find(tdeg);
                if (it != levels_shift[static_cast<size_t>(k - 1)].end()) target = it->second;
                if (k >= 2) {
                    auto it2 = levels_shift[static_cast<size_t>(k - 2)].find(tdeg);
                    if (it2 != levels_shift[static_cast<size_t>(k - 2)].end()) below = it2->second;
                }
            }
            bool contained = true;
            if (tdeg < 0) {
                contained = images.empty();
            } else {
                ExactMatrix<RatFuncQ> tmat = coordinate_rows(shape, {tdeg}, target);
                size_t trank = tmat.rank();
                ExactMatrix<RatFuncQ> aug = tmat;
                aug.stack(coordinate_rows(shape, {tdeg}, images));
                contained = aug.rank() == trank;
            }
            // rank of the images modulo F_{k-2} at the shifted parameter
            bool full_rank = false;
            if (tdeg >= 0 && contained) {
                ExactMatrix<RatFuncQ> bmat = coordinate_rows(shape, {tdeg}, below);
                size_t brank = bmat.rank();
                ExactMatrix<RatFuncQ> aug = bmat;
                aug.stack(coordinate_rows(shape, {tdeg}, images));
                full_rank = aug.rank() == brank + rlist.size();
            }
            bool ok = contained && full_rank;
            if (!ok) rep.eps_maps_full_rank = false;
            eps_checks.push_back({{"layer", k},
                                  {"degree", deg},
                                  {"count", rlist.size()},
                                  {"contained", contained},
                                  {"full_rank", full_rank}});
        }
    }
    rep.details = {{"eps_checks", std::move(eps_checks)}, {"mixing", rep.mixing}};
    return rep;
}

// ---------------------------------------------------------------------------

// Candidates q0 = -a/b with 1 <= a <= a_max, n <= b <= b_max; q0 is flagged
// singular iff some component dimension at q0 exceeds the formal-q dimension.
inline std::vector<Rat> singular_scan(int n, int l, const GroupSpec& group, int a_max, int b_max,
                                      int degree_bound, json* details = nullptr) {
    HarmonicQuery formal{group, l, RatFuncQ::q(), degree_bound};
    HarmonicSpace base = harmonic_space(formal);
    std::set<Rat> candidates;
    for (int a = 1; a <= a_max; ++a)
        for (int b = n; b <= b_max; ++b) candidates.insert(make_rat(-a, b));
    std::vector<Rat> flagged;
    json detail = json::array();
    for (const Rat& q0 : candidates) {
        HarmonicQuery query{group, l, RatFuncQ(q0), degree_bound};
        HarmonicSpace space = harmonic_space(query);
        bool excess = false;
        json where = json::array();
        for (const auto& [d, dim] : space.hilbert) {
            if (dim > base.dim_at(d)) {
                excess = true;
                where.push_back({{"deg", d}, {"dim", dim}, {"formal_dim", base.dim_at(d)}});
            }
        }
        if (excess) flagged.push_back(q0);
        detail.push_back({{"q0", rat_to_string(q0)}, {"singular", excess}, {"excess", std::move(where)}});
    }
    if (details) *details = std::move(detail);
    return flagged;
}

// ---------------------------------------------------------------------------
// conjecture / proposition reports

struct CheckReport {
    std::string check;
    bool pass = true;
    json details = json::array();

    void record(const std::string& item, bool ok, json extra = {}) {
        json entry = {{"item", item}, {"verdict", ok ? "PASS" : "FAIL"}};
        if (!extra.is_null() && !(extra.is_object() && extra.empty())) entry["data"] = std::move(extra);
        details.push_back(std::move(entry));
        pass = pass && ok;
    }

    json to_json() const {
        return {{"check", check}, {"verdict", pass ? "PASS" : "FAIL"}, {"details", details}};
    }
};

// Dimension and graded-character comparison between the formal-q space and the
// q=0 space; character equality is the operational meaning of graded W-module
// isomorphism. The character part is skipped (and said so) beyond `limit`.
inline CheckReport check_main_conjecture(const HarmonicQuery& query, long limit = 400) {
    CheckReport rep{"main_conjecture"};
    HarmonicSpace formal = harmonic_space(query);
    HarmonicQuery q0{query.group, query.l, RatFuncQ(0), query.degree_bound};
    HarmonicSpace classical = harmonic_space(q0);

    std::set<MultiDegree, GradedOrder> degrees;
    for (const auto& [d, dim] : formal.hilbert) degrees.insert(d);
    for (const auto& [d, dim] : classical.hilbert) degrees.insert(d);
    for (const auto& d : degrees) {
        bool ok = formal.dim_at(d) == classical.dim_at(d);
        rep.record("dim deg=" + json(d).dump(), ok,
                   {{"formal", formal.dim_at(d)}, {"q0", classical.dim_at(d)}});
    }

    std::vector<GroupElement> elements;
    try {
        elements = enumerate(query.group, limit);
    } catch (const TooLarge&) {
        rep.details.push_back({{"item", "characters"}, {"verdict", "SKIPPED"}, {"data", "TooLarge"}});
        return rep;
    }
    std::map<std::string, CycElem> char_sum_q0;
    for (const auto& d : degrees) {
        auto itf = formal.components.find(d);
        auto itc = classical.components.find(d);
        const std::vector<MPoly<RatFuncQ>> empty;
        const auto& bf = itf == formal.components.end() ? empty : itf->second;
        const auto& bc = itc == classical.components.end() ? empty : itc->second;
        for (const auto& w : elements) {
            CycElem tf = graded_trace(query.group, w, bf);
            CycElem tc = graded_trace(query.group, w, bc);
            char_sum_q0[w.label()] += tc;
            if (!(tf == tc))
                rep.record("character deg=" + json(d).dump() + " w=" + w.label(), false,
                           {{"formal", tf.coord_strings()}, {"q0", tc.coord_strings()}});
        }
    }
    // summed q=0 character must be the regular character
    for (const auto& w : elements) {
        CycElem expected = w.is_identity() ? CycElem(RatFuncQ(Rat(query.group.order()))) : CycElem();
        bool ok = char_sum_q0[w.label()] == expected;
        if (!ok) rep.record("regular character w=" + w.label(), false);
    }
    rep.record("characters (all degrees, all elements)", rep.pass);
    return rep;
}

// No kernel-basis monomial divisible by e_n^m (so ker(eps^m) is automatic).
inline CheckReport check_conjecture_e(int m, int n, int bound = -1) {
    CheckReport rep{"conjecture_e"};
    HarmonicQuery query{GroupSpec(m, 1, n), 1, RatFuncQ::q(), bound};
    HarmonicSpace space = harmonic_space(query);
    long offenders = 0;
    for (const auto& [d, basis] : space.components)
        for (const auto& f : basis)
            for (const auto& [e, c] : f.terms())
                if (en_valuation(query.shape(), e) >= m) ++offenders;
    rep.record("no monomial divisible by e_n^" + std::to_string(m), offenders == 0,
               {{"offenders", offenders}, {"total_dim", space.total_dim}});
    return rep;
}

// phi-bar_r embedding of the S_n q-harmonics into the (q/r)-harmonics of
// G(m,n); for r = m the image must span the m-divisible-exponent subspace.
inline CheckReport check_inflation(int m, int r, int n, int opcheck_maxdeg = 6) {
    if (r < 1 || m % r != 0) throw Error("check_inflation: r must divide m");
    CheckReport rep{"inflation"};
    Shape shape{1, n};
    RatFuncQ q = RatFuncQ::q();
    RatFuncQ qr = q / RatFuncQ(static_cast<long>(r));
    HarmonicQuery src_query{GroupSpec(1, 1, n), 1, q, -1};
    HarmonicSpace source = harmonic_space(src_query);
    HarmonicQuery tgt_query{GroupSpec(m, 1, n), 1, qr, -1};
    std::vector<OpSpec> tgt_ops = defining_ops(tgt_query);

    for (const auto& [d, basis] : source.components) {
        std::vector<MPoly<RatFuncQ>> images;
        bool all_harmonic = true;
        for (const auto& f : basis) {
            MPoly<RatFuncQ> g = inflate_dual(f, r);
            images.push_back(g);
            for (const auto& op : tgt_ops)
                if (!apply_op(op, g).is_zero()) all_harmonic = false;
        }
        rep.record("images (q/r)-harmonic, source deg " + std::to_string(total_degree(d)),
                   all_harmonic);
        if (r == m) {
            int tdeg = total_degree(d) * r;
            std::vector<MPoly<RatFuncQ>> target = joint_kernel_component(shape, tgt_ops, {tdeg});
            // intersection of the target kernel with the r-divisible-exponent subspace
            std::vector<Exponents> monos = monomials_of_multidegree(shape, {tdeg});
            std::map<Exponents, size_t, MonoOrder> index;
            std::vector<size_t> bad_cols;
            for (size_t i = 0; i < monos.size(); ++i) {
                index.emplace(monos[i], i);
                for (int x : monos[i])
                    if (x % r != 0) {
                        bad_cols.push_back(i);
                        break;
                    }
            }
            ExactMatrix<RatFuncQ> constraint(bad_cols.size(), target.size());
            for (size_t k = 0; k < target.size(); ++k) {
                size_t rowi = 0;
                for (size_t col : bad_cols)
                    constraint.at(rowi++, k) = target[k].coeff(monos[col]);
            }
            size_t subspace_dim = target.size() - constraint.rank();
            size_t image_rank = coordinate_rows(shape, {tdeg}, images).rank();
            rep.record("image spans divisible subspace, target deg " + std::to_string(tdeg),
                       image_rank == subspace_dim && image_rank == basis.size(),
                       {{"image_rank", image_rank}, {"subspace_dim", subspace_dim}});
        }
    }

    // operator identity by action: D_{q/r, rd}(phibar_r(f)) = phibar_r(D_{q,d}(f))
    bool op_ok = true;
    for (int dd = 1; dd <= 3; ++dd) {
        MultiDegree d{dd}, rd{dd * r};
        for (int deg = 0; deg <= opcheck_maxdeg; ++deg) {
            for (const auto& e : monomials_of_multidegree(shape, {deg})) {
                MPoly<RatFuncQ> f = MPoly<RatFuncQ>::monomial(shape, e, RatFuncQ(1));
                MPoly<RatFuncQ> lhs = apply_D(inflate_dual(f, r), rd, qr);
                MPoly<RatFuncQ> rhs = inflate_dual(apply_D(f, d, q), r);
                if (!(lhs == rhs)) op_ok = false;
            }
        }
    }
    rep.record("operator identity on monomials of degree <= " + std::to_string(opcheck_maxdeg),
               op_ok);
    return rep;
}

// dim at sampled q0 equals the formal dim; both bounded by the q=0 dim.
inline CheckReport dim_inequality_probe(const HarmonicQuery& query, const std::vector<Rat>& samples) {
    CheckReport rep{"dim_inequality"};
    HarmonicSpace formal = harmonic_space(query);
    HarmonicQuery zq{query.group, query.l, RatFuncQ(0), query.degree_bound};
    HarmonicSpace classical = harmonic_space(zq);
    std::set<MultiDegree, GradedOrder> degrees;
    for (const auto& [d, dim] : classical.hilbert) degrees.insert(d);
    for (const auto& [d, dim] : formal.hilbert) degrees.insert(d);
    for (const auto& d : degrees) {
        bool ok = formal.dim_at(d) <= classical.dim_at(d);
        rep.record("formal <= q=0 at deg " + json(d).dump(), ok,
                   {{"formal", formal.dim_at(d)}, {"q0", classical.dim_at(d)}});
    }
    for (const Rat& q0 : samples) {
        HarmonicQuery sq{query.group, query.l, RatFuncQ(q0), query.degree_bound};
        HarmonicSpace sampled = harmonic_space(sq);
        bool ok = true;
        for (const auto& d : degrees)
            if (sampled.dim_at(d) != formal.dim_at(d)) ok = false;
        for (const auto& [d, dim] : sampled.hilbert)
            if (formal.dim_at(d) != dim) ok = false;
        rep.record("dims at q0 = " + rat_to_string(q0) + " equal formal dims", ok);
    }
    return rep;
}

// The explicit n=2 basis and the generic solver agree span-by-span per degree.
inline CheckReport check_n2_closed(int m, int p, std::optional<Rat> q0 = std::nullopt) {
    CheckReport rep{"n2_closed_form"};
    std::vector<MPoly<RatFuncQ>> closed = closed_form_n2(m, p, q0);
    RatFuncQ qv = q0 ? RatFuncQ(*q0) : RatFuncQ::q();
    HarmonicQuery query{GroupSpec(m, p, 2), 1, qv, -1};
    HarmonicSpace solved = harmonic_space(query);
    std::map<int, std::vector<MPoly<RatFuncQ>>> by_deg;
    for (auto& f : closed) {
        MultiDegree d;
        if (!f.is_homogeneous(&d)) throw Error("closed form element not homogeneous");
        by_deg[total_degree(d)].push_back(std::move(f));
    }
    long closed_dim = 0;
    std::set<int> degrees;
    for (const auto& [deg, fs] : by_deg) {
        degrees.insert(deg);
        closed_dim += static_cast<long>(fs.size());
    }
    for (const auto& [d, dim] : solved.hilbert) degrees.insert(total_degree(d));
    for (int deg : degrees) {
        const std::vector<MPoly<RatFuncQ>> empty;
        auto itc = by_deg.find(deg);
        auto its = solved.components.find(MultiDegree{deg});
        const auto& a = itc == by_deg.end() ? empty : itc->second;
        const auto& b = its == solved.components.end() ? empty : its->second;
        rep.record("span equality at degree " + std::to_string(deg),
                   spans_equal(query.shape(), {deg}, a, b),
                   {{"closed", a.size()}, {"solver", b.size()}});
    }
    rep.record("total dimension 2m^2/p", closed_dim == 2L * m * m / p && closed_dim == solved.total_dim,
               {{"closed", closed_dim}, {"solver", solved.total_dim}});
    return rep;
}

// Per-multidegree map from element label to the trace coordinate vector.
inline json character_report(const HarmonicQuery& query, long limit = 100000) {
    HarmonicSpace space = harmonic_space(query);
    std::vector<GroupElement> elements = enumerate(query.group, limit);
    json degrees = json::array();
    for (const auto& [d, basis] : space.components) {
        json table = json::object();
        for (const auto& w : elements) {
            json coords = json::array();
            for (const auto& s : graded_trace(query.group, w, basis).coord_strings())
                coords.push_back(s);
            table[w.label()] = std::move(coords);
        }
        degrees.push_back({{"deg", d}, {"dim", basis.size()}, {"character", std::move(table)}});
    }
    return {{"group", {{"m", query.group.m}, {"p", query.group.p}, {"n", query.group.n}}},
            {"sets", query.l},
            {"zeta_order", query.group.m},
            {"degrees", std::move(degrees)}};
}

}  // namespace qharm
