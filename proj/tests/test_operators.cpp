#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qharm/operators.hpp"

using namespace qharm;

namespace {

// independent oracle pieces: plain partial derivative, Euler operator,
// multiplication by a column power, built from first principles
MPoly<RatFuncQ> partial(const MPoly<RatFuncQ>& f, int i, int j) {
    const Shape& s = f.shape();
    MPoly<RatFuncQ> out(s);
    for (const auto& [e, c] : f.terms()) {
        size_t idx = static_cast<size_t>(i * s.n + j);
        if (e[idx] == 0) continue;
        Exponents e2 = e;
        e2[idx] -= 1;
        out.add_term(std::move(e2), c * RatFuncQ(static_cast<long>(e[idx])));
    }
    return out;
}

MPoly<RatFuncQ> euler_column(const MPoly<RatFuncQ>& f, int j) {
    MPoly<RatFuncQ> out(f.shape());
    for (const auto& [e, c] : f.terms())
        out.add_term(e, c * RatFuncQ(static_cast<long>(column_degree(f.shape(), e, j))));
    return out;
}

MPoly<RatFuncQ> times_column_power(const MPoly<RatFuncQ>& f, const MultiDegree& d, int j) {
    const Shape& s = f.shape();
    MPoly<RatFuncQ> out(s);
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        for (int i = 0; i < s.l; ++i) e2[static_cast<size_t>(i * s.n + j)] += d[static_cast<size_t>(i)];
        out.add_term(std::move(e2), c);
    }
    return out;
}

MPoly<RatFuncQ> oracle_D(const MPoly<RatFuncQ>& f, const MultiDegree& d, const RatFuncQ& qv) {
    const Shape& s = f.shape();
    MPoly<RatFuncQ> out(s);
    for (int j = 0; j < s.n; ++j) {
        MPoly<RatFuncQ> g = f;
        for (int i = 0; i < s.l; ++i)
            for (int t = 0; t < d[static_cast<size_t>(i)]; ++t) g = partial(g, i, j);
        out = out + g + euler_column(g, j).scaled(qv);
    }
    return out;
}

MPoly<RatFuncQ> oracle_P(const MPoly<RatFuncQ>& f, const MultiDegree& d, const RatFuncQ& qv) {
    const Shape& s = f.shape();
    MPoly<RatFuncQ> out(s);
    for (int j = 0; j < s.n; ++j)
        out = out + times_column_power(f + euler_column(f, j).scaled(qv), d, j);
    return out;
}

MPoly<RatFuncQ> random_mpoly(std::mt19937& rng, Shape s, int maxexp = 4) {
    std::uniform_int_distribution<int> ed(0, maxexp), cd(-4, 4), nterms(1, 4);
    MPoly<RatFuncQ> f(s);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(static_cast<size_t>(s.vars()));
        for (auto& x : e) x = ed(rng);
        int c = cd(rng);
        if (c != 0) f.add_term(std::move(e), RatFuncQ(static_cast<long>(c)));
    }
    return f;
}

}  // namespace

TEST_CASE("pochhammer symbol") {
    RatFuncQ q = RatFuncQ::q();
    // <d>_k = d (d-1) ... (d-k+1) (1 + q(d-k))
    CHECK(pochhammer_q(3, 2) == RatFuncQ(6) * (RatFuncQ(1) + q));
    CHECK(pochhammer_q(2, 2) == RatFuncQ(2));
    CHECK(pochhammer_q(4, 1) == RatFuncQ(4) * (RatFuncQ(1) + RatFuncQ(3) * q));
    CHECK(pochhammer_q(2, 3).is_zero());
    CHECK(pochhammer_q(1, 2).is_zero());
    CHECK(pochhammer_q(4, 2) == RatFuncQ(12) * (RatFuncQ(1) + RatFuncQ(2) * q));
    CHECK(pochhammer_q(5, 0) == RatFuncQ(1) + RatFuncQ(5) * q);
}

TEST_CASE("pinned operator values") {
    RatFuncQ q = RatFuncQ::q();
    Shape s1{1, 1};
    MPoly<RatFuncQ> x2(s1);
    x2.add_term({2}, RatFuncQ(1));
    MPoly<RatFuncQ> dx2 = apply_D(x2, {1});
    CHECK(dx2.coeff({1}) == RatFuncQ(2) * (RatFuncQ(1) + q));  // <2>_1 x

    Shape s22{2, 2};
    MPoly<RatFuncQ> diag(s22);  // x11 x21 + x12 x22
    diag.add_term({1, 0, 1, 0}, RatFuncQ(1));
    diag.add_term({0, 1, 0, 1}, RatFuncQ(1));
    MPoly<RatFuncQ> r = apply_D(diag, {1, 1});
    CHECK(r == MPoly<RatFuncQ>::constant(s22, RatFuncQ(2)));

    Shape s2{1, 2};
    CHECK(apply_D(MPoly<RatFuncQ>::constant(s2, RatFuncQ(5)), {1}).is_zero());

    MPoly<RatFuncQ> x = MPoly<RatFuncQ>::variable(s2, 0, 0);
    MPoly<RatFuncQ> y = MPoly<RatFuncQ>::variable(s2, 0, 1);
    MPoly<RatFuncQ> p1 = apply_P(MPoly<RatFuncQ>::constant(s2, RatFuncQ(1)), {1});
    CHECK(p1 == x + y);
    MPoly<RatFuncQ> px = apply_P(x, {1});
    CHECK(px.coeff({2, 0}) == RatFuncQ(1) + q);
    CHECK(px.coeff({1, 1}) == RatFuncQ(1));
    MPoly<RatFuncQ> p2 = apply_P(MPoly<RatFuncQ>::constant(s1, RatFuncQ(1)), {2});
    CHECK(p2.coeff({2}) == RatFuncQ(1));

    MPoly<RatFuncQ> xy(s2);
    xy.add_term({1, 1}, RatFuncQ(1));
    CHECK(apply_eps_power(xy, 1) == MPoly<RatFuncQ>::constant(s2, RatFuncQ(1)));
    CHECK(apply_eps_power(x * x, 1).is_zero());
    MPoly<RatFuncQ> x3y2(s2);
    x3y2.add_term({3, 2}, RatFuncQ(1));
    CHECK(apply_eps_power(x3y2, 2).coeff({1, 0}) == RatFuncQ(12));
}

TEST_CASE("pinned operator matrices") {
    Shape s{1, 2};
    ExactMatrix<RatFuncQ> d1 = operator_matrix(OpSpec::make_D({1}), s, {1});
    REQUIRE(d1.rows() == 1);
    REQUIRE(d1.cols() == 2);
    CHECK(d1.at(0, 0) == RatFuncQ(1));
    CHECK(d1.at(0, 1) == RatFuncQ(1));
    ExactMatrix<RatFuncQ> eps = operator_matrix(OpSpec::make_eps(1), s, {2});
    REQUIRE(eps.rows() == 1);
    REQUIRE(eps.cols() == 3);
    CHECK(eps.at(0, 0).is_zero());
    CHECK(eps.at(0, 1) == RatFuncQ(1));
    CHECK(eps.at(0, 2).is_zero());
}

TEST_CASE("deformed operator D matches the first-principles oracle") {
    std::mt19937 rng(13579);
    for (Shape s : {Shape{1, 2}, Shape{1, 3}, Shape{2, 2}}) {
        for (int it = 0; it < 25; ++it) {
            MPoly<RatFuncQ> f = random_mpoly(rng, s);
            std::uniform_int_distribution<int> dd(0, 3);
            MultiDegree d(static_cast<size_t>(s.l));
            for (auto& x : d) x = dd(rng);
            if (total_degree(d) == 0) continue;
            CHECK(apply_D(f, d) == oracle_D(f, d, RatFuncQ::q()));
            RatFuncQ half{Rat(1, 2)};
            CHECK(apply_D(f, d, half) == oracle_D(f, d, half));
        }
    }
}

TEST_CASE("polarized power sum P matches the first-principles oracle") {
    std::mt19937 rng(24680);
    for (Shape s : {Shape{1, 2}, Shape{2, 2}}) {
        for (int it = 0; it < 25; ++it) {
            MPoly<RatFuncQ> f = random_mpoly(rng, s);
            std::uniform_int_distribution<int> dd(0, 2);
            MultiDegree d(static_cast<size_t>(s.l));
            for (auto& x : d) x = dd(rng);
            CHECK(apply_P(f, d) == oracle_P(f, d, RatFuncQ::q()));
        }
    }
}

TEST_CASE("epsilon is the product of one derivative per column") {
    std::mt19937 rng(1122);
    Shape s{1, 3};
    for (int it = 0; it < 25; ++it) {
        MPoly<RatFuncQ> f = random_mpoly(rng, s);
        MPoly<RatFuncQ> g = f;
        for (int rep = 0; rep < 2; ++rep)
            for (int j = 0; j < s.n; ++j) g = partial(g, 0, j);
        CHECK(apply_eps_power(f, 2) == g);
    }
    Shape two{2, 2};
    MPoly<RatFuncQ> h(two);
    h.add_term({1, 1, 1, 1}, RatFuncQ(1));
    CHECK_THROWS_AS(apply_eps_power(h, 1), NotSingleSet);
}

TEST_CASE("operator matrix agrees with direct application") {
    std::mt19937 rng(5566);
    Shape s{1, 3};
    MultiDegree source{4};
    auto monos = monomials_of_multidegree(s, source);
    for (OpSpec op : {OpSpec::make_D({2}), OpSpec::make_P({1}), OpSpec::make_eps(1)}) {
        ExactMatrix<RatFuncQ> m = operator_matrix(op, s, source);
        MultiDegree target = op_target_multidegree(op, s, source);
        auto tmonos = monomials_of_multidegree(s, target);
        std::uniform_int_distribution<int> cd(-3, 3);
        std::vector<RatFuncQ> coords;
        MPoly<RatFuncQ> f(s);
        for (const auto& e : monos) {
            int c = cd(rng);
            coords.push_back(RatFuncQ(static_cast<long>(c)));
            if (c != 0) f.add_term(e, RatFuncQ(static_cast<long>(c)));
        }
        std::vector<RatFuncQ> img = m.apply(coords);
        MPoly<RatFuncQ> g = apply_op(op, f);
        REQUIRE(img.size() == tmonos.size());
        for (size_t k = 0; k < tmonos.size(); ++k) CHECK(img[k] == g.coeff(tmonos[k]));
    }
}

TEST_CASE("degree underflow is reported") {
    Shape s{1, 2};
    CHECK_THROWS_AS(op_target_multidegree(OpSpec::make_D({3}), s, {2}), DegreeUnderflow);
}

TEST_CASE("commutator identity on small shapes") {
    for (Shape s : {Shape{1, 2}, Shape{2, 2}}) {
        MultiDegree d(static_cast<size_t>(s.l), 1);
        MultiDegree d2(static_cast<size_t>(s.l), 0);
        d2[0] = 3;
        BracketReport rep = bracket_check(d, d2, s, 5);
        CHECK(rep.ok);
        CHECK(rep.counterexamples.empty());
    }
}

TEST_CASE("epsilon shift identity") {
    // eps D_{q,k} = (1+q) D_{q/(1+q),k} eps on single-set polynomials
    std::mt19937 rng(7788);
    Shape s{1, 2};
    RatFuncQ q = RatFuncQ::q();
    RatFuncQ shifted = q / (RatFuncQ(1) + q);
    for (int it = 0; it < 30; ++it) {
        MPoly<RatFuncQ> f = random_mpoly(rng, s, 6);
        for (int k = 1; k <= 3; ++k) {
            MPoly<RatFuncQ> lhs = apply_eps_power(apply_D(f, {k}, q), 1);
            MPoly<RatFuncQ> rhs =
                apply_D(apply_eps_power(f, 1), {k}, shifted).scaled(RatFuncQ(1) + q);
            CHECK(lhs == rhs);
        }
    }
}
