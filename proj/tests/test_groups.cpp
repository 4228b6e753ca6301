#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qharm/groups.hpp"

using namespace qharm;

namespace {

MPoly<RatFuncQ> random_mpoly(std::mt19937& rng, Shape s) {
    std::uniform_int_distribution<int> ed(0, 3), cd(-3, 3), nterms(1, 4);
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

MPoly<CycElem> lift(const MPoly<RatFuncQ>& f) {
    MPoly<CycElem> out(f.shape());
    for (const auto& [e, c] : f.terms()) out.add_term(e, CycElem(c));
    return out;
}

}  // namespace

TEST_CASE("group orders and enumeration") {
    CHECK(GroupSpec(1, 1, 3).order() == 6);
    CHECK(GroupSpec(2, 1, 2).order() == 8);
    CHECK(GroupSpec(2, 2, 2).order() == 4);
    CHECK(GroupSpec(3, 1, 2).order() == 18);
    CHECK(GroupSpec(4, 2, 2).order() == 16);
    for (GroupSpec g : {GroupSpec(1, 1, 3), GroupSpec(2, 1, 2), GroupSpec(3, 3, 2)}) {
        auto elems = enumerate(g);
        CHECK(static_cast<long>(elems.size()) == g.order());
        CHECK(elems[0].is_identity());
        // all labels distinct
        std::set<std::string> labels;
        for (const auto& w : elems) labels.insert(w.label());
        CHECK(labels.size() == elems.size());
    }
    CHECK_THROWS_AS(enumerate(GroupSpec(10, 1, 5), 1000), TooLarge);
    CHECK_THROWS_AS(GroupSpec(4, 3, 2), Error);  // p must divide m
}

TEST_CASE("composition is a group law") {
    GroupSpec g(3, 1, 3);
    auto elems = enumerate(g);
    std::mt19937 rng(2468);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    for (int it = 0; it < 40; ++it) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        const auto& c = elems[pick(rng)];
        CHECK(compose(g, compose(g, a, b), c).label() == compose(g, a, compose(g, b, c)).label());
        CHECK(compose(g, elems[0], a).label() == a.label());
        CHECK(compose(g, a, elems[0]).label() == a.label());
    }
}

TEST_CASE("action is compatible with composition and the ring structure") {
    GroupSpec g(3, 1, 2);
    auto elems = enumerate(g);
    std::mt19937 rng(1357);
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    Shape s{1, 2};
    for (int it = 0; it < 20; ++it) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        MPoly<RatFuncQ> f = random_mpoly(rng, s), h = random_mpoly(rng, s);
        CHECK(act(g, a, f + h) == act(g, a, f) + act(g, a, h));
        CHECK(act(g, a, f * h) == act(g, a, f) * act(g, a, h));
        CHECK(act(g, compose(g, a, b), f) == act(g, a, act(g, b, f)));
    }
}

TEST_CASE("polarized power sums are invariant when m divides the degree") {
    GroupSpec g(2, 1, 2);
    Shape s{1, 2};
    // P_2 applied to 1 gives x^2 + y^2, an invariant of G(2,2)
    MPoly<RatFuncQ> one = MPoly<RatFuncQ>::constant(s, RatFuncQ(1));
    MPoly<RatFuncQ> p2(s);
    p2.add_term({2, 0}, RatFuncQ(1));
    p2.add_term({0, 2}, RatFuncQ(1));
    for (const auto& w : enumerate(g)) CHECK(act(g, w, p2) == lift(p2));
}

TEST_CASE("e_n to the m/p is invariant in G(m,p,n)") {
    GroupSpec g(4, 2, 2);
    Shape s{1, 2};
    MPoly<RatFuncQ> e2sq(s);  // (xy)^{m/p} = (xy)^2
    e2sq.add_term({2, 2}, RatFuncQ(1));
    for (const auto& w : enumerate(g)) CHECK(act(g, w, e2sq) == lift(e2sq));
}

TEST_CASE("graded trace at the identity is the dimension") {
    GroupSpec g(1, 1, 2);
    Shape s{1, 2};
    MPoly<RatFuncQ> x = MPoly<RatFuncQ>::variable(s, 0, 0);
    MPoly<RatFuncQ> y = MPoly<RatFuncQ>::variable(s, 0, 1);
    std::vector<MPoly<RatFuncQ>> basis{x - y};
    auto elems = enumerate(g);
    CHECK(graded_trace(g, elems[0], basis) == CycElem::one());
    // the transposition negates x - y
    const auto& swap = elems[0].is_identity() ? elems[1] : elems[0];
    CHECK(graded_trace(g, swap, basis) == CycElem::zero() - CycElem::one());
}

TEST_CASE("three cycle fixes the top S_3 harmonic component") {
    // the degree-3 component is one-dimensional (sign representation); a
    // 3-cycle is even, so its trace there is +1
    GroupSpec g(1, 1, 3);
    Shape s{1, 3};
    // Vandermonde determinant (x-y)(x-z)(y-z) expanded
    MPoly<RatFuncQ> x = MPoly<RatFuncQ>::variable(s, 0, 0);
    MPoly<RatFuncQ> y = MPoly<RatFuncQ>::variable(s, 0, 1);
    MPoly<RatFuncQ> z = MPoly<RatFuncQ>::variable(s, 0, 2);
    std::vector<MPoly<RatFuncQ>> basis{(x - y) * (x - z) * (y - z)};
    for (const auto& w : enumerate(g)) {
        bool is_three_cycle = !w.is_identity() && w.perm[0] != 0 && w.perm[1] != 1 && w.perm[2] != 2;
        if (is_three_cycle) CHECK(graded_trace(g, w, basis) == CycElem::one());
    }
}

TEST_CASE("graded trace rejects unstable spans") {
    GroupSpec g(1, 1, 2);
    Shape s{1, 2};
    MPoly<RatFuncQ> x = MPoly<RatFuncQ>::variable(s, 0, 0);
    auto elems = enumerate(g);
    const auto& swap = elems[0].is_identity() ? elems[1] : elems[0];
    std::vector<MPoly<RatFuncQ>> basis{x};  // swap maps x to y, outside the span
    CHECK_THROWS_AS(graded_trace(g, swap, basis), NotStable);
}
