#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qharm/ratfunc.hpp"

using namespace qharm;

namespace {

RatFuncQ random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> degd(0, 3), coefd(-5, 5);
    auto poly = [&]() {
        std::vector<Int> c(static_cast<size_t>(degd(rng)) + 1);
        for (auto& x : c) x = coefd(rng);
        return QPoly(std::move(c));
    };
    QPoly den;
    while (den.degree() < 0) den = poly();
    return RatFuncQ(poly(), den);
}

}  // namespace

TEST_CASE("ratfunc canonical form") {
    CHECK(RatFuncQ(Rat(1, 2)).to_string() == "(1)/(2)");
    CHECK(RatFuncQ(Rat(-4, 6)).to_string() == "(-2)/(3)");
    QPoly q = QPoly::q();
    CHECK((RatFuncQ(QPoly(2) + QPoly::monomial(Int(2), 1)) / RatFuncQ(1)).to_string() ==
          "(2+2*q)/(1)");
    // polynomial cancellation
    RatFuncQ f{(q + QPoly(1)) * q, (q + QPoly(1)) * (q + QPoly(1))};
    CHECK(f.to_string() == "(q)/(1+q)");
    // denominator leading coefficient positive
    RatFuncQ g{q, QPoly(std::vector<Int>{Int(1), Int(-1)})};
    CHECK(g.to_string() == "(-q)/(-1+q)");
}

TEST_CASE("ratfunc string round trip") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 150; ++it) {
        RatFuncQ f = random_ratfunc(rng);
        CHECK(RatFuncQ::from_string(f.to_string()) == f);
    }
}

TEST_CASE("ratfunc field axioms on random samples") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 80; ++it) {
        RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFuncQ::zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFuncQ::one());
            CHECK(b / a * a == b);
        }
    }
}

TEST_CASE("ratfunc specialization is a homomorphism") {
    std::mt19937 rng(555);
    Rat q0(3, 7);
    for (int it = 0; it < 80; ++it) {
        RatFuncQ a = random_ratfunc(rng), b = random_ratfunc(rng);
        Rat va, vb;
        try {
            va = a.specialize(q0);
            vb = b.specialize(q0);
        } catch (const PoleAtQ0&) {
            continue;
        }
        CHECK((a + b).specialize(q0) == va + vb);
        CHECK((a * b).specialize(q0) == va * vb);
    }
}

TEST_CASE("ratfunc pole detection") {
    QPoly q = QPoly::q();
    RatFuncQ f{QPoly(1), q - QPoly(1)};
    CHECK_THROWS_AS(f.specialize(Rat(1)), PoleAtQ0);
    CHECK(f.specialize(Rat(2)) == Rat(1));
    RatFuncQ one_plus_q = RatFuncQ(1) + RatFuncQ::q();
    CHECK(one_plus_q.specialize(Rat(0)) == Rat(1));
    RatFuncQ one_plus_2q = RatFuncQ(1) + RatFuncQ(2) * RatFuncQ::q();
    CHECK(one_plus_2q.specialize(Rat(-1, 2)) == Rat(0));
    CHECK_THROWS_AS(one_plus_q.inverse().specialize(Rat(-1)), PoleAtQ0);
}

TEST_CASE("ratfunc substitution composes with specialization") {
    std::mt19937 rng(808);
    RatFuncQ shift = RatFuncQ::q() / (RatFuncQ(1) + RatFuncQ::q());  // q -> q/(1+q)
    for (int it = 0; it < 50; ++it) {
        RatFuncQ a = random_ratfunc(rng);
        Rat q0(1, 3);
        Rat shifted = shift.specialize(q0);
        Rat lhs, rhs;
        try {
            lhs = a.substitute(shift).specialize(q0);
            rhs = a.specialize(shifted);
        } catch (const PoleAtQ0&) {
            continue;
        }
        CHECK(lhs == rhs);
    }
}
