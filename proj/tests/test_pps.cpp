#include "bpmc/pps.hpp"

#include "bpmc/errors.hpp"

#include "support/corpus.hpp"
#include "support/helpers.hpp"

#include <doctest.h>

#include <random>

using namespace bpmc;
using namespace bpmc::testsupport;

namespace {

// x = 2/3 x^2 + 1/3, the single-variable equation of the running example.
Pps quadratic_third() {
    Equation eq;
    eq.terms.push_back(Term{Rational(2) / 3, {0, 0}});
    eq.terms.push_back(Term{Rational(1) / 3, {}});
    return Pps({"x"}, {eq});
}

}  // namespace

TEST_CASE("af pps of the intro process transcribes the rules") {
    BranchingProcess bp = intro_process();
    const std::size_t I = bp.type_index("I");
    const std::size_t B = bp.type_index("B");
    const std::size_t D = bp.type_index("D");
    Pps pps = build_af_pps(bp, {D});

    const Equation& d = pps.equation(D);
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].coefficient == 1);
    CHECK(d.terms[0].variables.empty());

    const Equation& b = pps.equation(B);
    REQUIRE(b.terms.size() == 3);  // 1/5 x_D + 1/2 x_B + 3/10 x_B^2
    CHECK(b.terms[0].variables == std::vector<std::uint32_t>{static_cast<std::uint32_t>(B)});
    CHECK(b.terms[0].coefficient == Rational(1) / 2);
    CHECK(b.terms[1].variables == std::vector<std::uint32_t>{static_cast<std::uint32_t>(D)});
    CHECK(b.terms[1].coefficient == Rational(1) / 5);
    CHECK(b.terms[2].variables ==
          std::vector<std::uint32_t>{static_cast<std::uint32_t>(B), static_cast<std::uint32_t>(B)});
    CHECK(b.terms[2].coefficient == Rational(3) / 10);

    const Equation& i = pps.equation(I);
    REQUIRE(i.terms.size() == 2);  // 9/10 x_I + 1/10 x_I x_B

    CHECK(pps.feasible());
    std::vector<Rational> ones(3, Rational(1));
    for (std::size_t v = 0; v < 3; ++v) CHECK(pps.evaluate(v, ones) == 1);
}

TEST_CASE("af pps with all types as targets is constantly one") {
    BranchingProcess bp = intro_process();
    Pps pps = build_af_pps(bp, {0, 1, 2});
    for (std::size_t v = 0; v < pps.size(); ++v) {
        REQUIRE(pps.equation(v).terms.size() == 1);
        CHECK(pps.equation(v).terms[0].coefficient == 1);
        CHECK(pps.equation(v).terms[0].variables.empty());
    }
}

TEST_CASE("running example with targets {1,4} matches the displayed system") {
    BranchingProcess bp = running_process();
    Pps pps = build_af_pps(bp, indices_of(bp, {"1", "4"}));
    // x2 = 1/2 x1 x3 + 1/2 x2 x3, x3 = 1/3 x1 + 2/3 x3^2
    const Equation& two = pps.equation(bp.type_index("2"));
    REQUIRE(two.terms.size() == 2);
    CHECK(two.terms[0].coefficient == Rational(1) / 2);
    CHECK(two.terms[1].coefficient == Rational(1) / 2);
    const Equation& three = pps.equation(bp.type_index("3"));
    REQUIRE(three.terms.size() == 2);
    CHECK(three.terms[0].coefficient == Rational(1) / 3);
    CHECK(three.terms[1].coefficient == Rational(2) / 3);
    CHECK(three.terms[1].variables.size() == 2);
}

TEST_CASE("pps dump golden format") {
    BranchingProcess bp = intro_process();
    Pps pps = build_af_pps(bp, {bp.type_index("D")});
    CHECK(pps.dump() ==
          "# pps: 3 variables\n"
          "# x1 := I\n"
          "# x2 := B\n"
          "# x3 := D\n"
          "x1 = 9/10*x1 + 1/10*x1*x2\n"
          "x2 = 1/2*x2 + 1/5*x3 + 3/10*x2*x2\n"
          "x3 = 1\n");
}

TEST_CASE("kleene iterates of the constant equation") {
    Equation eq;
    eq.terms.push_back(Term{Rational(1), {}});
    Pps pps({"x"}, {eq});
    CHECK(kleene(pps, 0) == std::vector<Rational>{Rational(0)});
    CHECK(kleene(pps, 1) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("kleene iterates of x = 2/3 x^2 + 1/3") {
    Pps pps = quadratic_third();
    CHECK(kleene(pps, 1) == std::vector<Rational>{Rational(1) / 3});
    CHECK(kleene(pps, 2) == std::vector<Rational>{Rational(11) / 27});  // 1/3 + 2/27
}

TEST_CASE("kleene is monotone and bounded on random af systems") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 25; ++round) {
        BranchingProcess bp = random_process(rng);
        Pps pps = build_af_pps(bp, random_subset(rng, bp.type_count()));
        std::vector<Rational> prev = kleene(pps, 0);
        for (unsigned k = 1; k <= 6; ++k) {
            std::vector<Rational> next = kleene(pps, k);
            for (std::size_t i = 0; i < pps.size(); ++i) {
                CHECK(prev[i] <= next[i]);
                CHECK(next[i] <= 1);
            }
            prev = std::move(next);
        }
    }
}

TEST_CASE("pps canonicalisation merges duplicate monomials") {
    Equation eq;
    eq.terms.push_back(Term{Rational(1) / 4, {0}});
    eq.terms.push_back(Term{Rational(1) / 4, {0}});
    eq.terms.push_back(Term{Rational(1) / 2, {}});
    Pps pps({"x"}, {eq});
    REQUIRE(pps.equation(0).terms.size() == 2);
    CHECK(pps.equation(0).terms[0].variables.empty());
    CHECK(pps.equation(0).terms[1].coefficient == Rational(1) / 2);
}

TEST_CASE("infeasible systems are detected") {
    Equation eq;
    eq.terms.push_back(Term{Rational(3) / 2, {}});
    Pps pps({"x"}, {eq});
    CHECK(!pps.feasible());
    CHECK_THROWS_AS(pps.require_feasible(), Error);
}

TEST_CASE("empty system round-trips") {
    Pps pps;
    CHECK(pps.size() == 0);
    CHECK(kleene(pps, 5).empty());
    CHECK(pps.feasible());
}
