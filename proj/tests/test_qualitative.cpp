#include "bpmc/pps_qualitative.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/linear.hpp"
#include "bpmc/pps.hpp"

#include "support/corpus.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bpmc;
using namespace bpmc::testsupport;

TEST_CASE("decide_zero on the intro AF-{D} system") {
    BranchingProcess bp = intro_process();
    Pps pps = build_af_pps(bp, {bp.type_index("D")});
    std::vector<char> zero = decide_zero(pps);
    CHECK(zero[bp.type_index("I")]);   // monomials x_I and x_I x_B never fire
    CHECK(!zero[bp.type_index("B")]);
    CHECK(!zero[bp.type_index("D")]);
    // Agrees with the Kleene oracle staying at 0.
    CHECK(kleene_double(pps, 200)[bp.type_index("I")] == 0.0);
}

TEST_CASE("decide_zero on constant and self-loop equations") {
    Equation constant;
    constant.terms.push_back(Term{Rational(1), {}});
    Pps one({"x"}, {constant});
    CHECK(!decide_zero(one)[0]);

    Equation self;
    self.terms.push_back(Term{Rational(1), {0}});
    Pps loop({"x"}, {self});
    CHECK(decide_zero(loop)[0]);
}

TEST_CASE("spectral radius decision on the spec matrices") {
    CHECK(spectral_radius_le_one({{Rational(1)}}));
    CHECK(spectral_radius_le_one({{Rational(0), Rational(1) / 2}, {Rational(1), Rational(0)}}));
    CHECK(!spectral_radius_le_one({{Rational(6) / 5}}));
}

TEST_CASE("spectral radius requires irreducibility") {
    RationalMatrix reducible{{Rational(1) / 2, Rational(1) / 2}, {Rational(0), Rational(1) / 2}};
    CHECK_THROWS_AS(spectral_radius_le_one(reducible), NotIrreducibleError);
}

TEST_CASE("spectral radius decision matches a power-iteration oracle") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> dim_dist(1, 5);
    std::uniform_int_distribution<int> num_dist(0, 6);
    for (int round = 0; round < 60; ++round) {
        const int n = dim_dist(rng);
        RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            // Ring structure keeps the matrix irreducible; extra entries vary.
            m[i][(i + 1) % n] = Rational(num_dist(rng) + 1) / 6;
            m[i][num_dist(rng) % n] += Rational(num_dist(rng)) / 6;
        }
        // Power iteration on doubles.
        std::vector<double> v(n, 1.0);
        double rho = 0;
        for (int it = 0; it < 4000; ++it) {
            std::vector<double> next(n, 0.0);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) next[i] += to_double(m[i][j]) * v[j];
            }
            double norm = 0;
            for (double x : next) norm = std::max(norm, x);
            rho = norm;
            for (double& x : next) x /= norm;
            v = next;
        }
        if (std::fabs(rho - 1.0) < 1e-6) continue;  // too close to call numerically
        CHECK(spectral_radius_le_one(m) == (rho < 1.0));
    }
}

TEST_CASE("decide_one on the running example N-set systems") {
    BranchingProcess bp = running_process();
    // Lambda = N_1 = {2,3,4}: type 1 is almost-surely absorbed.
    Pps n1 = build_af_pps(bp, indices_of(bp, {"2", "3", "4"}));
    CHECK(decide_one(n1)[bp.type_index("1")]);
    // Lambda = N_3 = {1,4}: type 3 keeps an escape.
    Pps n3 = build_af_pps(bp, indices_of(bp, {"1", "4"}));
    CHECK(!decide_one(n3)[bp.type_index("3")]);
}

TEST_CASE("decide_one accepts the critical quadratic") {
    // x = 1/2 x^2 + 1/2: the Jacobian at 1 has value exactly 1.
    Equation eq;
    eq.terms.push_back(Term{Rational(1) / 2, {0, 0}});
    eq.terms.push_back(Term{Rational(1) / 2, {}});
    Pps pps({"x"}, {eq});
    CHECK(decide_one(pps)[0]);
}

TEST_CASE("decide_one rejects the supercritical quadratic") {
    // x = 2/3 x^2 + 1/3: least solution 1/2.
    Equation eq;
    eq.terms.push_back(Term{Rational(2) / 3, {0, 0}});
    eq.terms.push_back(Term{Rational(1) / 3, {}});
    Pps pps({"x"}, {eq});
    CHECK(!decide_one(pps)[0]);
}

TEST_CASE("decide_one requires AF shape") {
    Equation eq;
    eq.terms.push_back(Term{Rational(1) / 2, {}});  // coefficient sum 1/2, not constant 1
    Pps pps({"x"}, {eq});
    CHECK_THROWS_AS(decide_one(pps), NotAfShapeError);
}

TEST_CASE("decide_one of the swapped intro cleanness system is true") {
    // Cleanness of B in the swapped process: x = 3/10 + 1/2 x + 1/5 x^2 has
    // least solution 1 (subcritical at the fixed point).
    Equation eq;
    eq.terms.push_back(Term{Rational(3) / 10, {}});
    eq.terms.push_back(Term{Rational(1) / 2, {0}});
    eq.terms.push_back(Term{Rational(1) / 5, {0, 0}});
    Pps pps({"x"}, {eq});
    CHECK(decide_one(pps)[0]);
}

TEST_CASE("qualitative deciders agree with a deep Kleene oracle on random corpora") {
    std::mt19937_64 rng(59);
    for (int round = 0; round < 60; ++round) {
        BranchingProcess bp = random_process(rng);
        Pps pps = build_af_pps(bp, random_subset(rng, bp.type_count()));
        std::vector<char> zero = decide_zero(pps);
        std::vector<char> one = decide_one(pps);
        std::vector<double> deep = kleene_double(pps, 4000);
        for (std::size_t i = 0; i < pps.size(); ++i) {
            if (zero[i]) CHECK(deep[i] == 0.0);
            if (deep[i] > 1e-9) CHECK(!zero[i]);
            // The Kleene tail of critical components converges slowly, so the
            // oracle threshold is coarse and one-sided.
            if (one[i]) CHECK(deep[i] > 0.99);
            if (deep[i] < 0.9) CHECK(!one[i]);
        }
    }
}

TEST_CASE("scc decomposition orders dependencies first") {
    BranchingProcess bp = running_process();
    Pps pps = build_af_pps(bp, indices_of(bp, {"4"}));
    std::vector<char> active(pps.size(), 1);
    SccDecomposition sccs = scc_decomposition(pps, active);
    std::vector<char> seen(pps.size(), 0);
    for (const auto& component : sccs.components) {
        for (std::size_t i : component) {
            for (std::uint32_t dep : pps.dependencies(i)) {
                if (sccs.component_of[dep] != sccs.component_of[i]) CHECK(seen[dep]);
            }
        }
        for (std::size_t i : component) seen[i] = 1;
    }
}
