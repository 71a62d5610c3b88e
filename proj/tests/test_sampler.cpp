#include "bpmc/sampler.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/pps.hpp"

#include "support/corpus.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace bpmc;
using namespace bpmc::testsupport;

TEST_CASE("depth zero samples a single node") {
    BranchingProcess bp = intro_process();
    TreePrefix prefix = sample_prefix(bp, bp.type_index("B"), 0, 42);
    CHECK(prefix.size() == 1);
    CHECK(prefix.at({}).type == bp.type_index("B"));
    CHECK(prefix.at({}).degree == 0);
}

TEST_CASE("sampling is deterministic in the seed") {
    BranchingProcess bp = intro_process();
    TreePrefix a = sample_prefix(bp, bp.type_index("I"), 8, 1234);
    TreePrefix b = sample_prefix(bp, bp.type_index("I"), 8, 1234);
    REQUIRE(a.size() == b.size());
    auto ita = a.nodes().begin();
    auto itb = b.nodes().begin();
    for (; ita != a.nodes().end(); ++ita, ++itb) {
        CHECK(ita->first == itb->first);
        CHECK(ita->second.type == itb->second.type);
        CHECK(ita->second.degree == itb->second.degree);
    }
    TreePrefix c = sample_prefix(bp, bp.type_index("I"), 8, 1235);
    bool identical = a.size() == c.size();
    if (identical) {
        auto it1 = a.nodes().begin(), it2 = c.nodes().begin();
        for (; it1 != a.nodes().end(); ++it1, ++it2) {
            if (it1->second.type != it2->second.type ||
                it1->second.degree != it2->second.degree) {
                identical = false;
                break;
            }
        }
    }
    CHECK(!identical);
}

TEST_CASE("sampled prefixes are generated by the process") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        BranchingProcess bp = random_process(rng);
        TreePrefix prefix = sample_prefix(bp, 0, 4, rng());
        CHECK(prefix_probability(bp, prefix) > 0);
    }
}

TEST_CASE("root rule frequencies match the rule probabilities") {
    BranchingProcess bp = intro_process();
    const std::size_t B = bp.type_index("B");
    const std::size_t D = bp.type_index("D");
    int to_d = 0;
    const int n = 10000;
    for (int s = 0; s < n; ++s) {
        TreePrefix prefix = sample_prefix(bp, B, 1, run_seed(99, s));
        if (prefix.at({}).degree == 1 && prefix.at({1}).type == D) ++to_d;
    }
    double fraction = static_cast<double>(to_d) / n;
    CHECK(std::fabs(fraction - 0.2) < 0.02);  // 99%-level binomial bound ~ 0.0103
}

TEST_CASE("estimate_af hits one when the root is a target") {
    BranchingProcess bp = intro_process();
    std::vector<std::size_t> all{0, 1, 2};
    Estimate e = estimate_af(bp, bp.type_index("I"), all, 0, 50, 7);
    CHECK(e.point == Rational(1));
}

TEST_CASE("estimate_af approaches the AF probability from B") {
    BranchingProcess bp = intro_process();
    Estimate e = estimate_af(bp, bp.type_index("B"), {bp.type_index("D")}, 60, 20000, 2024);
    CHECK(to_double(e.point) > 2.0 / 3 - 0.02);
    CHECK(to_double(e.point) < 2.0 / 3 + 0.02);
    CHECK(e.half_width > 0);
    CHECK(e.samples == 20000);
}

TEST_CASE("estimate_af from I with target D stays at zero") {
    BranchingProcess bp = intro_process();
    Estimate e = estimate_af(bp, bp.type_index("I"), {bp.type_index("D")}, 60, 20000, 77);
    CHECK(to_double(e.point) < 0.02);
}

TEST_CASE("estimator expectation equals the shifted Kleene iterate") {
    // E[indicator at depth d] is exactly f^{d+1}(0) of the AF system; with a
    // large sample the point estimate lands within the binomial bound.
    BranchingProcess bp = intro_process();
    Pps pps = build_af_pps(bp, {bp.type_index("D")});
    double expected = kleene_double(pps, 13)[bp.type_index("B")];
    Estimate e = estimate_af(bp, bp.type_index("B"), {bp.type_index("D")}, 12, 20000, 5);
    CHECK(std::fabs(to_double(e.point) - expected) < to_double(e.half_width) + 0.005);
}

TEST_CASE("estimate is pathwise nondecreasing in depth for paired seeds") {
    // Deeper truncation of the same underlying tree only adds chances for a
    // branch to hit the target; the address-derived randomness makes the
    // per-seed indicators comparable.
    BranchingProcess bp = intro_process();
    const std::size_t B = bp.type_index("B");
    const std::vector<std::size_t> targets{bp.type_index("D")};
    for (unsigned depth : {2u, 5u, 9u}) {
        Estimate shallow = estimate_af(bp, B, targets, depth, 4000, 31);
        Estimate deep = estimate_af(bp, B, targets, depth + 4, 4000, 31);
        CHECK(shallow.point <= deep.point);
    }
}

TEST_CASE("estimate half-width keeps the clamped interval inside [0,1]") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 10; ++round) {
        BranchingProcess bp = random_process(rng);
        std::vector<std::size_t> targets = random_subset(rng, bp.type_count());
        Estimate e = estimate_af(bp, 0, targets, 6, 500, rng());
        CHECK(e.point >= 0);
        CHECK(e.point <= 1);
        CHECK(e.half_width >= 0);
    }
}

TEST_CASE("unknown start or target types are rejected") {
    BranchingProcess bp = intro_process();
    CHECK_THROWS_AS(sample_prefix(bp, 17, 1, 0), UnknownTypeError);
    CHECK_THROWS_AS(estimate_af(bp, 0, {9}, 1, 10, 0), UnknownTypeError);
}
