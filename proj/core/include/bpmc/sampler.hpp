// Monte Carlo sampling of depth-bounded tree prefixes. This is the
// independent statistical oracle for the analytic pipeline, so determinism
// across platforms and run orders is part of the contract:
//
//   - Stream derivation "splitmix64-v1": every node owns a 64-bit seed; the
//     child at index k derives its seed by mixing (parent_seed, k), so the
//     randomness below a node depends only on the node's address and the run
//     seed, never on evaluation order or truncation depth.
//   - Rule selection quantises the exact cumulative rule probabilities to
//     64-bit thresholds (floor(cum * 2^64)); the per-rule bias is below
//     2^-63, far under any statistical tolerance used here, and the draw is
//     a single integer comparison.

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/tree_prefix.hpp"

#include <cstdint>
#include <vector>

namespace bpmc {

// splitmix64 finalizer; the single mixing primitive behind all derivations.
std::uint64_t mix64(std::uint64_t x);

// Seed of the k-th child (k is 1-based) of a node with seed `parent`.
std::uint64_t child_seed(std::uint64_t parent, std::uint32_t k);

// Seed of the root of the i-th run (i is 0-based) of a multi-sample estimate.
std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run_index);

struct Estimate {
    Rational point;        // in [0,1]
    Rational half_width;   // 99% normal-approximation binomial bound, >= 0
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Precomputed 64-bit cumulative thresholds for the rules of every type.
class RuleSelector {
  public:
    explicit RuleSelector(const BranchingProcess& bp);
    // Index (into bp.rules()) of the rule drawn for `type` by `draw`.
    std::size_t pick(std::size_t type, std::uint64_t draw) const;

  private:
    std::vector<std::vector<std::uint64_t>> thresholds_;  // per type, strictly increasing
    std::vector<std::vector<std::size_t>> rule_index_;
};

// Depth-`depth` truncation of a random tree rooted at `start`: every node at
// depth < `depth` is expanded with a rule drawn with the rule's probability,
// independently across nodes. Deterministic in (bp, start, depth, seed).
TreePrefix sample_prefix(const BranchingProcess& bp, std::size_t start, unsigned depth,
                         std::uint64_t seed);

// Fraction of `samples` sampled depth-bounded prefixes in which every
// depth-`depth` branch passes through a node whose type is in `targets`.
// A consistent lower-bound estimator of Pr[t_start |= AF targets] as
// depth -> infinity. Exploration is pruned at target hits, which leaves the
// indicator unchanged.
Estimate estimate_af(const BranchingProcess& bp, std::size_t start,
                     const std::vector<std::size_t>& targets, unsigned depth,
                     std::uint64_t samples, std::uint64_t seed);

// Statistics of a single pruned estimate run, for sample reporting.
struct RunStats {
    bool all_branches_hit = false;
    std::uint64_t nodes_visited = 0;
};
RunStats estimate_af_single_run(const BranchingProcess& bp, const RuleSelector& selector,
                                std::size_t start, const std::vector<char>& target_mask,
                                unsigned depth, std::uint64_t node_seed);

}  // namespace bpmc
