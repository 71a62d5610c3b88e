#include "bpmc/sampler.hpp"

#include "bpmc/errors.hpp"

#include <cmath>

namespace bpmc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kRuleDrawSalt = 0xD1B54A32D192ED03ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t parent, std::uint32_t k) {
    return mix64(parent ^ (kGolden * static_cast<std::uint64_t>(k)));
}

std::uint64_t run_seed(std::uint64_t seed, std::uint64_t run_index) {
    return mix64(seed + kGolden * (run_index + 1));
}

RuleSelector::RuleSelector(const BranchingProcess& bp) {
    thresholds_.resize(bp.type_count());
    rule_index_.resize(bp.type_count());
    const Integer scale = Integer{1} << 64;
    for (std::size_t t = 0; t < bp.type_count(); ++t) {
        Rational cumulative(0);
        for (std::size_t r : bp.rules_of(t)) {
            cumulative += bp.rules()[r].probability;
            Integer threshold = numerator(cumulative) * scale / denominator(cumulative);
            std::uint64_t clipped = threshold >= scale
                                        ? ~std::uint64_t{0}
                                        : threshold.convert_to<std::uint64_t>();
            thresholds_[t].push_back(clipped);
            rule_index_[t].push_back(r);
        }
    }
}

std::size_t RuleSelector::pick(std::size_t type, std::uint64_t draw) const {
    const auto& cuts = thresholds_[type];
    if (cuts.empty()) throw Error("type '#" + std::to_string(type) + "' has no rules");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (draw < cuts[i]) return rule_index_[type][i];
    }
    return rule_index_[type].back();
}

namespace {

void sample_into(const BranchingProcess& bp, const RuleSelector& selector,
                 std::map<NodeAddress, TreePrefix::Node>& nodes, NodeAddress& address,
                 std::size_t type, unsigned depth_left, std::uint64_t node_seed) {
    if (depth_left == 0) {
        nodes.emplace(address, TreePrefix::Node{type, 0});
        return;
    }
    std::size_t rule = selector.pick(type, mix64(node_seed ^ kRuleDrawSalt));
    const auto& successors = bp.rules()[rule].successors;
    nodes.emplace(address, TreePrefix::Node{type, static_cast<std::uint32_t>(successors.size())});
    for (std::uint32_t k = 1; k <= successors.size(); ++k) {
        address.push_back(k);
        sample_into(bp, selector, nodes, address, successors[k - 1], depth_left - 1,
                    child_seed(node_seed, k));
        address.pop_back();
    }
}

}  // namespace

TreePrefix sample_prefix(const BranchingProcess& bp, std::size_t start, unsigned depth,
                         std::uint64_t seed) {
    if (start >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(start));
    RuleSelector selector(bp);
    std::map<NodeAddress, TreePrefix::Node> nodes;
    NodeAddress address;
    sample_into(bp, selector, nodes, address, start, depth, seed);
    return TreePrefix(std::move(nodes));
}

namespace {

bool all_hit(const BranchingProcess& bp, const RuleSelector& selector,
             const std::vector<char>& target_mask, std::size_t type, unsigned depth_left,
             std::uint64_t node_seed, std::uint64_t& visited) {
    ++visited;
    if (target_mask[type]) return true;
    if (depth_left == 0) return false;
    std::size_t rule = selector.pick(type, mix64(node_seed ^ kRuleDrawSalt));
    const auto& successors = bp.rules()[rule].successors;
    for (std::uint32_t k = 1; k <= successors.size(); ++k) {
        if (!all_hit(bp, selector, target_mask, successors[k - 1], depth_left - 1,
                     child_seed(node_seed, k), visited)) {
            return false;
        }
    }
    return true;
}

}  // namespace

RunStats estimate_af_single_run(const BranchingProcess& bp, const RuleSelector& selector,
                                std::size_t start, const std::vector<char>& target_mask,
                                unsigned depth, std::uint64_t node_seed) {
    RunStats stats;
    stats.all_branches_hit =
        all_hit(bp, selector, target_mask, start, depth, node_seed, stats.nodes_visited);
    return stats;
}

Estimate estimate_af(const BranchingProcess& bp, std::size_t start,
                     const std::vector<std::size_t>& targets, unsigned depth,
                     std::uint64_t samples, std::uint64_t seed) {
    if (start >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(start));
    std::vector<char> target_mask(bp.type_count(), 0);
    for (std::size_t t : targets) {
        if (t >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(t));
        target_mask[t] = 1;
    }
    RuleSelector selector(bp);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        RunStats stats =
            estimate_af_single_run(bp, selector, start, target_mask, depth, run_seed(seed, i));
        if (stats.all_branches_hit) ++hits;
    }
    Estimate estimate;
    estimate.point = Rational(Integer(hits), Integer(samples));
    estimate.samples = samples;
    estimate.seed = seed;
    // 99% two-sided normal approximation: 2.576 * sqrt(p(1-p)/n), rounded up
    // to a dyadic so the bound stays a bound.
    double p = to_double(estimate.point);
    double hw = 2.576 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    estimate.half_width = round_up_dyadic(rational_from_double(hw), 40);
    return estimate;
}

}  // namespace bpmc
