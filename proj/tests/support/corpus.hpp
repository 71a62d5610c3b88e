// Deterministic random corpus of valid branching processes for property
// suites. Integer weights are normalised exactly, so probability sums are
// exactly 1 by construction.

#pragma once

#include "bpmc/branching_process.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace bpmc::testsupport {

struct CorpusOptions {
    std::size_t min_types = 1;
    std::size_t max_types = 6;
    std::size_t max_rules_per_type = 3;
    std::size_t max_arity = 3;
    std::uint64_t max_weight = 8;
    bool with_labels = false;
    bool with_colours = false;
    unsigned max_colour = 4;
    std::size_t max_propositions = 3;
};

inline BranchingProcess random_process(std::mt19937_64& rng, const CorpusOptions& opt = {}) {
    std::uniform_int_distribution<std::size_t> type_count_dist(opt.min_types, opt.max_types);
    const std::size_t n = type_count_dist(rng);
    std::vector<std::string> types;
    for (std::size_t t = 0; t < n; ++t) types.push_back("T" + std::to_string(t));

    std::uniform_int_distribution<std::size_t> rule_count_dist(1, opt.max_rules_per_type);
    std::uniform_int_distribution<std::size_t> arity_dist(1, opt.max_arity);
    std::uniform_int_distribution<std::uint64_t> weight_dist(1, opt.max_weight);
    std::uniform_int_distribution<std::size_t> type_dist(0, n - 1);

    std::vector<Rule> rules;
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t rule_count = rule_count_dist(rng);
        std::vector<std::uint64_t> weights(rule_count);
        std::uint64_t total = 0;
        for (auto& w : weights) {
            w = weight_dist(rng);
            total += w;
        }
        for (std::size_t r = 0; r < rule_count; ++r) {
            Rule rule;
            rule.source = t;
            rule.probability = Rational(Integer(weights[r]), Integer(total));
            const std::size_t arity = arity_dist(rng);
            for (std::size_t k = 0; k < arity; ++k) rule.successors.push_back(type_dist(rng));
            rules.push_back(std::move(rule));
        }
    }
    BranchingProcess bp(std::move(types), std::move(rules));
    if (opt.with_labels) {
        std::uniform_int_distribution<int> coin(0, 1);
        std::vector<std::vector<std::string>> labels(n);
        for (std::size_t t = 0; t < n; ++t) {
            for (std::size_t p = 0; p < opt.max_propositions; ++p) {
                if (coin(rng)) labels[t].push_back("p" + std::to_string(p));
            }
        }
        bp.set_labels(std::move(labels));
    }
    if (opt.with_colours) {
        std::uniform_int_distribution<unsigned> colour_dist(0, opt.max_colour);
        std::vector<std::optional<unsigned>> colours(n);
        for (auto& c : colours) c = colour_dist(rng);
        bp.set_colours(std::move(colours));
    }
    return bp;
}

// Random (possibly empty) subset of the type indices.
inline std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::size_t> subset;
    for (std::size_t t = 0; t < n; ++t) {
        if (coin(rng)) subset.push_back(t);
    }
    return subset;
}

}  // namespace bpmc::testsupport
