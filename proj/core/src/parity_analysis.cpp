#include "bpmc/parity_analysis.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/pps.hpp"
#include "bpmc/pps_qualitative.hpp"

#include <algorithm>
#include <deque>

namespace bpmc {

namespace {

void require_total_colouring(const BranchingProcess& cbp) {
    if (!cbp.has_total_colouring()) {
        throw Error("parity analysis requires a colour for every type");
    }
}

}  // namespace

std::vector<std::size_t> n_set(const BranchingProcess& cbp, std::size_t type) {
    require_total_colouring(cbp);
    if (type >= cbp.type_count()) throw UnknownTypeError("#" + std::to_string(type));
    const unsigned bound = cbp.colour(type);

    // Backward reachability to `type` inside the colour-restricted digraph;
    // the length >= 1 requirement means the search starts from the
    // predecessors of `type`, not from `type` itself.
    std::vector<std::vector<std::size_t>> predecessors(cbp.type_count());
    for (const Rule& rule : cbp.rules()) {
        if (cbp.colour(rule.source) > bound) continue;
        for (std::size_t succ : rule.successors) {
            if (cbp.colour(succ) > bound) continue;
            predecessors[succ].push_back(rule.source);
        }
    }
    std::vector<char> can_close(cbp.type_count(), 0);
    std::deque<std::size_t> frontier;
    for (std::size_t pred : predecessors[type]) {
        if (!can_close[pred]) {
            can_close[pred] = 1;
            frontier.push_back(pred);
        }
    }
    while (!frontier.empty()) {
        std::size_t t = frontier.front();
        frontier.pop_front();
        for (std::size_t pred : predecessors[t]) {
            if (!can_close[pred]) {
                can_close[pred] = 1;
                frontier.push_back(pred);
            }
        }
    }
    std::vector<std::size_t> result;
    for (std::size_t t = 0; t < cbp.type_count(); ++t) {
        if (!can_close[t]) result.push_back(t);
    }
    return result;
}

std::vector<std::size_t> clean_set(const BranchingProcess& cbp) {
    require_total_colouring(cbp);
    std::vector<std::size_t> clean;
    for (std::size_t t = 0; t < cbp.type_count(); ++t) {
        if (cbp.colour(t) % 2 == 0) {
            clean.push_back(t);
            continue;
        }
        // Odd type: clean iff Pr[t |= AF N_t] = 1.
        Pps pps = build_af_pps(cbp, n_set(cbp, t));
        if (decide_one(pps)[t]) clean.push_back(t);
    }
    return clean;
}

std::vector<std::size_t> good_set(const BranchingProcess& cbp) {
    std::vector<std::size_t> clean = clean_set(cbp);
    std::vector<char> clean_mask(cbp.type_count(), 0);
    for (std::size_t t : clean) clean_mask[t] = 1;
    std::vector<std::size_t> good;
    for (std::size_t t = 0; t < cbp.type_count(); ++t) {
        std::vector<char> reach = reachable_mask(cbp, t);
        bool all_clean = true;
        for (std::size_t y = 0; y < cbp.type_count(); ++y) {
            if (reach[y] && !clean_mask[y]) {
                all_clean = false;
                break;
            }
        }
        if (all_clean) good.push_back(t);
    }
    return good;
}

bool qualitative_good(const BranchingProcess& cbp, std::size_t type) {
    if (type >= cbp.type_count()) throw UnknownTypeError("#" + std::to_string(type));
    std::vector<std::size_t> clean = clean_set(cbp);
    std::vector<char> clean_mask(cbp.type_count(), 0);
    for (std::size_t t : clean) clean_mask[t] = 1;
    for (std::size_t y : reachable_types(cbp, type)) {
        if (!clean_mask[y]) return false;
    }
    return true;
}

ParityAnalysis analyze_parity(const BranchingProcess& cbp) {
    ParityAnalysis analysis;
    analysis.n_sets.reserve(cbp.type_count());
    for (std::size_t t = 0; t < cbp.type_count(); ++t) {
        analysis.n_sets.push_back(n_set(cbp, t));
    }
    analysis.clean = clean_set(cbp);
    analysis.good_region = good_set(cbp);
    std::vector<char> clean_mask(cbp.type_count(), 0);
    for (std::size_t t : analysis.clean) clean_mask[t] = 1;
    analysis.almost_surely_good.assign(cbp.type_count(), 0);
    for (std::size_t t = 0; t < cbp.type_count(); ++t) {
        bool all_clean = true;
        for (std::size_t y : reachable_types(cbp, t)) {
            if (!clean_mask[y]) {
                all_clean = false;
                break;
            }
        }
        analysis.almost_surely_good[t] = all_clean;
    }
    return analysis;
}

Enclosure good_probability(const BranchingProcess& cbp, std::size_t type, const Rational& epsilon,
                           const SolveBudget& budget) {
    if (type >= cbp.type_count()) throw UnknownTypeError("#" + std::to_string(type));
    Pps pps = build_af_pps(cbp, good_set(cbp));
    std::vector<std::size_t> request{type};
    return newton(pps, epsilon, budget, &request)[type];
}

Enclosure accept_probability(const BranchingProcess& bp, const Dpta& automaton, std::size_t type,
                             const Rational& epsilon, const SolveBudget& budget) {
    if (type >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(type));
    ProductProcess prod = product(bp, automaton);
    return good_probability(prod.process, prod.index(type, automaton.initial()), epsilon, budget);
}

}  // namespace bpmc
