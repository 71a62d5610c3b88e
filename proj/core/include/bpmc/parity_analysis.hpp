// Qualitative and quantitative analysis of "the random tree is good for the
// colouring": N-sets, clean types, the good region G, and the reduction of
// Pr[t_X is good] to Pr[t_X |= AF G].

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/dpta.hpp"
#include "bpmc/pps_newton.hpp"

#include <vector>

namespace bpmc {

// N_X: the types from which no generated tree has an X-closing path (a path
// of length >= 1 ending in X with every colour on it <= c(X)). Requires a
// total colouring.
std::vector<std::size_t> n_set(const BranchingProcess& cbp, std::size_t type);

// Clean types: even colour, or Pr[t_X has an X-branch] = 0, decided through
// the dichotomy Pr[AF N_X] = 1.
std::vector<std::size_t> clean_set(const BranchingProcess& cbp);

// G: types all of whose reachable types are clean.
std::vector<std::size_t> good_set(const BranchingProcess& cbp);

// Pr[t_X is good] = 1, decided as reachable(X) subseteq clean.
bool qualitative_good(const BranchingProcess& cbp, std::size_t type);

struct ParityAnalysis {
    std::vector<std::vector<std::size_t>> n_sets;  // per type
    std::vector<std::size_t> clean;
    std::vector<std::size_t> good_region;
    std::vector<char> almost_surely_good;          // per type
};
ParityAnalysis analyze_parity(const BranchingProcess& cbp);

// Width-epsilon enclosure (or exact value) of Pr[t_X is good], via AF G.
Enclosure good_probability(const BranchingProcess& cbp, std::size_t type,
                           const Rational& epsilon, const SolveBudget& budget = {});

// Enclosure of Pr_X[t accepted by automaton] through the product process.
Enclosure accept_probability(const BranchingProcess& bp, const Dpta& automaton, std::size_t type,
                             const Rational& epsilon, const SolveBudget& budget = {});

}  // namespace bpmc
