// Qualitative analysis of feasible fixed-point systems: which components of
// the least solution are exactly 0, and (for AF-shaped systems) exactly 1.

#pragma once

#include "bpmc/pps.hpp"

#include <vector>

namespace bpmc {

// Component i is true iff the least-solution component i equals 0. Computed
// as the complement of the least boolean fixpoint in which a variable turns
// true once some monomial of its equation has all variables true (constant
// monomials count as all-true). Stabilises within size() rounds.
std::vector<char> decide_zero(const Pps& pps);

// Component i is true iff the least-solution component i equals 1.
//
// Requires an AF-shaped system (every equation is the constant 1 or has
// coefficient sum exactly 1); throws NotAfShapeError otherwise. Procedure:
// substitute 0 for the decide_zero variables (dropping monomials containing
// them), condense the dependency graph into SCCs and walk them dependencies
// first; a variable is "<1" iff its pruned equation evaluates below 1 at the
// all-ones point, or its SCC reaches an already-marked variable, or its SCC
// contains a cycle and the SCC-restricted Jacobian at the all-ones point has
// spectral radius > 1. Everything else is "=1".
std::vector<char> decide_one(const Pps& pps);

// Strongly connected components of the dependency digraph (edge i -> j when
// equation i mentions variable j), returned in reverse topological order:
// every SCC appears after the SCCs it depends on.
struct SccDecomposition {
    std::vector<std::vector<std::size_t>> components;  // reverse topological order
    std::vector<std::size_t> component_of;             // variable -> component index
};
SccDecomposition scc_decomposition(const Pps& pps,
                                   const std::vector<char>& active_mask);

}  // namespace bpmc
