#pragma once

#include "bpmc/rational.hpp"

#include <optional>
#include <vector>

namespace bpmc {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact feasibility of { x >= 0, A x <= b } decided by a Phase-I simplex with
// Bland's rule over rationals. Small systems only; correctness over speed.
bool lp_feasible_nonneg(const RationalMatrix& A, const std::vector<Rational>& b);

// Dense LU solve with partial pivoting in doubles. Returns nullopt on a
// (numerically) singular matrix. Used for heuristic Newton directions and
// certificate vectors, whose exactness is re-established elsewhere.
std::optional<std::vector<double>> solve_double(std::vector<std::vector<double>> A,
                                                std::vector<double> b);

// True iff the digraph with an edge i->j whenever M[i][j] != 0 is strongly
// connected.
bool strongly_connected(const RationalMatrix& M);

// True iff the spectral radius of the irreducible nonnegative matrix J is
// <= 1, decided exactly as feasibility of { v >= 1, J v <= v } (the
// Collatz-Wielandt characterisation). Throws NotIrreducibleError.
bool spectral_radius_le_one(const RationalMatrix& J);

}  // namespace bpmc
