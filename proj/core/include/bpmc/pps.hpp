// Monotone polynomial fixed-point systems x = f(x): per variable a polynomial
// with strictly positive rational coefficients, subject to the feasibility
// condition f(1) <= 1. The quantities this library computes are components of
// least nonnegative solutions of such systems.

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bpmc {

// coefficient * product of variables; `variables` is a sorted multiset of
// variable indices, empty for the constant term.
struct Term {
    Rational coefficient;
    std::vector<std::uint32_t> variables;
};

struct Equation {
    std::vector<Term> terms;
};

class Pps {
  public:
    Pps() = default;

    // Canonicalises: merges duplicate monomials, drops zero coefficients,
    // sorts terms by (degree, lexicographic variable indices). Throws on
    // negative coefficients or out-of-range variable indices.
    Pps(std::vector<std::string> variable_tags, std::vector<Equation> equations);

    std::size_t size() const { return equations_.size(); }
    const std::vector<std::string>& variable_tags() const { return tags_; }
    const Equation& equation(std::size_t i) const { return equations_[i]; }

    // Exact evaluation of f_i at a point.
    Rational evaluate(std::size_t i, const std::vector<Rational>& point) const;
    std::vector<Rational> evaluate_all(const std::vector<Rational>& point) const;

    // Exact Jacobian entry dF_i/dx_j at a point.
    Rational jacobian_entry(std::size_t i, std::size_t j, const std::vector<Rational>& point) const;

    // Variable indices referenced by equation i (deduplicated, sorted).
    const std::vector<std::uint32_t>& dependencies(std::size_t i) const { return deps_[i]; }

    // True iff f(1) <= 1 componentwise.
    bool feasible() const;
    // Throws Error when infeasible.
    void require_feasible() const;

    // Debug dump, one canonical equation per line:
    //   x2 = 1/2*x3 + 1/2*x2*x3
    // preceded by '#' legend lines mapping indices to tags.
    std::string dump() const;

  private:
    std::vector<std::string> tags_;
    std::vector<Equation> equations_;
    std::vector<std::vector<std::uint32_t>> deps_;
};

// PPS for Pr[t_X |= AF targets]: one variable per type; x_X = 1 for targets,
// otherwise x_X = sum over rules of p * prod of successor variables.
// Variable i corresponds to type i of bp. Satisfies f(1) = 1 exactly.
Pps build_af_pps(const BranchingProcess& bp, const std::vector<std::size_t>& targets);

// Exact Kleene iterate f^k(0).
std::vector<Rational> kleene(const Pps& pps, unsigned k);

}  // namespace bpmc
