// Model checking PTTL over labelled branching processes. AX resolves by an
// exact rational sum; AU reduces to AF over a status-tracking product, AR to
// AG over the analogous product and then to AF; EX/EU/ER evaluate through
// their dualities with the mirrored threshold.

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/pps_newton.hpp"
#include "bpmc/pttl.hpp"

#include <cstdint>
#include <vector>

namespace bpmc {

// Product over Gamma x {0, 1/2, 1} tracking the status of an until/release
// obligation. Statuses 0 and 1 are absorbing in the status component.
struct StatusProcess {
    BranchingProcess process;                 // 3 * |Gamma| types
    std::vector<std::size_t> start_index;     // per original type: (X, status(X))
    std::vector<unsigned> status_of;          // per product type: 0, 1 (=half), 2 (=one)
    std::vector<std::size_t> targets;         // the AF / AG target set

    std::size_t index(std::size_t type, unsigned status) const {
        return type * 3 + status;
    }
};

// Status f: 0 where !phi & !psi, 1/2 where phi & !psi, 1 where psi.
// Guarantee: Pr_X[phi AU psi] = Pr_(X,f(X))[AF (Gamma x {1})].
StatusProcess build_au_product(const BranchingProcess& lbp, const std::vector<char>& sat_phi,
                               const std::vector<char>& sat_psi);

// Status g: 0 where !psi, 1/2 where !phi & psi, 1 where phi & psi.
// Guarantee: Pr_X[phi AR psi] = Pr_(X,g(X))[AG (Gamma x {1/2, 1})].
StatusProcess build_ar_product(const BranchingProcess& lbp, const std::vector<char>& sat_phi,
                               const std::vector<char>& sat_psi);

// The set G = { Y in targets : every type reachable from Y is in targets },
// with Pr[AG targets] = Pr[AF G]. Requires that no target type is reachable
// from a non-target type; throws PreconditionViolatedError with a witness
// path otherwise.
std::vector<std::size_t> ag_to_af_targets(const BranchingProcess& bp,
                                          const std::vector<std::size_t>& targets);

// Exact probability Pr[t_X |= AX phi]: the summed probability of X-rules all
// of whose successors satisfy phi.
Rational prob_ax(const BranchingProcess& lbp, const std::vector<char>& sat_phi, std::size_t type);

struct CheckerConfig {
    Rational epsilon{"1/1000000000"};
    SolveBudget budget;
};

// Truth value of `formula` per type, computed bottom-up. Throws
// UndecidedError when a threshold comparison stays unknown within the budget
// (never on the qualitative fragment) and UnknownAtomError for atoms outside
// the proposition alphabet.
std::vector<char> sat_set(const BranchingProcess& lbp, const FormulaPtr& formula,
                          const CheckerConfig& config = {});

}  // namespace bpmc
