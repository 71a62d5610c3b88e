// Certified enclosures for least solutions of feasible fixed-point systems.
//
// Lower bounds are exact-rational iterates grown from 0: plain Kleene steps,
// accelerated by damped Newton steps whose floating-point candidates are
// rounded toward zero and accepted only after an exact certificate
//
//     (I - J(x)) (c - x) <= f(x) - x       with (I - J(x))^{-1} >= 0
//
// (checked via a verified vector v >= 1 with J(x) v < v), which by the Taylor
// expansion of f around x implies c <= least solution. Upper bounds are
// post-fixed points f(u) <= u obtained by inflating rounded-up lower iterates
// (Knaster-Tarski gives u >= least solution). Components decided by
// decide_zero / decide_one short-circuit to exact 0 / 1 without iteration.

#pragma once

#include "bpmc/pps.hpp"
#include "bpmc/pps_qualitative.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bpmc {

struct Enclosure {
    Rational lower;
    Rational upper;
    std::optional<Rational> exact;

    bool is_exact() const { return exact.has_value(); }
    Rational width() const { return upper - lower; }
    static Enclosure exactly(const Rational& value) { return Enclosure{value, value, value}; }
};

struct SolveBudget {
    std::uint64_t max_inner_iterations = 1'000'000;
    std::uint64_t max_reconstruction_denominator = 1'000'000;
};

// Width-epsilon enclosures (or exact values) of every component of the least
// solution. When `requested` is given, only those components and their
// dependencies are solved; everything else reports the trivial enclosure
// [0, 1] unless decided qualitatively. Throws PrecisionExhaustedError when
// the iteration budget runs out first.
std::vector<Enclosure> newton(const Pps& pps, const Rational& epsilon,
                              const SolveBudget& budget = {},
                              const std::vector<std::size_t>* requested = nullptr);

// Knaster-Tarski upper certificate: on success, f(candidate) <= candidate was
// established in exact arithmetic, so candidate dominates the least solution
// componentwise. Failure carries the first violated component.
struct UpperCertificate {
    bool success = false;
    std::vector<Rational> certified;       // the candidate, on success
    std::size_t violated_component = 0;    // on failure
};
UpperCertificate certify_upper(const Pps& pps, const std::vector<Rational>& candidate);

enum class Ternary { True, False, Unknown };

enum class CmpOp { Lt, Le, Ge, Gt };

const char* cmp_op_text(CmpOp op);
bool evaluate_cmp(const Rational& lhs, CmpOp op, const Rational& rhs);
// Mirror operator: Pr[psi] ~ r  <=>  (1 - Pr[psi]) mirror(~) (1 - r).
CmpOp mirror_cmp(CmpOp op);

// Three-valued comparison of least-solution component i against tau. True and
// False are only returned when provably correct: via the qualitative deciders
// when the question is qualitative, via a separating enclosure, or via exact
// reconstruction (smallest-denominator rational in a certified enclosure that
// is verifiably the least fixed point). Unknown when the budget is exhausted
// without separation.
Ternary compare(const Pps& pps, std::size_t i, CmpOp op, const Rational& tau,
                const Rational& epsilon, const SolveBudget& budget = {});

// Certified lower bounds after exactly `steps` inner iterations per strongly
// connected component (Kleene fallbacks exact). Dominates kleene(pps, steps)
// componentwise; exposed for the dominance property tests.
std::vector<Rational> newton_lower_bound_capped(const Pps& pps, unsigned steps);

}  // namespace bpmc
