#include "bpmc/pps_newton.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bpmc {

namespace {

constexpr unsigned kIterateBits = 96;      // dyadic precision of rounded iterates
constexpr unsigned kExactWarmupSteps = 4;  // exact Kleene steps before rounding kicks in
// Inflation ladder for post-fixed-point candidates, as 2^-k offsets above the
// rounded-up lower iterate. Ordered small to large so the first success is
// the tightest; the all-ones fallback always verifies on feasible systems.
constexpr unsigned kInflationBits[] = {64, 56, 48, 44, 40, 36, 32, 24, 16, 8, 4, 2};

const char* kOpText[] = {"<", "<=", ">=", ">"};

// One SCC with outside variables folded into the coefficients.
struct LocalTerm {
    Rational coefficient;
    std::vector<std::uint32_t> vars;  // local indices, multiset
};

struct LocalSystem {
    std::vector<std::vector<LocalTerm>> equations;

    std::size_t size() const { return equations.size(); }

    Rational evaluate_one(std::size_t i, const std::vector<Rational>& x) const {
        Rational out(0);
        for (const LocalTerm& term : equations[i]) {
            Rational product = term.coefficient;
            for (std::uint32_t v : term.vars) product *= x[v];
            out += product;
        }
        return out;
    }

    std::vector<Rational> evaluate(const std::vector<Rational>& x) const {
        std::vector<Rational> out(size());
        for (std::size_t i = 0; i < size(); ++i) out[i] = evaluate_one(i, x);
        return out;
    }

    RationalMatrix jacobian(const std::vector<Rational>& x) const {
        RationalMatrix jac(size(), std::vector<Rational>(size(), Rational(0)));
        for (std::size_t i = 0; i < size(); ++i) {
            for (const LocalTerm& term : equations[i]) {
                for (std::size_t pos = 0; pos < term.vars.size(); ++pos) {
                    Rational product = term.coefficient;
                    for (std::size_t q = 0; q < term.vars.size(); ++q) {
                        if (q != pos) product *= x[term.vars[q]];
                    }
                    jac[i][term.vars[pos]] += product;
                }
            }
        }
        return jac;
    }
};

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

bool leq_componentwise(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

class Solver {
  public:
    Solver(const Pps& pps, const Rational& epsilon, const SolveBudget& budget,
           const std::vector<std::size_t>* requested)
        : pps_(pps), epsilon_(epsilon), budget_(budget) {
        pps_.require_feasible();
        const std::size_t n = pps_.size();
        zero_ = decide_zero(pps_);
        try {
            one_ = decide_one(pps_);
        } catch (const NotAfShapeError&) {
            one_.assign(n, 0);
        }
        values_.resize(n);
        active_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (zero_[i]) {
                values_[i] = Enclosure::exactly(Rational(0));
            } else if (one_[i]) {
                values_[i] = Enclosure::exactly(Rational(1));
            } else {
                values_[i] = Enclosure{Rational(0), Rational(1), std::nullopt};
                active_[i] = 1;
            }
        }
        needed_.assign(n, 0);
        std::vector<std::size_t> stack;
        auto request = [&](std::size_t i) {
            if (active_[i] && !needed_[i]) {
                needed_[i] = 1;
                stack.push_back(i);
            }
        };
        if (requested) {
            for (std::size_t i : *requested) request(i);
        } else {
            for (std::size_t i = 0; i < n; ++i) request(i);
        }
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::uint32_t v : pps_.dependencies(u)) request(v);
        }
        std::vector<char> mask(n);
        for (std::size_t i = 0; i < n; ++i) mask[i] = active_[i] && needed_[i];
        sccs_ = scc_decomposition(pps_, mask);
        states_.resize(sccs_.components.size());
    }

    std::vector<Enclosure> run() {
        if (sccs_.components.empty()) return values_;
        Rational target = epsilon_ / 4;
        while (true) {
            for (std::size_t c = 0; c < sccs_.components.size(); ++c) solve_scc(c, target);
            bool ok = true;
            for (std::size_t i = 0; i < pps_.size(); ++i) {
                if (needed_[i] && !values_[i].is_exact() && values_[i].width() > epsilon_) {
                    ok = false;
                    break;
                }
            }
            if (ok) return values_;
            target /= 32;
        }
    }

  private:
    struct SccState {
        std::vector<Rational> x_lo;       // certified lower iterate (lower-folded system)
        std::vector<Rational> cert;       // verified vector with J(x) cert < cert
        bool have_cert = false;
        bool exact = false;
    };

    void charge(std::uint64_t amount = 1) {
        iterations_ += amount;
        if (iterations_ > budget_.max_inner_iterations) {
            throw PrecisionExhaustedError(std::to_string(budget_.max_inner_iterations) +
                                          " inner iterations");
        }
    }

    // Folds outside variables into coefficients at their lower (or upper)
    // bounds; zero-decided variables were pruned by the monomial dropping in
    // decide_zero semantics only conceptually, here a zero bound simply
    // annihilates the term.
    LocalSystem fold(const std::vector<std::size_t>& component, bool upper) const {
        LocalSystem local;
        local.equations.resize(component.size());
        for (std::size_t a = 0; a < component.size(); ++a) {
            for (const Term& term : pps_.equation(component[a]).terms) {
                LocalTerm folded;
                folded.coefficient = term.coefficient;
                bool dead = false;
                for (std::uint32_t v : term.variables) {
                    auto pos = std::lower_bound(component.begin(), component.end(),
                                                static_cast<std::size_t>(v));
                    if (pos != component.end() && *pos == v) {
                        folded.vars.push_back(static_cast<std::uint32_t>(pos - component.begin()));
                    } else {
                        const Enclosure& bound = values_[v];
                        const Rational& value =
                            bound.is_exact() ? *bound.exact : (upper ? bound.upper : bound.lower);
                        if (value == 0) {
                            dead = true;
                            break;
                        }
                        folded.coefficient *= value;
                    }
                }
                if (!dead) local.equations[a].push_back(std::move(folded));
            }
        }
        return local;
    }

    bool params_exact(const std::vector<std::size_t>& component) const {
        for (std::size_t i : component) {
            for (std::uint32_t v : pps_.dependencies(i)) {
                auto pos = std::lower_bound(component.begin(), component.end(),
                                            static_cast<std::size_t>(v));
                if (pos != component.end() && *pos == v) continue;
                if (!values_[v].is_exact()) return false;
            }
        }
        return true;
    }

    // Tries one damped-Newton family of candidates from x; on success replaces
    // x by max(candidate, f(x)) and returns true. `fx` is f(x), exact.
    bool newton_step(const LocalSystem& f, std::vector<Rational>& x,
                     const std::vector<Rational>& fx, const RationalMatrix& jac,
                     const std::vector<double>& direction, SccState& state) {
        const std::size_t m = f.size();
        // Verified M-matrix certificate at J(x): v >= 1 with J v < v strictly.
        {
            std::vector<std::vector<double>> a(m, std::vector<double>(m));
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    a[i][j] = (i == j ? 1.0 : 0.0) - to_double(jac[i][j]);
                }
            }
            auto w = solve_double(a, std::vector<double>(m, 1.0));
            if (!w) return false;
            std::vector<Rational> v(m);
            for (std::size_t i = 0; i < m; ++i) {
                if (!((*w)[i] > 0) || !std::isfinite((*w)[i])) return false;
                v[i] = round_up_dyadic(rational_from_double((*w)[i] * (1.0 + 1e-9)), kIterateBits);
                if (v[i] < 1) v[i] = Rational(1);
            }
            for (std::size_t i = 0; i < m; ++i) {
                Rational jv(0);
                for (std::size_t j = 0; j < m; ++j) jv += jac[i][j] * v[j];
                if (!(jv < v[i])) return false;
            }
            state.cert = std::move(v);
            state.have_cert = true;
        }

        std::vector<double> xd = to_doubles(x);
        for (double damp : {1.0, 0.5, 0.25}) {
            std::vector<Rational> candidate(m);
            bool progress = false;
            for (std::size_t i = 0; i < m; ++i) {
                double proposal = xd[i] + damp * direction[i];
                if (!std::isfinite(proposal)) {
                    progress = false;
                    break;
                }
                candidate[i] = round_down_dyadic(rational_from_double(proposal), kIterateBits);
                if (candidate[i] > 1) candidate[i] = Rational(1);
                if (candidate[i] < x[i]) candidate[i] = x[i];
                if (candidate[i] > x[i]) progress = true;
            }
            if (!progress) continue;
            // (I - J(x)) (c - x) <= f(x) - x, exact.
            bool certified = true;
            for (std::size_t i = 0; i < m && certified; ++i) {
                Rational lhs = candidate[i] - x[i];
                for (std::size_t j = 0; j < m; ++j) lhs -= jac[i][j] * (candidate[j] - x[j]);
                if (lhs > fx[i] - x[i]) certified = false;
            }
            if (!certified) continue;
            charge();
            if (!leq_componentwise(candidate, f.evaluate(candidate))) continue;  // pre-fixed
            for (std::size_t i = 0; i < m; ++i) {
                Rational floor = round_down_dyadic(fx[i], kIterateBits + 32);
                x[i] = std::max(candidate[i], std::max(floor, x[i]));
            }
            return true;
        }
        return false;
    }

    // Advances x toward the least solution of f until the estimated gap drops
    // below `gap_target` (heuristic; all bound claims are re-verified) or an
    // exact fixed point is reached. Returns true on an exact hit.
    bool advance_lower(const LocalSystem& f, std::vector<Rational>& x, double gap_target,
                       SccState& state) {
        const std::size_t m = f.size();
        unsigned cooldown = 0;
        unsigned backoff = 1;
        unsigned steps = 0;
        while (true) {
            charge();
            std::vector<Rational> fx = f.evaluate(x);
            if (fx == x) return true;
            if (cooldown == 0) {
                RationalMatrix jac = f.jacobian(x);
                std::vector<std::vector<double>> a(m, std::vector<double>(m));
                std::vector<double> residual(m);
                for (std::size_t i = 0; i < m; ++i) {
                    residual[i] = to_double(fx[i] - x[i]);
                    for (std::size_t j = 0; j < m; ++j) {
                        a[i][j] = (i == j ? 1.0 : 0.0) - to_double(jac[i][j]);
                    }
                }
                auto direction = solve_double(a, residual);
                double gap = std::numeric_limits<double>::infinity();
                if (direction) {
                    gap = 0.0;
                    for (double d : *direction) gap = std::max(gap, d);
                }
                if (steps > 0 && gap >= 0 && gap <= gap_target) return false;
                bool accepted =
                    direction && newton_step(f, x, fx, jac, *direction, state);
                if (accepted) {
                    backoff = 1;
                } else {
                    // Exact Kleene fallback step, rounded once past warmup.
                    for (std::size_t i = 0; i < m; ++i) {
                        Rational next = steps < kExactWarmupSteps
                                            ? fx[i]
                                            : round_down_dyadic(fx[i], kIterateBits + 32);
                        if (next > x[i]) x[i] = next;
                    }
                    cooldown = backoff;
                    backoff = std::min(backoff * 2, 256u);
                }
            } else {
                --cooldown;
                for (std::size_t i = 0; i < m; ++i) {
                    Rational next = steps < kExactWarmupSteps
                                        ? fx[i]
                                        : round_down_dyadic(fx[i], kIterateBits + 32);
                    if (next > x[i]) x[i] = next;
                }
            }
            ++steps;
        }
    }

    // Smallest verified post-fixed point of f above `base` reachable through
    // the inflation ladder; the all-ones vector is the final fallback.
    std::vector<Rational> inflate_upper(const LocalSystem& f, const std::vector<Rational>& base,
                                        const SccState& state) {
        const std::size_t m = f.size();
        std::vector<Rational> up(m);
        for (std::size_t i = 0; i < m; ++i) {
            up[i] = round_up_dyadic(base[i], kIterateBits);
            if (up[i] > 1) up[i] = Rational(1);
        }
        Rational max_cert(1);
        if (state.have_cert) {
            for (const Rational& c : state.cert) max_cert = std::max(max_cert, c);
        }
        for (unsigned bits : kInflationBits) {
            Rational eta = Rational(Integer(1), Integer(1) << bits);
            for (int direction = 0; direction < (state.have_cert ? 2 : 1); ++direction) {
                std::vector<Rational> candidate(m);
                for (std::size_t i = 0; i < m; ++i) {
                    Rational offset =
                        direction == 0 ? eta : eta * state.cert[i] / max_cert;
                    candidate[i] = up[i] + offset;
                    if (candidate[i] > 1) candidate[i] = Rational(1);
                }
                charge();
                if (leq_componentwise(f.evaluate(candidate), candidate)) return candidate;
            }
        }
        return std::vector<Rational>(m, Rational(1));  // feasible: f(1) <= 1
    }

    void reconstruct_exact(const std::vector<std::size_t>& component,
                           const LocalSystem& f_lo, const std::vector<Rational>& lower,
                           const std::vector<Rational>& upper, SccState& state) {
        const std::size_t m = component.size();
        std::vector<Rational> y(m);
        Integer cap{budget_.max_reconstruction_denominator};
        for (std::size_t i = 0; i < m; ++i) {
            if (lower[i] > upper[i]) return;
            y[i] = simplest_rational_between(lower[i], upper[i]);
            if (denominator(y[i]) > cap) return;
            // The least solution of an irreducible component that survived
            // zero- and one-removal lies strictly inside [0,1); a candidate at
            // 1 can only be a different fixed point.
            if (y[i] >= 1) return;
        }
        charge();
        if (f_lo.evaluate(y) != y) return;
        for (std::size_t a = 0; a < m; ++a) {
            values_[component[a]] = Enclosure::exactly(y[a]);
        }
        state.exact = true;
        state.x_lo = std::move(y);
    }

    void solve_scc(std::size_t c, const Rational& target) {
        const std::vector<std::size_t>& component = sccs_.components[c];
        SccState& state = states_[c];
        if (state.exact) return;

        const bool exact_params = params_exact(component);
        LocalSystem f_lo = fold(component, /*upper=*/false);
        LocalSystem f_hi = exact_params ? f_lo : fold(component, /*upper=*/true);
        const std::size_t m = component.size();
        if (state.x_lo.empty()) state.x_lo.assign(m, Rational(0));

        double gap_target = to_double(target) / 4.0;
        for (unsigned attempt = 0; attempt < 6; ++attempt) {
            bool lower_exact = advance_lower(f_lo, state.x_lo, gap_target, state);
            if (lower_exact && exact_params) {
                for (std::size_t a = 0; a < m; ++a) {
                    values_[component[a]] = Enclosure::exactly(state.x_lo[a]);
                }
                state.exact = true;
                return;
            }
            std::vector<Rational> x_hi = state.x_lo;
            if (!exact_params) {
                SccState scratch;  // certificate for the upper-folded system
                advance_lower(f_hi, x_hi, gap_target, scratch);
                if (scratch.have_cert) {
                    state.cert = scratch.cert;
                    state.have_cert = true;
                }
            }
            std::vector<Rational> upper = inflate_upper(f_hi, x_hi, state);
            Rational worst(0);
            for (std::size_t a = 0; a < m; ++a) {
                worst = std::max(worst, upper[a] - state.x_lo[a]);
            }
            for (std::size_t a = 0; a < m; ++a) {
                values_[component[a]] =
                    Enclosure{state.x_lo[a], upper[a], std::nullopt};
            }
            if (exact_params) {
                reconstruct_exact(component, f_lo, state.x_lo, upper, state);
                if (state.exact) return;
            }
            if (worst <= target) return;
            gap_target /= 8.0;
        }
    }

    const Pps& pps_;
    Rational epsilon_;
    SolveBudget budget_;
    std::uint64_t iterations_ = 0;
    std::vector<char> zero_, one_, active_, needed_;
    std::vector<Enclosure> values_;
    SccDecomposition sccs_;
    std::vector<SccState> states_;
};

}  // namespace

std::vector<Enclosure> newton(const Pps& pps, const Rational& epsilon, const SolveBudget& budget,
                              const std::vector<std::size_t>* requested) {
    if (epsilon <= 0) throw std::invalid_argument("newton: epsilon must be positive");
    Solver solver(pps, epsilon, budget, requested);
    return solver.run();
}

UpperCertificate certify_upper(const Pps& pps, const std::vector<Rational>& candidate) {
    UpperCertificate result;
    for (const Rational& value : candidate) {
        if (value < 0) throw std::invalid_argument("certify_upper: negative candidate");
    }
    for (std::size_t i = 0; i < pps.size(); ++i) {
        if (pps.evaluate(i, candidate) > candidate[i]) {
            result.success = false;
            result.violated_component = i;
            return result;
        }
    }
    result.success = true;
    result.certified = candidate;
    return result;
}

const char* cmp_op_text(CmpOp op) { return kOpText[static_cast<int>(op)]; }

bool evaluate_cmp(const Rational& lhs, CmpOp op, const Rational& rhs) {
    switch (op) {
        case CmpOp::Lt: return lhs < rhs;
        case CmpOp::Le: return lhs <= rhs;
        case CmpOp::Ge: return lhs >= rhs;
        case CmpOp::Gt: return lhs > rhs;
    }
    return false;
}

CmpOp mirror_cmp(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return CmpOp::Gt;
        case CmpOp::Le: return CmpOp::Ge;
        case CmpOp::Ge: return CmpOp::Le;
        case CmpOp::Gt: return CmpOp::Lt;
    }
    return op;
}

namespace {

Ternary from_bool(bool b) { return b ? Ternary::True : Ternary::False; }

std::optional<Ternary> separate(const Enclosure& enc, CmpOp op, const Rational& tau) {
    if (enc.is_exact()) return from_bool(evaluate_cmp(*enc.exact, op, tau));
    switch (op) {
        case CmpOp::Ge:
            if (enc.lower >= tau) return Ternary::True;
            if (enc.upper < tau) return Ternary::False;
            break;
        case CmpOp::Gt:
            if (enc.lower > tau) return Ternary::True;
            if (enc.upper <= tau) return Ternary::False;
            break;
        case CmpOp::Le:
            if (enc.upper <= tau) return Ternary::True;
            if (enc.lower > tau) return Ternary::False;
            break;
        case CmpOp::Lt:
            if (enc.upper < tau) return Ternary::True;
            if (enc.lower >= tau) return Ternary::False;
            break;
    }
    return std::nullopt;
}

}  // namespace

Ternary compare(const Pps& pps, std::size_t i, CmpOp op, const Rational& tau,
                const Rational& epsilon, const SolveBudget& budget) {
    // Values live in [0,1]; out-of-range thresholds decide immediately.
    if (tau < 0) return from_bool(op == CmpOp::Ge || op == CmpOp::Gt);
    if (tau > 1) return from_bool(op == CmpOp::Le || op == CmpOp::Lt);

    std::vector<char> zero = decide_zero(pps);
    std::optional<std::vector<char>> one;
    try {
        one = decide_one(pps);
    } catch (const NotAfShapeError&) {
    }

    if (tau == 0) {
        switch (op) {
            case CmpOp::Lt: return Ternary::False;
            case CmpOp::Ge: return Ternary::True;
            case CmpOp::Le: return from_bool(zero[i]);
            case CmpOp::Gt: return from_bool(!zero[i]);
        }
    }
    if (tau == 1) {
        if (op == CmpOp::Gt) return Ternary::False;
        if (op == CmpOp::Le) return Ternary::True;
        if (one) {
            if (op == CmpOp::Ge) return from_bool((*one)[i]);
            if (op == CmpOp::Lt) return from_bool(!(*one)[i]);
        }
    }

    const Rational floor_eps("1/10000000000000");  // 1e-13: enough to separate
                                                   // denominators within the
                                                   // reconstruction cap
    std::vector<Rational> ladder{epsilon};
    if (epsilon > floor_eps) ladder.push_back(floor_eps);
    std::vector<std::size_t> request{i};
    for (const Rational& eps : ladder) {
        std::vector<Enclosure> enclosures;
        try {
            enclosures = newton(pps, eps, budget, &request);
        } catch (const PrecisionExhaustedError&) {
            return Ternary::Unknown;
        }
        if (auto verdict = separate(enclosures[i], op, tau)) return *verdict;
    }
    return Ternary::Unknown;
}

std::vector<Rational> newton_lower_bound_capped(const Pps& pps, unsigned steps) {
    pps.require_feasible();
    const std::size_t n = pps.size();
    std::vector<char> zero = decide_zero(pps);
    std::vector<char> one;
    try {
        one = decide_one(pps);
    } catch (const NotAfShapeError&) {
        one.assign(n, 0);
    }
    std::vector<Rational> out(n, Rational(0));
    std::vector<char> active(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (one[i]) out[i] = Rational(1);
        active[i] = !zero[i] && !one[i];
    }
    SccDecomposition sccs = scc_decomposition(pps, active);
    for (const std::vector<std::size_t>& component : sccs.components) {
        // Fold outside variables at their capped lower bounds.
        LocalSystem local;
        local.equations.resize(component.size());
        for (std::size_t a = 0; a < component.size(); ++a) {
            for (const Term& term : pps.equation(component[a]).terms) {
                LocalTerm folded;
                folded.coefficient = term.coefficient;
                bool dead = false;
                for (std::uint32_t v : term.variables) {
                    auto pos = std::lower_bound(component.begin(), component.end(),
                                                static_cast<std::size_t>(v));
                    if (pos != component.end() && *pos == v) {
                        folded.vars.push_back(static_cast<std::uint32_t>(pos - component.begin()));
                    } else if (out[v] == 0) {
                        dead = true;
                        break;
                    } else {
                        folded.coefficient *= out[v];
                    }
                }
                if (!dead) local.equations[a].push_back(std::move(folded));
            }
        }
        const std::size_t m = component.size();
        std::vector<Rational> x(m, Rational(0));
        for (unsigned step = 0; step < steps; ++step) {
            std::vector<Rational> fx = local.evaluate(x);
            if (fx == x) break;
            RationalMatrix jac = local.jacobian(x);
            std::vector<std::vector<double>> a(m, std::vector<double>(m));
            std::vector<double> residual(m);
            for (std::size_t p = 0; p < m; ++p) {
                residual[p] = to_double(fx[p] - x[p]);
                for (std::size_t q = 0; q < m; ++q) {
                    a[p][q] = (p == q ? 1.0 : 0.0) - to_double(jac[p][q]);
                }
            }
            bool accepted = false;
            if (auto direction = solve_double(a, residual)) {
                // Reuse the certified Newton machinery with an exact Kleene
                // floor so every step dominates f(x).
                std::vector<Rational> candidate(m);
                bool progress = false;
                for (std::size_t p = 0; p < m; ++p) {
                    double proposal = to_double(x[p]) + (*direction)[p];
                    candidate[p] = std::isfinite(proposal)
                                       ? round_down_dyadic(rational_from_double(proposal),
                                                           kIterateBits)
                                       : x[p];
                    if (candidate[p] > 1) candidate[p] = Rational(1);
                    if (candidate[p] < x[p]) candidate[p] = x[p];
                    if (candidate[p] > x[p]) progress = true;
                }
                if (progress) {
                    // M-matrix certificate.
                    bool cert_ok = false;
                    if (auto w = solve_double(a, std::vector<double>(m, 1.0))) {
                        std::vector<Rational> v(m);
                        cert_ok = true;
                        for (std::size_t p = 0; p < m && cert_ok; ++p) {
                            if (!((*w)[p] > 0) || !std::isfinite((*w)[p])) cert_ok = false;
                            else {
                                v[p] = round_up_dyadic(
                                    rational_from_double((*w)[p] * (1.0 + 1e-9)), kIterateBits);
                                if (v[p] < 1) v[p] = Rational(1);
                            }
                        }
                        for (std::size_t p = 0; p < m && cert_ok; ++p) {
                            Rational jv(0);
                            for (std::size_t q = 0; q < m; ++q) jv += jac[p][q] * v[q];
                            if (!(jv < v[p])) cert_ok = false;
                        }
                    }
                    bool certified = cert_ok;
                    for (std::size_t p = 0; p < m && certified; ++p) {
                        Rational lhs = candidate[p] - x[p];
                        for (std::size_t q = 0; q < m; ++q) {
                            lhs -= jac[p][q] * (candidate[q] - x[q]);
                        }
                        if (lhs > fx[p] - x[p]) certified = false;
                    }
                    if (certified && leq_componentwise(candidate, local.evaluate(candidate))) {
                        for (std::size_t p = 0; p < m; ++p) {
                            x[p] = std::max(candidate[p], fx[p]);
                        }
                        accepted = true;
                    }
                }
            }
            if (!accepted) x = fx;  // exact Kleene step
        }
        for (std::size_t a = 0; a < m; ++a) out[component[a]] = x[a];
    }
    return out;
}

}  // namespace bpmc
