#include "bpmc/pttl_check.hpp"

#include "bpmc/errors.hpp"
#include "bpmc/pps.hpp"

#include <algorithm>
#include <deque>

namespace bpmc {

namespace {

constexpr unsigned kStatusZero = 0;
constexpr unsigned kStatusHalf = 1;
constexpr unsigned kStatusOne = 2;

const char* status_suffix(unsigned status) {
    switch (status) {
        case kStatusZero: return "0";
        case kStatusHalf: return "1/2";
        default: return "1";
    }
}

// Shared rule scheme of the two status products: statuses 0 and 1 propagate
// unchanged, 1/2 re-evaluates each child through the status map.
StatusProcess build_status_process(const BranchingProcess& lbp,
                                   const std::vector<unsigned>& status_map) {
    const std::size_t n = lbp.type_count();
    std::vector<std::string> names(3 * n);
    for (std::size_t t = 0; t < n; ++t) {
        for (unsigned s : {kStatusZero, kStatusHalf, kStatusOne}) {
            names[t * 3 + s] = "(" + lbp.type_name(t) + "," + status_suffix(s) + ")";
        }
    }
    std::vector<Rule> rules;
    rules.reserve(lbp.rules().size() * 3);
    for (const Rule& rule : lbp.rules()) {
        for (unsigned s : {kStatusZero, kStatusOne}) {
            Rule absorbed;
            absorbed.source = rule.source * 3 + s;
            absorbed.probability = rule.probability;
            for (std::size_t succ : rule.successors) absorbed.successors.push_back(succ * 3 + s);
            rules.push_back(std::move(absorbed));
        }
        Rule tracking;
        tracking.source = rule.source * 3 + kStatusHalf;
        tracking.probability = rule.probability;
        for (std::size_t succ : rule.successors) {
            tracking.successors.push_back(succ * 3 + status_map[succ]);
        }
        rules.push_back(std::move(tracking));
    }
    StatusProcess sp{BranchingProcess(std::move(names), std::move(rules)), {}, {}, {}};
    sp.start_index.resize(n);
    for (std::size_t t = 0; t < n; ++t) sp.start_index[t] = t * 3 + status_map[t];
    sp.status_of.resize(3 * n);
    for (std::size_t t = 0; t < n; ++t) {
        for (unsigned s : {kStatusZero, kStatusHalf, kStatusOne}) sp.status_of[t * 3 + s] = s;
    }
    return sp;
}

}  // namespace

StatusProcess build_au_product(const BranchingProcess& lbp, const std::vector<char>& sat_phi,
                               const std::vector<char>& sat_psi) {
    std::vector<unsigned> status(lbp.type_count());
    for (std::size_t t = 0; t < lbp.type_count(); ++t) {
        if (sat_psi[t]) status[t] = kStatusOne;
        else if (sat_phi[t]) status[t] = kStatusHalf;
        else status[t] = kStatusZero;
    }
    StatusProcess sp = build_status_process(lbp, status);
    for (std::size_t t = 0; t < lbp.type_count(); ++t) {
        sp.targets.push_back(sp.index(t, kStatusOne));
    }
    return sp;
}

StatusProcess build_ar_product(const BranchingProcess& lbp, const std::vector<char>& sat_phi,
                               const std::vector<char>& sat_psi) {
    std::vector<unsigned> status(lbp.type_count());
    for (std::size_t t = 0; t < lbp.type_count(); ++t) {
        if (!sat_psi[t]) status[t] = kStatusZero;
        else if (sat_phi[t]) status[t] = kStatusOne;
        else status[t] = kStatusHalf;
    }
    StatusProcess sp = build_status_process(lbp, status);
    for (std::size_t t = 0; t < lbp.type_count(); ++t) {
        sp.targets.push_back(sp.index(t, kStatusHalf));
        sp.targets.push_back(sp.index(t, kStatusOne));
    }
    return sp;
}

std::vector<std::size_t> ag_to_af_targets(const BranchingProcess& bp,
                                          const std::vector<std::size_t>& targets) {
    std::vector<char> in_targets(bp.type_count(), 0);
    for (std::size_t t : targets) {
        if (t >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(t));
        in_targets[t] = 1;
    }
    // Precondition: no target reachable from a non-target. Witness by BFS
    // parent chains from each non-target type.
    for (std::size_t z = 0; z < bp.type_count(); ++z) {
        if (in_targets[z]) continue;
        std::vector<std::ptrdiff_t> parent(bp.type_count(), -2);
        std::deque<std::size_t> frontier{z};
        parent[z] = -1;
        while (!frontier.empty()) {
            std::size_t u = frontier.front();
            frontier.pop_front();
            for (std::size_t r : bp.rules_of(u)) {
                for (std::size_t succ : bp.rules()[r].successors) {
                    if (parent[succ] != -2) continue;
                    parent[succ] = static_cast<std::ptrdiff_t>(u);
                    if (in_targets[succ]) {
                        std::string path = bp.type_name(succ);
                        for (std::size_t at = u;; at = static_cast<std::size_t>(parent[at])) {
                            path = bp.type_name(at) + " -> " + path;
                            if (parent[at] == -1) break;
                        }
                        throw PreconditionViolatedError(path);
                    }
                    frontier.push_back(succ);
                }
            }
        }
    }
    std::vector<std::size_t> good;
    for (std::size_t t : targets) {
        std::vector<char> reach = reachable_mask(bp, t);
        bool closed = true;
        for (std::size_t y = 0; y < bp.type_count(); ++y) {
            if (reach[y] && !in_targets[y]) {
                closed = false;
                break;
            }
        }
        if (closed) good.push_back(t);
    }
    std::sort(good.begin(), good.end());
    good.erase(std::unique(good.begin(), good.end()), good.end());
    return good;
}

Rational prob_ax(const BranchingProcess& lbp, const std::vector<char>& sat_phi,
                 std::size_t type) {
    if (type >= lbp.type_count()) throw UnknownTypeError("#" + std::to_string(type));
    Rational sum(0);
    for (std::size_t r : lbp.rules_of(type)) {
        const Rule& rule = lbp.rules()[r];
        bool all = std::all_of(rule.successors.begin(), rule.successors.end(),
                               [&](std::size_t succ) { return sat_phi[succ]; });
        if (all) sum += rule.probability;
    }
    return sum;
}

namespace {

class Checker {
  public:
    Checker(const BranchingProcess& lbp, const CheckerConfig& config)
        : lbp_(lbp), config_(config), alphabet_(lbp.proposition_alphabet()) {}

    std::vector<char> evaluate(const FormulaPtr& formula) {
        switch (formula->kind) {
            case StateKind::True:
                return std::vector<char>(lbp_.type_count(), 1);
            case StateKind::Atom: {
                if (!std::binary_search(alphabet_.begin(), alphabet_.end(), formula->atom)) {
                    throw UnknownAtomError(formula->atom);
                }
                std::vector<char> sat(lbp_.type_count());
                for (std::size_t t = 0; t < lbp_.type_count(); ++t) {
                    sat[t] = lbp_.type_has_atom(t, formula->atom);
                }
                return sat;
            }
            case StateKind::Not: {
                std::vector<char> sat = evaluate(formula->child);
                for (auto& v : sat) v = !v;
                return sat;
            }
            case StateKind::And: {
                std::vector<char> left = evaluate(formula->left);
                std::vector<char> right = evaluate(formula->right);
                for (std::size_t t = 0; t < left.size(); ++t) left[t] = left[t] && right[t];
                return left;
            }
            case StateKind::Prob:
                return evaluate_prob(formula);
        }
        throw Error("unreachable formula kind");
    }

  private:
    std::vector<char> evaluate_prob(const FormulaPtr& formula) {
        // Dualities rewrite the existential modalities onto the universal
        // ones with the mirrored operator and threshold 1 - r.
        switch (formula->path) {
            case PathKind::EX:
                return evaluate_prob(PttlFormula::make_prob(
                    PathKind::AX, PttlFormula::make_not(formula->path_left), nullptr,
                    mirror_cmp(formula->op), Rational(1) - formula->threshold));
            case PathKind::EU:
                return evaluate_prob(PttlFormula::make_prob(
                    PathKind::AR, PttlFormula::make_not(formula->path_left),
                    PttlFormula::make_not(formula->path_right), mirror_cmp(formula->op),
                    Rational(1) - formula->threshold));
            case PathKind::ER:
                return evaluate_prob(PttlFormula::make_prob(
                    PathKind::AU, PttlFormula::make_not(formula->path_left),
                    PttlFormula::make_not(formula->path_right), mirror_cmp(formula->op),
                    Rational(1) - formula->threshold));
            default:
                break;
        }

        if (formula->path == PathKind::AX) {
            std::vector<char> sat_phi = evaluate(formula->path_left);
            std::vector<char> sat(lbp_.type_count());
            for (std::size_t t = 0; t < lbp_.type_count(); ++t) {
                sat[t] = evaluate_cmp(prob_ax(lbp_, sat_phi, t), formula->op, formula->threshold);
            }
            return sat;
        }

        std::vector<char> sat_phi = evaluate(formula->path_left);
        std::vector<char> sat_psi = evaluate(formula->path_right);
        StatusProcess sp;
        std::vector<std::size_t> af_targets;
        if (formula->path == PathKind::AU) {
            sp = build_au_product(lbp_, sat_phi, sat_psi);
            af_targets = sp.targets;
        } else {  // AR: AG over the status targets, then AF over the closure
            sp = build_ar_product(lbp_, sat_phi, sat_psi);
            af_targets = ag_to_af_targets(sp.process, sp.targets);
        }
        Pps pps = build_af_pps(sp.process, af_targets);
        std::vector<char> sat(lbp_.type_count());
        for (std::size_t t = 0; t < lbp_.type_count(); ++t) {
            std::size_t component = sp.start_index[t];
            Ternary verdict = compare(pps, component, formula->op, formula->threshold,
                                      config_.epsilon, config_.budget);
            if (verdict == Ternary::Unknown) {
                std::vector<std::size_t> request{component};
                Enclosure enc;
                try {
                    enc = newton(pps, config_.epsilon, config_.budget, &request)[component];
                } catch (const PrecisionExhaustedError&) {
                    enc = Enclosure{Rational(0), Rational(1), std::nullopt};
                }
                throw UndecidedError(print_formula(formula), lbp_.type_name(t),
                                     to_ratio_string(enc.lower), to_ratio_string(enc.upper));
            }
            sat[t] = verdict == Ternary::True;
        }
        return sat;
    }

    const BranchingProcess& lbp_;
    const CheckerConfig& config_;
    std::vector<std::string> alphabet_;
};

}  // namespace

std::vector<char> sat_set(const BranchingProcess& lbp, const FormulaPtr& formula,
                          const CheckerConfig& config) {
    Checker checker(lbp, config);
    return checker.evaluate(formula);
}

}  // namespace bpmc
