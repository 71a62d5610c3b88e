#include "bpmc/pps.hpp"

#include "bpmc/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bpmc {

namespace {

bool term_order(const Term& a, const Term& b) {
    if (a.variables.size() != b.variables.size()) return a.variables.size() < b.variables.size();
    return a.variables < b.variables;
}

}  // namespace

Pps::Pps(std::vector<std::string> variable_tags, std::vector<Equation> equations)
    : tags_(std::move(variable_tags)), equations_(std::move(equations)) {
    if (tags_.size() != equations_.size()) {
        throw std::invalid_argument("variable/equation count mismatch");
    }
    deps_.resize(equations_.size());
    for (std::size_t i = 0; i < equations_.size(); ++i) {
        std::map<std::vector<std::uint32_t>, Rational> merged;
        for (Term& term : equations_[i].terms) {
            if (term.coefficient < 0) throw std::invalid_argument("negative coefficient");
            if (term.coefficient == 0) continue;
            std::sort(term.variables.begin(), term.variables.end());
            for (std::uint32_t v : term.variables) {
                if (v >= equations_.size()) throw std::invalid_argument("variable index out of range");
            }
            merged[term.variables] += term.coefficient;
        }
        Equation canonical;
        for (auto& [variables, coefficient] : merged) {
            if (coefficient == 0) continue;
            canonical.terms.push_back(Term{coefficient, variables});
        }
        std::sort(canonical.terms.begin(), canonical.terms.end(), term_order);
        equations_[i] = std::move(canonical);

        std::vector<std::uint32_t> deps;
        for (const Term& term : equations_[i].terms) {
            deps.insert(deps.end(), term.variables.begin(), term.variables.end());
        }
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        deps_[i] = std::move(deps);
    }
}

Rational Pps::evaluate(std::size_t i, const std::vector<Rational>& point) const {
    Rational value(0);
    for (const Term& term : equations_[i].terms) {
        Rational product = term.coefficient;
        for (std::uint32_t v : term.variables) product *= point[v];
        value += product;
    }
    return value;
}

std::vector<Rational> Pps::evaluate_all(const std::vector<Rational>& point) const {
    std::vector<Rational> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = evaluate(i, point);
    return out;
}

Rational Pps::jacobian_entry(std::size_t i, std::size_t j,
                             const std::vector<Rational>& point) const {
    Rational value(0);
    for (const Term& term : equations_[i].terms) {
        std::size_t multiplicity =
            std::count(term.variables.begin(), term.variables.end(), static_cast<std::uint32_t>(j));
        if (multiplicity == 0) continue;
        Rational product = term.coefficient * Rational(static_cast<unsigned>(multiplicity));
        bool skipped_one_j = false;
        for (std::uint32_t v : term.variables) {
            if (v == j && !skipped_one_j) {
                skipped_one_j = true;
                continue;
            }
            product *= point[v];
        }
        value += product;
    }
    return value;
}

bool Pps::feasible() const {
    std::vector<Rational> ones(size(), Rational(1));
    for (std::size_t i = 0; i < size(); ++i) {
        if (evaluate(i, ones) > 1) return false;
    }
    return true;
}

void Pps::require_feasible() const {
    if (!feasible()) throw Error("fixed-point system is infeasible: f(1) > 1");
}

std::string Pps::dump() const {
    std::string out = "# pps: " + std::to_string(size()) + " variables\n";
    for (std::size_t i = 0; i < size(); ++i) {
        out += "# x" + std::to_string(i + 1) + " := " + tags_[i] + "\n";
    }
    for (std::size_t i = 0; i < size(); ++i) {
        out += "x" + std::to_string(i + 1) + " = ";
        if (equations_[i].terms.empty()) {
            out += "0";
        }
        for (std::size_t t = 0; t < equations_[i].terms.size(); ++t) {
            if (t) out += " + ";
            const Term& term = equations_[i].terms[t];
            out += to_ratio_string(term.coefficient);
            for (std::uint32_t v : term.variables) {
                out += "*x" + std::to_string(v + 1);
            }
        }
        out += "\n";
    }
    return out;
}

Pps build_af_pps(const BranchingProcess& bp, const std::vector<std::size_t>& targets) {
    std::vector<char> target_mask(bp.type_count(), 0);
    for (std::size_t t : targets) {
        if (t >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(t));
        target_mask[t] = 1;
    }
    std::vector<Equation> equations(bp.type_count());
    for (std::size_t t = 0; t < bp.type_count(); ++t) {
        if (target_mask[t]) {
            equations[t].terms.push_back(Term{Rational(1), {}});
            continue;
        }
        for (std::size_t r : bp.rules_of(t)) {
            const Rule& rule = bp.rules()[r];
            Term term;
            term.coefficient = rule.probability;
            term.variables.assign(rule.successors.begin(), rule.successors.end());
            equations[t].terms.push_back(std::move(term));
        }
    }
    return Pps(bp.types(), std::move(equations));
}

std::vector<Rational> kleene(const Pps& pps, unsigned k) {
    std::vector<Rational> point(pps.size(), Rational(0));
    for (unsigned step = 0; step < k; ++step) point = pps.evaluate_all(point);
    return point;
}

}  // namespace bpmc
