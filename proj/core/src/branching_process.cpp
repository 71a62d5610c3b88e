#include "bpmc/branching_process.hpp"

#include "bpmc/errors.hpp"

#include <algorithm>
#include <deque>

namespace bpmc {

BranchingProcess::BranchingProcess(std::vector<std::string> types, std::vector<Rule> rules)
    : types_(std::move(types)), rules_(std::move(rules)) {
    rules_by_type_.assign(types_.size(), {});
    labels_.assign(types_.size(), {});
    colours_.assign(types_.size(), std::nullopt);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        if (rules_[r].source >= types_.size()) throw UnknownTypeError("#" + std::to_string(rules_[r].source));
        for (std::size_t succ : rules_[r].successors) {
            if (succ >= types_.size()) throw UnknownTypeError("#" + std::to_string(succ));
        }
        rules_by_type_[rules_[r].source].push_back(r);
        max_successors_ = std::max(max_successors_, rules_[r].successors.size());
    }
}

std::size_t BranchingProcess::type_index(const std::string& name) const {
    if (auto i = find_type(name)) return *i;
    throw UnknownTypeError(name);
}

std::optional<std::size_t> BranchingProcess::find_type(const std::string& name) const {
    for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i] == name) return i;
    }
    return std::nullopt;
}

void BranchingProcess::set_labels(std::vector<std::vector<std::string>> labels) {
    labels.resize(types_.size());
    for (auto& set : labels) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    labels_ = std::move(labels);
    has_labels_ = true;
}

bool BranchingProcess::type_has_atom(std::size_t type, const std::string& atom) const {
    const auto& set = labels_[type];
    return std::binary_search(set.begin(), set.end(), atom);
}

std::vector<std::string> BranchingProcess::proposition_alphabet() const {
    std::vector<std::string> all;
    for (const auto& set : labels_) all.insert(all.end(), set.begin(), set.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool BranchingProcess::has_total_colouring() const {
    if (colours_.empty() && !types_.empty()) return false;
    return std::all_of(colours_.begin(), colours_.end(),
                       [](const std::optional<unsigned>& c) { return c.has_value(); });
}

void BranchingProcess::set_colours(std::vector<std::optional<unsigned>> colours) {
    colours.resize(types_.size());
    colours_ = std::move(colours);
}

unsigned BranchingProcess::colour(std::size_t type) const {
    if (!colours_[type]) throw Error("type '" + types_[type] + "' has no colour");
    return *colours_[type];
}

void validate(const BranchingProcess& bp) {
    std::vector<Rational> sums(bp.type_count(), Rational(0));
    for (const Rule& rule : bp.rules()) {
        const std::string& source = bp.type_name(rule.source);
        if (rule.successors.empty()) throw EmptySuccessorError(source);
        if (rule.probability <= 0) throw NonPositiveProbabilityError(source);
        sums[rule.source] += rule.probability;
    }
    for (std::size_t t = 0; t < bp.type_count(); ++t) {
        if (sums[t] != 1) throw ProbabilitySumError(bp.type_name(t), to_ratio_string(sums[t]));
    }
}

std::vector<char> reachable_mask(const BranchingProcess& bp, std::size_t start) {
    if (start >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(start));
    std::vector<char> seen(bp.type_count(), 0);
    std::deque<std::size_t> frontier{start};
    seen[start] = 1;
    while (!frontier.empty()) {
        std::size_t t = frontier.front();
        frontier.pop_front();
        for (std::size_t r : bp.rules_of(t)) {
            for (std::size_t succ : bp.rules()[r].successors) {
                if (!seen[succ]) {
                    seen[succ] = 1;
                    frontier.push_back(succ);
                }
            }
        }
    }
    return seen;
}

std::vector<std::size_t> reachable_types(const BranchingProcess& bp, std::size_t start) {
    std::vector<char> seen = reachable_mask(bp, start);
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        if (seen[t]) out.push_back(t);
    }
    return out;
}

}  // namespace bpmc
