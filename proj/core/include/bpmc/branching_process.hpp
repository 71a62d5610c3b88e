// Branching processes: finitely many types, probabilistic rules X -p-> alpha
// with nonempty successor tuples, optional atomic-proposition labelling and
// colouring. The process is the shared input value of every analysis in this
// library; it is immutable after construction and safe to share across
// threads.

#pragma once

#include "bpmc/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bpmc {

struct Rule {
    std::size_t source = 0;
    Rational probability;
    std::vector<std::size_t> successors;  // nonempty; indices into types
};

class BranchingProcess {
  public:
    BranchingProcess() = default;
    BranchingProcess(std::vector<std::string> types, std::vector<Rule> rules);

    const std::vector<std::string>& types() const { return types_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<std::size_t>& rules_of(std::size_t type) const { return rules_by_type_[type]; }

    std::size_t type_count() const { return types_.size(); }
    const std::string& type_name(std::size_t i) const { return types_[i]; }

    // Index of a named type; throws UnknownTypeError.
    std::size_t type_index(const std::string& name) const;
    std::optional<std::size_t> find_type(const std::string& name) const;

    // Global bound K on successor-tuple length.
    std::size_t max_successors() const { return max_successors_; }

    // Labelling chi: per-type proposition sets (sorted, unique). Types with no
    // label line carry the empty set.
    bool has_labels() const { return has_labels_; }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }
    void set_labels(std::vector<std::vector<std::string>> labels);
    bool type_has_atom(std::size_t type, const std::string& atom) const;
    // Union of all proposition sets.
    std::vector<std::string> proposition_alphabet() const;

    // Colouring c: one nonnegative integer per type when total.
    bool has_total_colouring() const;
    const std::vector<std::optional<unsigned>>& colours() const { return colours_; }
    void set_colours(std::vector<std::optional<unsigned>> colours);
    unsigned colour(std::size_t type) const;

  private:
    std::vector<std::string> types_;
    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> rules_by_type_;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::optional<unsigned>> colours_;
    std::size_t max_successors_ = 0;
    bool has_labels_ = false;
};

// Checks every structural invariant: per-type probability sums are exactly 1,
// all probabilities strictly positive, successor tuples nonempty, successor
// types declared. Throws the matching error; returns normally iff valid.
void validate(const BranchingProcess& bp);

// Least set containing X and closed under rule application.
std::vector<std::size_t> reachable_types(const BranchingProcess& bp, std::size_t start);

// Convenience: reachability as a membership mask.
std::vector<char> reachable_mask(const BranchingProcess& bp, std::size_t start);

}  // namespace bpmc
