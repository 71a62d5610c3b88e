// Finite labelled tree prefixes. Node addresses are sequences of 1-based
// child indices (the root is the empty sequence); a prefix keeps, for every
// node, either all of its children or none of them. Prefixes are the carriers
// of cylinder probabilities.

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bpmc {

using NodeAddress = std::vector<std::uint32_t>;

std::string address_to_string(const NodeAddress& address);

class TreePrefix {
  public:
    struct Node {
        std::size_t type = 0;       // index into the generating process's types
        std::uint32_t degree = 0;   // 0 (leaf of the prefix) or the full rule arity
    };

    // Validates prefix-closure and child contiguity; throws std::invalid_argument.
    explicit TreePrefix(std::map<NodeAddress, Node> nodes);

    static TreePrefix single_node(std::size_t type) {
        return TreePrefix({{NodeAddress{}, Node{type, 0}}});
    }

    const std::map<NodeAddress, Node>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    const Node& at(const NodeAddress& address) const;
    bool contains(const NodeAddress& address) const { return nodes_.count(address) != 0; }

    // Types of the children of `address`, in child order.
    std::vector<std::size_t> successor_word(const NodeAddress& address) const;

  private:
    std::map<NodeAddress, Node> nodes_;
};

// Product of rule probabilities over all internal nodes; 1 for a single-node
// prefix. Throws NotGeneratedError when an internal node's successor word is
// not a rule of bp, and UnknownTypeError when a label is out of range.
Rational prefix_probability(const BranchingProcess& bp, const TreePrefix& prefix);

}  // namespace bpmc
