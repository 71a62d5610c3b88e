#include "bpmc/tree_prefix.hpp"

#include "bpmc/errors.hpp"

#include <stdexcept>

namespace bpmc {

std::string address_to_string(const NodeAddress& address) {
    if (address.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < address.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(address[i]);
    }
    return out;
}

TreePrefix::TreePrefix(std::map<NodeAddress, Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.find(NodeAddress{}) == nodes_.end()) {
        throw std::invalid_argument("tree prefix must contain the root");
    }
    for (const auto& [address, node] : nodes_) {
        if (!address.empty()) {
            NodeAddress parent(address.begin(), address.end() - 1);
            auto it = nodes_.find(parent);
            if (it == nodes_.end()) throw std::invalid_argument("prefix not prefix-closed");
            if (address.back() == 0 || address.back() > it->second.degree) {
                throw std::invalid_argument("child index exceeds parent's branching degree");
            }
        }
        for (std::uint32_t k = 1; k <= node.degree; ++k) {
            NodeAddress child = address;
            child.push_back(k);
            if (nodes_.find(child) == nodes_.end()) {
                throw std::invalid_argument("internal node is missing a child");
            }
        }
    }
}

const TreePrefix::Node& TreePrefix::at(const NodeAddress& address) const {
    auto it = nodes_.find(address);
    if (it == nodes_.end()) throw std::invalid_argument("no node at " + address_to_string(address));
    return it->second;
}

std::vector<std::size_t> TreePrefix::successor_word(const NodeAddress& address) const {
    const Node& node = at(address);
    std::vector<std::size_t> word;
    word.reserve(node.degree);
    NodeAddress child = address;
    child.push_back(0);
    for (std::uint32_t k = 1; k <= node.degree; ++k) {
        child.back() = k;
        word.push_back(at(child).type);
    }
    return word;
}

Rational prefix_probability(const BranchingProcess& bp, const TreePrefix& prefix) {
    Rational product(1);
    for (const auto& [address, node] : prefix.nodes()) {
        if (node.type >= bp.type_count()) throw UnknownTypeError("#" + std::to_string(node.type));
        if (node.degree == 0) continue;
        std::vector<std::size_t> word = prefix.successor_word(address);
        const Rational* probability = nullptr;
        for (std::size_t r : bp.rules_of(node.type)) {
            if (bp.rules()[r].successors == word) {
                probability = &bp.rules()[r].probability;
                break;
            }
        }
        if (!probability) {
            throw NotGeneratedError("no rule matches node " + address_to_string(address) +
                                    " of type '" + bp.type_name(node.type) + "'");
        }
        product *= *probability;
    }
    return product;
}

}  // namespace bpmc
