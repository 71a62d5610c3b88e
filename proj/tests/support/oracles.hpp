// Independent oracles used to freeze expected values: a floating-point Kleene
// iteration that shares no code with the certified solver path, and an
// exhaustive enumerator of full depth-d truncations.

#pragma once

#include "bpmc/branching_process.hpp"
#include "bpmc/pps.hpp"
#include "bpmc/tree_prefix.hpp"

#include <cstddef>
#include <vector>

namespace bpmc::testsupport {

// f^iterations(0) in doubles; converges to the least solution from below.
inline std::vector<double> kleene_double(const Pps& pps, unsigned iterations) {
    std::vector<double> x(pps.size(), 0.0);
    std::vector<double> next(pps.size(), 0.0);
    for (unsigned step = 0; step < iterations; ++step) {
        for (std::size_t i = 0; i < pps.size(); ++i) {
            double value = 0.0;
            for (const Term& term : pps.equation(i).terms) {
                double product = to_double(term.coefficient);
                for (std::uint32_t v : term.variables) product *= x[v];
                value += product;
            }
            next[i] = value;
        }
        x.swap(next);
    }
    return x;
}

// All full depth-d truncations of trees rooted at `root`: every node above
// depth d expanded by some rule, every node at depth d a leaf.
inline void enumerate_prefixes_into(const BranchingProcess& bp, std::size_t root, unsigned depth,
                                    std::vector<TreePrefix>& out) {
    struct Builder {
        const BranchingProcess& bp;
        unsigned depth;
        std::map<NodeAddress, TreePrefix::Node> nodes;
        std::vector<TreePrefix>& out;

        void expand(std::vector<std::pair<NodeAddress, std::size_t>> frontier, unsigned level) {
            if (level == depth || frontier.empty()) {
                for (const auto& [address, type] : frontier) {
                    nodes[address] = TreePrefix::Node{type, 0};
                }
                out.push_back(TreePrefix(nodes));
                for (const auto& [address, type] : frontier) nodes.erase(address);
                return;
            }
            choose(frontier, 0, level);
        }

        // Picks one rule per frontier node, in all combinations.
        void choose(std::vector<std::pair<NodeAddress, std::size_t>>& frontier, std::size_t at,
                    unsigned level) {
            if (at == frontier.size()) {
                std::vector<std::pair<NodeAddress, std::size_t>> next;
                for (const auto& [address, type] : frontier) {
                    const TreePrefix::Node& node = nodes[address];
                    for (std::uint32_t k = 1; k <= node.degree; ++k) {
                        NodeAddress child = address;
                        child.push_back(k);
                        next.emplace_back(child, nodes[child].type);
                    }
                }
                // children were added by the per-node choice below
                expand(std::move(next), level + 1);
                return;
            }
            const auto& [address, type] = frontier[at];
            for (std::size_t r : bp.rules_of(type)) {
                const Rule& rule = bp.rules()[r];
                nodes[address] =
                    TreePrefix::Node{type, static_cast<std::uint32_t>(rule.successors.size())};
                for (std::uint32_t k = 1; k <= rule.successors.size(); ++k) {
                    NodeAddress child = address;
                    child.push_back(k);
                    nodes[child] = TreePrefix::Node{rule.successors[k - 1], 0};
                }
                choose(frontier, at + 1, level);
                for (std::uint32_t k = 1; k <= rule.successors.size(); ++k) {
                    NodeAddress child = address;
                    child.push_back(k);
                    nodes.erase(child);
                }
            }
        }
    };
    Builder builder{bp, depth, {}, out};
    builder.expand({{NodeAddress{}, root}}, 0);
}

inline std::vector<TreePrefix> enumerate_full_prefixes(const BranchingProcess& bp,
                                                       std::size_t root, unsigned depth) {
    std::vector<TreePrefix> out;
    enumerate_prefixes_into(bp, root, depth, out);
    return out;
}

}  // namespace bpmc::testsupport
