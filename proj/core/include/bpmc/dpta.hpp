// Deterministic (amorphous) parity tree automata and the product construction.
//
// A DPTA deterministically relabels a tree with states; it accepts when on
// every branch the highest colour occurring infinitely often is even. Word
// parity automata lift to DPTAs that require the word property on every
// branch (all children then receive the same successor state).

#pragma once

#include "bpmc/branching_process.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bpmc {

struct ParityWordAutomaton {
    std::vector<std::string> states;
    std::size_t initial = 0;
    std::vector<std::string> alphabet;
    std::vector<unsigned> colours;                 // per state
    std::vector<std::vector<std::size_t>> next;    // [state][letter] -> state
};

class Dpta {
  public:
    // Explicit transition table: entry (q, letter, arity) for every arity in
    // 1..max_arity; |delta(q, X, n)| = n is enforced.
    Dpta(std::vector<std::string> states, std::size_t initial, std::vector<std::string> alphabet,
         std::vector<unsigned> colours, std::size_t max_arity,
         std::vector<std::vector<std::vector<std::vector<std::size_t>>>> table);

    // Lifted word automaton: delta(q, X, n) = n copies of the word successor;
    // total for every arity.
    static Dpta lifted(ParityWordAutomaton word);

    const std::vector<std::string>& states() const { return states_; }
    std::size_t initial() const { return initial_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    unsigned colour(std::size_t state) const { return colours_[state]; }
    bool is_lifted_word() const { return word_.has_value(); }

    // Max arity with defined transitions; nullopt when arity-universal.
    std::optional<std::size_t> max_arity() const;

    // States assigned to the n children of a node in state q reading letter x.
    std::vector<std::size_t> successors(std::size_t state, std::size_t letter,
                                        std::size_t arity) const;

    std::size_t letter_index(const std::string& name) const;

  private:
    explicit Dpta(ParityWordAutomaton word);

    std::vector<std::string> states_;
    std::size_t initial_ = 0;
    std::vector<std::string> alphabet_;
    std::vector<unsigned> colours_;
    std::size_t max_arity_ = 0;
    // table_[state][letter][arity-1] -> successor tuple
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> table_;
    std::optional<ParityWordAutomaton> word_;
};

// Lift of a deterministic parity word automaton: accepts a tree iff every
// branch label is accepted by the word automaton.
Dpta lift_word_automaton(ParityWordAutomaton word);

// Two-state DPTA accepting exactly the trees all of whose branches eventually
// hit a target type: `searching` (colour 1) moves every child to `done`
// (colour 2, absorbing) upon reading a target.
Dpta all_branches_hit(const std::vector<std::string>& alphabet,
                      const std::vector<std::string>& targets);

// The product process over types Gamma x Q with colour c(X,q) = c(q):
// Pr_X[t accepted by A] = Pr_(X,q0)[t is good for the product colouring].
struct ProductProcess {
    BranchingProcess process;      // total colouring from automaton colours
    std::size_t state_count = 0;

    std::size_t index(std::size_t type, std::size_t state) const {
        return type * state_count + state;
    }
};
ProductProcess product(const BranchingProcess& bp, const Dpta& automaton);

}  // namespace bpmc
