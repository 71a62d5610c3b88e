#include "bpmc/dpta.hpp"

#include "bpmc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpmc {

Dpta::Dpta(std::vector<std::string> states, std::size_t initial, std::vector<std::string> alphabet,
           std::vector<unsigned> colours, std::size_t max_arity,
           std::vector<std::vector<std::vector<std::vector<std::size_t>>>> table)
    : states_(std::move(states)),
      initial_(initial),
      alphabet_(std::move(alphabet)),
      colours_(std::move(colours)),
      max_arity_(max_arity),
      table_(std::move(table)) {
    if (initial_ >= states_.size()) throw std::invalid_argument("initial state out of range");
    if (colours_.size() != states_.size()) throw std::invalid_argument("colour table size mismatch");
    if (table_.size() != states_.size()) throw std::invalid_argument("transition table size mismatch");
    for (std::size_t q = 0; q < states_.size(); ++q) {
        if (table_[q].size() != alphabet_.size()) {
            throw std::invalid_argument("transition table letter dimension mismatch");
        }
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            if (table_[q][a].size() != max_arity_) {
                throw Error("automaton transition delta(" + states_[q] + ", " + alphabet_[a] +
                            ", n) must be defined for every arity n in 1.." +
                            std::to_string(max_arity_));
            }
            for (std::size_t n = 1; n <= max_arity_; ++n) {
                const auto& tuple = table_[q][a][n - 1];
                if (tuple.size() != n) {
                    throw Error("automaton transition delta(" + states_[q] + ", " + alphabet_[a] +
                                ", " + std::to_string(n) + ") has arity " +
                                std::to_string(tuple.size()));
                }
                for (std::size_t succ : tuple) {
                    if (succ >= states_.size()) throw std::invalid_argument("successor state out of range");
                }
            }
        }
    }
}

Dpta::Dpta(ParityWordAutomaton word)
    : states_(word.states),
      initial_(word.initial),
      alphabet_(word.alphabet),
      colours_(word.colours),
      word_(std::move(word)) {
    const ParityWordAutomaton& w = *word_;
    if (w.initial >= w.states.size()) throw std::invalid_argument("initial state out of range");
    if (w.colours.size() != w.states.size()) throw std::invalid_argument("colour table size mismatch");
    if (w.next.size() != w.states.size()) throw std::invalid_argument("word table size mismatch");
    for (const auto& row : w.next) {
        if (row.size() != w.alphabet.size()) {
            throw Error("word automaton must define a successor for every (state, letter) pair");
        }
        for (std::size_t succ : row) {
            if (succ >= w.states.size()) throw std::invalid_argument("successor state out of range");
        }
    }
}

Dpta Dpta::lifted(ParityWordAutomaton word) { return Dpta(std::move(word)); }

std::optional<std::size_t> Dpta::max_arity() const {
    if (word_) return std::nullopt;
    return max_arity_;
}

std::vector<std::size_t> Dpta::successors(std::size_t state, std::size_t letter,
                                          std::size_t arity) const {
    if (word_) {
        return std::vector<std::size_t>(arity, word_->next[state][letter]);
    }
    if (arity == 0 || arity > max_arity_) {
        throw ArityTooSmallError(max_arity_, arity);
    }
    return table_[state][letter][arity - 1];
}

std::size_t Dpta::letter_index(const std::string& name) const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i] == name) return i;
    }
    throw UnknownTypeError(name);
}

Dpta lift_word_automaton(ParityWordAutomaton word) { return Dpta::lifted(std::move(word)); }

Dpta all_branches_hit(const std::vector<std::string>& alphabet,
                      const std::vector<std::string>& targets) {
    for (const std::string& t : targets) {
        if (std::find(alphabet.begin(), alphabet.end(), t) == alphabet.end()) {
            throw UnknownTypeError(t);
        }
    }
    ParityWordAutomaton word;
    word.states = {"searching", "done"};
    word.initial = 0;
    word.alphabet = alphabet;
    word.colours = {1, 2};
    word.next.assign(2, std::vector<std::size_t>(alphabet.size(), 0));
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
        bool is_target =
            std::find(targets.begin(), targets.end(), alphabet[a]) != targets.end();
        word.next[0][a] = is_target ? 1 : 0;
        word.next[1][a] = 1;  // done is absorbing
    }
    return Dpta::lifted(std::move(word));
}

ProductProcess product(const BranchingProcess& bp, const Dpta& automaton) {
    // Alphabet must coincide with the process types (as a set).
    if (automaton.alphabet().size() != bp.type_count()) {
        throw AlphabetMismatchError("sizes differ");
    }
    std::vector<std::size_t> letter_of(bp.type_count());
    for (std::size_t t = 0; t < bp.type_count(); ++t) {
        bool found = false;
        for (std::size_t a = 0; a < automaton.alphabet().size(); ++a) {
            if (automaton.alphabet()[a] == bp.type_name(t)) {
                letter_of[t] = a;
                found = true;
                break;
            }
        }
        if (!found) throw AlphabetMismatchError("type '" + bp.type_name(t) + "' missing");
    }
    if (auto arity = automaton.max_arity()) {
        if (*arity < bp.max_successors()) throw ArityTooSmallError(*arity, bp.max_successors());
    }

    const std::size_t q_count = automaton.states().size();
    std::vector<std::string> names(bp.type_count() * q_count);
    std::vector<std::optional<unsigned>> colours(names.size());
    for (std::size_t t = 0; t < bp.type_count(); ++t) {
        for (std::size_t q = 0; q < q_count; ++q) {
            names[t * q_count + q] = "(" + bp.type_name(t) + "," + automaton.states()[q] + ")";
            colours[t * q_count + q] = automaton.colour(q);
        }
    }
    std::vector<Rule> rules;
    rules.reserve(bp.rules().size() * q_count);
    for (const Rule& rule : bp.rules()) {
        for (std::size_t q = 0; q < q_count; ++q) {
            std::vector<std::size_t> child_states =
                automaton.successors(q, letter_of[rule.source], rule.successors.size());
            Rule lifted;
            lifted.source = rule.source * q_count + q;
            lifted.probability = rule.probability;
            lifted.successors.reserve(rule.successors.size());
            for (std::size_t k = 0; k < rule.successors.size(); ++k) {
                lifted.successors.push_back(rule.successors[k] * q_count + child_states[k]);
            }
            rules.push_back(std::move(lifted));
        }
    }
    ProductProcess result{BranchingProcess(std::move(names), std::move(rules)), q_count};
    result.process.set_colours(std::move(colours));
    return result;
}

}  // namespace bpmc
