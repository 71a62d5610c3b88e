#include "bpmc/automaton_format.hpp"

#include "bpmc/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace bpmc {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream stream(line);
    std::string word;
    while (stream >> word) words.push_back(word);
    return words;
}

struct DeltaLine {
    std::string state;
    std::string letter;
    std::optional<std::size_t> arity;  // nullopt: word form
    std::vector<std::string> successors;
    std::size_t line_no;
};

}  // namespace

Dpta parse_automaton(std::istream& in) {
    std::vector<std::string> states;
    std::optional<std::string> initial;
    std::vector<std::string> alphabet;
    std::map<std::string, unsigned> colours;
    std::vector<DeltaLine> deltas;
    bool word_marker = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::vector<std::string> words = split_words(raw);
        if (words.empty()) continue;

        if (words[0] == "states:") {
            for (std::size_t i = 1; i < words.size(); ++i) states.push_back(words[i]);
        } else if (words[0] == "initial:") {
            if (words.size() != 2) throw ParseError("expected 'initial: q'", line_no);
            initial = words[1];
        } else if (words[0] == "alphabet:") {
            for (std::size_t i = 1; i < words.size(); ++i) alphabet.push_back(words[i]);
        } else if (words[0] == "colour") {
            if (words.size() != 4 || words[2] != ":") throw ParseError("expected 'colour q : n'", line_no);
            try {
                colours[words[1]] = static_cast<unsigned>(std::stoul(words[3]));
            } catch (const std::exception&) {
                throw ParseError("colour must be a nonnegative integer", line_no);
            }
        } else if (words[0] == "word-automaton") {
            word_marker = true;
        } else if (words[0] == "delta") {
            // delta q X [n] -> succ...
            auto arrow = std::find(words.begin(), words.end(), "->");
            if (arrow == words.end()) throw ParseError("expected '->' in delta line", line_no);
            std::size_t head = arrow - words.begin();
            DeltaLine d;
            d.line_no = line_no;
            if (head == 3) {
                d.state = words[1];
                d.letter = words[2];
            } else if (head == 4) {
                d.state = words[1];
                d.letter = words[2];
                try {
                    d.arity = std::stoul(words[3]);
                } catch (const std::exception&) {
                    throw ParseError("bad arity '" + words[3] + "'", line_no);
                }
                if (*d.arity == 0) throw ParseError("arity must be positive", line_no);
            } else {
                throw ParseError("expected 'delta q X [n] -> ...'", line_no);
            }
            d.successors.assign(arrow + 1, words.end());
            if (d.successors.empty()) throw ParseError("delta line has no successors", line_no);
            deltas.push_back(std::move(d));
        } else {
            throw ParseError("unrecognised directive '" + words[0] + "'", line_no);
        }
    }
    if (states.empty()) throw ParseError("missing 'states:' line", 1);
    if (!initial) throw ParseError("missing 'initial:' line", 1);

    auto state_index = [&](const std::string& name, std::size_t at) {
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (states[i] == name) return i;
        }
        throw ParseError("unknown state '" + name + "'", at);
    };
    if (alphabet.empty()) {
        for (const DeltaLine& d : deltas) {
            if (std::find(alphabet.begin(), alphabet.end(), d.letter) == alphabet.end()) {
                alphabet.push_back(d.letter);
            }
        }
    }
    auto letter_index = [&](const std::string& name, std::size_t at) {
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (alphabet[i] == name) return i;
        }
        throw ParseError("letter '" + name + "' not in alphabet", at);
    };
    std::vector<unsigned> colour_table(states.size(), 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto it = colours.find(states[i]);
        if (it == colours.end()) throw ParseError("state '" + states[i] + "' has no colour", 1);
        colour_table[i] = it->second;
    }

    bool word_form = word_marker ||
                     (!deltas.empty() && std::none_of(deltas.begin(), deltas.end(),
                                                      [](const DeltaLine& d) { return d.arity.has_value(); }));
    if (word_form) {
        for (const DeltaLine& d : deltas) {
            if (d.arity) throw ParseError("tree-form delta in a word automaton", d.line_no);
            if (d.successors.size() != 1) {
                throw ParseError("word-form delta must have exactly one successor", d.line_no);
            }
        }
        ParityWordAutomaton word;
        word.states = states;
        word.initial = state_index(*initial, 1);
        word.alphabet = alphabet;
        word.colours = colour_table;
        std::vector<std::vector<char>> defined(states.size(),
                                               std::vector<char>(alphabet.size(), 0));
        word.next.assign(states.size(), std::vector<std::size_t>(alphabet.size(), 0));
        for (const DeltaLine& d : deltas) {
            std::size_t q = state_index(d.state, d.line_no);
            std::size_t a = letter_index(d.letter, d.line_no);
            if (defined[q][a]) throw ParseError("duplicate delta for (" + d.state + ", " + d.letter + ")", d.line_no);
            defined[q][a] = 1;
            word.next[q][a] = state_index(d.successors[0], d.line_no);
        }
        for (std::size_t q = 0; q < states.size(); ++q) {
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                if (!defined[q][a]) {
                    throw ParseError("missing delta for (" + states[q] + ", " + alphabet[a] + ")", 1);
                }
            }
        }
        return lift_word_automaton(std::move(word));
    }

    std::size_t max_arity = 0;
    for (const DeltaLine& d : deltas) {
        if (!d.arity) throw ParseError("word-form delta in a tree automaton", d.line_no);
        max_arity = std::max(max_arity, *d.arity);
    }
    if (max_arity == 0) throw ParseError("tree automaton has no delta lines", 1);
    std::vector<std::vector<std::vector<std::vector<std::size_t>>>> table(
        states.size(),
        std::vector<std::vector<std::vector<std::size_t>>>(
            alphabet.size(), std::vector<std::vector<std::size_t>>(max_arity)));
    std::vector<std::vector<std::vector<char>>> defined(
        states.size(), std::vector<std::vector<char>>(alphabet.size(),
                                                      std::vector<char>(max_arity, 0)));
    for (const DeltaLine& d : deltas) {
        std::size_t q = state_index(d.state, d.line_no);
        std::size_t a = letter_index(d.letter, d.line_no);
        std::size_t n = *d.arity;
        if (d.successors.size() != n) {
            throw ParseError("delta arity " + std::to_string(n) + " but " +
                             std::to_string(d.successors.size()) + " successors", d.line_no);
        }
        if (defined[q][a][n - 1]) {
            throw ParseError("duplicate delta for (" + d.state + ", " + d.letter + ", " +
                             std::to_string(n) + ")", d.line_no);
        }
        defined[q][a][n - 1] = 1;
        for (const std::string& succ : d.successors) {
            table[q][a][n - 1].push_back(state_index(succ, d.line_no));
        }
    }
    for (std::size_t q = 0; q < states.size(); ++q) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            for (std::size_t n = 1; n <= max_arity; ++n) {
                if (!defined[q][a][n - 1]) {
                    throw ParseError("missing delta for (" + states[q] + ", " + alphabet[a] +
                                     ", " + std::to_string(n) + ")", 1);
                }
            }
        }
    }
    return Dpta(states, state_index(*initial, 1), alphabet, colour_table, max_arity,
                std::move(table));
}

Dpta parse_automaton_text(const std::string& text) {
    std::istringstream stream(text);
    return parse_automaton(stream);
}

Dpta parse_automaton_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw Error("cannot open automaton file '" + path + "'");
    return parse_automaton(stream);
}

}  // namespace bpmc
