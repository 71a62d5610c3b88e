// Text format for parity tree automata.
//
//   states: q r
//   initial: q
//   colour q : 1
//   alphabet: I B D           (optional; defaults to the letters seen)
//   delta q I 2 -> q q        (tree form: one line per (state, letter, arity))
//   delta q I -> q            (word form: the whole file is then a word
//                              automaton, lifted to a DPTA)
//   word-automaton            (optional marker forcing word form)
//
// Tree-form tables must be total up to the declared arity bound; partial
// tables are rejected rather than implicitly completed.

#pragma once

#include "bpmc/dpta.hpp"

#include <iosfwd>
#include <string>

namespace bpmc {

Dpta parse_automaton(std::istream& in);
Dpta parse_automaton_text(const std::string& text);
Dpta parse_automaton_file(const std::string& path);

}  // namespace bpmc
