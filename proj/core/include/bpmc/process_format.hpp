// Line-oriented text format for (labelled, coloured) branching processes.
//
//   # comment
//   types: I B D
//   rule I -> 9/10 : I
//   rule I -> 0.1 : I B
//   label I : i running      (optional)
//   colour I : 2              (optional)
//
// Probabilities are parsed as exact rationals; decimal literals lose nothing
// (0.9 becomes 9/10). This module owns the format; everything else consumes
// the parsed value.

#pragma once

#include "bpmc/branching_process.hpp"

#include <iosfwd>
#include <string>

namespace bpmc {

// Throws ParseError (with line number) on malformed input and the validation
// errors from validate() on well-formed but invalid processes.
BranchingProcess parse_process(std::istream& in);
BranchingProcess parse_process_text(const std::string& text);
BranchingProcess parse_process_file(const std::string& path);

}  // namespace bpmc
