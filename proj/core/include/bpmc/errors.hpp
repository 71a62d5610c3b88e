#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpmc {

// Base class for all structured errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- branching-process validation -----------------------------------------

class ProbabilitySumError : public Error {
  public:
    ProbabilitySumError(const std::string& type, const std::string& sum)
        : Error("probabilities for type '" + type + "' sum to " + sum + ", expected 1"),
          type_name(type) {}
    std::string type_name;
};

class EmptySuccessorError : public Error {
  public:
    explicit EmptySuccessorError(const std::string& type)
        : Error("rule for type '" + type + "' has an empty successor tuple"), type_name(type) {}
    std::string type_name;
};

class NonPositiveProbabilityError : public Error {
  public:
    explicit NonPositiveProbabilityError(const std::string& type)
        : Error("rule for type '" + type + "' has a non-positive probability"), type_name(type) {}
    std::string type_name;
};

class UnknownTypeError : public Error {
  public:
    explicit UnknownTypeError(const std::string& type)
        : Error("unknown type '" + type + "'"), type_name(type) {}
    std::string type_name;
};

class UnknownAtomError : public Error {
  public:
    explicit UnknownAtomError(const std::string& atom)
        : Error("unknown atomic proposition '" + atom + "'"), atom_name(atom) {}
    std::string atom_name;
};

class NotGeneratedError : public Error {
  public:
    explicit NotGeneratedError(const std::string& detail)
        : Error("tree prefix is not generated by the process: " + detail) {}
};

// --- solver ----------------------------------------------------------------

class NotAfShapeError : public Error {
  public:
    explicit NotAfShapeError(std::size_t variable)
        : Error("equation " + std::to_string(variable) +
                " is neither the constant 1 nor has coefficient sum 1"),
          variable_index(variable) {}
    std::size_t variable_index;
};

class NotIrreducibleError : public Error {
  public:
    NotIrreducibleError() : Error("matrix digraph is not strongly connected") {}
};

class PrecisionExhaustedError : public Error {
  public:
    explicit PrecisionExhaustedError(const std::string& detail)
        : Error("iteration budget exhausted before reaching the requested precision: " + detail) {}
};

// --- automata --------------------------------------------------------------

class ArityTooSmallError : public Error {
  public:
    ArityTooSmallError(std::size_t automaton_arity, std::size_t process_arity)
        : Error("automaton handles arities up to " + std::to_string(automaton_arity) +
                " but the process branches up to " + std::to_string(process_arity)) {}
};

class AlphabetMismatchError : public Error {
  public:
    explicit AlphabetMismatchError(const std::string& detail)
        : Error("automaton alphabet does not match the process types: " + detail) {}
};

// --- logic -----------------------------------------------------------------

class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

class PreconditionViolatedError : public Error {
  public:
    explicit PreconditionViolatedError(const std::string& witness)
        : Error("AG-to-AF reduction precondition violated: " + witness), witness_path(witness) {}
    std::string witness_path;
};

// Raised when a threshold comparison stays unknown within the budget. Carries
// enough context to report the offending subformula and the final enclosure.
class UndecidedError : public Error {
  public:
    UndecidedError(const std::string& formula, const std::string& type,
                   const std::string& lower, const std::string& upper)
        : Error("threshold comparison undecided for '" + formula + "' at type '" + type +
                "'; final enclosure [" + lower + ", " + upper + "]"),
          formula_text(formula),
          type_name(type),
          enclosure_lower(lower),
          enclosure_upper(upper) {}
    std::string formula_text;
    std::string type_name;
    std::string enclosure_lower;
    std::string enclosure_upper;
};

// Input file problems; position info is folded into the message by parsers.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line)
        : Error(message + " (line " + std::to_string(line) + ")"), line(line) {}
    std::size_t line;
};

}  // namespace bpmc
