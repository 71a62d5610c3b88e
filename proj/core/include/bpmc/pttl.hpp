// Probabilistic tree temporal logic: state formulae over atomic propositions
// with probability thresholds on tree modalities.
//
//   state := true | false | ident | ! state | state & state | state '|' state
//          | state -> state | ( state ) | [ path ] cmp rational
//   path  := AX s | EX s | s AU s | s EU s | s AR s | s ER s
//          | AF s | EF s | AG s | EG s
//   cmp   := < | <= | >= | >
//
// Derived connectives (|, ->, false, AF, EF, AG, EG) are parser-level sugar
// expanded before checking, so the AST contains exactly the core kinds.

#pragma once

#include "bpmc/pps_newton.hpp"
#include "bpmc/rational.hpp"

#include <memory>
#include <string>

namespace bpmc {

enum class StateKind { True, Atom, Not, And, Prob };
enum class PathKind { AX, EX, AU, EU, AR, ER };

struct PttlFormula;
using FormulaPtr = std::shared_ptr<const PttlFormula>;

struct PttlFormula {
    StateKind kind = StateKind::True;

    std::string atom;        // Atom
    FormulaPtr child;        // Not
    FormulaPtr left, right;  // And

    // Prob: [path] op threshold with operand state formulae.
    PathKind path = PathKind::AX;
    FormulaPtr path_left, path_right;  // AX/EX use path_left only
    CmpOp op = CmpOp::Ge;
    Rational threshold;

    static FormulaPtr make_true();
    static FormulaPtr make_atom(std::string name);
    static FormulaPtr make_not(FormulaPtr f);
    static FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_prob(PathKind path, FormulaPtr a, FormulaPtr b, CmpOp op,
                                Rational threshold);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// True iff every Prob threshold in the formula is 0 or 1.
bool is_qualitative(const FormulaPtr& formula);

// Canonical concrete syntax; parse(print(f)) == f.
std::string print_formula(const FormulaPtr& formula);

// Throws SyntaxError with character position on malformed input.
FormulaPtr parse_formula(const std::string& text);

}  // namespace bpmc
