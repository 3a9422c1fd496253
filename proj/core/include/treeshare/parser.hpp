#pragma once

// Concrete syntax for formulas.
//
//   tree  := 'o' | '*' | '(' tree tree ')'
//   term  := ident | tree | term '|' term | term '&' term | '~' term
//          | term '+' term | term '.' tree | tree '.' term | '(' term ')'
//   atom  := term '=' term | term '<=' term | term '<' term
//   form  := atom | 'true' | 'false' | '!' form | form '/\' form
//          | form '\/' form | form '->' form | form '<->' form
//          | ('A' | 'E') ['+'] ident '.' form | '(' form ')'
//
// Term operators bind `.` tightest, then `~`, `&`, `|`, `+`; connectives bind
// `!` tightest, then `/\`, `\/`, `->` (right-associative), `<->`. Quantifier
// bodies extend as far right as possible. `A+` / `E+` quantify over 𝕋⁺.
// A parenthesized variable-free term next to '.' is folded to its value, so
// p . ((* o) + (o *)) reads as p . *.
// Identifiers are case-sensitive, may contain primes (pi'), and exclude the
// keywords A, E, o, true and false.

#include <string>
#include <string_view>

#include "treeshare/formula.hpp"

namespace treeshare {

struct ParseOptions {
  // Fold non-canonical tree literals instead of rejecting them.
  bool canonicalize_literals = false;
};

FormulaPtr parse_formula(std::string_view text, const ParseOptions& options = {});
TermPtr parse_term(std::string_view text, const ParseOptions& options = {});

// Minimal-parenthesis rendering; parse(print(f)) is structurally equal to f,
// except that a product of two constants always reads back as RMul.
std::string print(const FormulaPtr& f);
std::string print(const TermPtr& t);

}  // namespace treeshare
