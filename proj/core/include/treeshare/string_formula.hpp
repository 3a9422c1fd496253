#pragma once

// First-order formulas over words with prefix and suffix successors.
//
//   term  := ident | '"' word '"' | P_w '(' term ')' | S_w '(' term ')'
//   atom  := term '=' term | term '<=' term        (<= is the prefix order)
//   form  := the connectives and quantifiers of tree formulas
//
// P_w(t) is w·t and S_w(t) is t·w. The shorthands P0(t), S10(t), ... drop
// the underscore. Words are over the digits 0, 1 and 2.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace treeshare::words {

enum class TermKind { Var, Const, Prefix, Suffix };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind = TermKind::Const;
  std::string text;  // variable name, constant word, or successor word
  TermPtr arg;       // Prefix / Suffix operand

  static TermPtr var(std::string name);
  static TermPtr constant(std::string word);
  static TermPtr prefix(std::string w, TermPtr t);
  static TermPtr suffix(std::string w, TermPtr t);
};

enum class FormulaKind { True, False, Eq, PrefixOf, Not, And, Or, Implies, Iff, Forall, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::True;
  TermPtr left_term;
  TermPtr right_term;
  FormulaPtr lhs;
  FormulaPtr rhs;
  std::string var;

  static FormulaPtr truth(bool value);
  static FormulaPtr eq(TermPtr a, TermPtr b);
  static FormulaPtr prefix_of(TermPtr a, TermPtr b);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr binary(FormulaKind kind, FormulaPtr a, FormulaPtr b);
  static FormulaPtr quantifier(FormulaKind kind, std::string var, FormulaPtr body);
};

bool is_atom(const Formula& f);
bool is_quantifier(const Formula& f);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_variables(const FormulaPtr& f);
std::set<std::string> all_variables(const FormulaPtr& f);

FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);
std::string print(const FormulaPtr& f);
std::string print(const TermPtr& t);

// Truth with every quantifier ranging over the words of length ≤ max_length
// over `alphabet`. Free variables are read from env.
using WordAssignment = std::map<std::string, std::string>;
std::string evaluate(const TermPtr& t, const WordAssignment& env);
bool evaluate_bounded(const FormulaPtr& f, const std::string& alphabet, int max_length,
                      const WordAssignment& env = {});

// Every word over alphabet of length ≤ max_length, shortlex order.
std::vector<std::string> words_up_to(const std::string& alphabet, int max_length);

}  // namespace treeshare::words
