#pragma once

// First-order formulas over tree shares.
//
// Terms combine variables and tree constants with ⊔ (|), ⊓ (&), complement
// (~), disjoint addition ⊕ (+) and multiplication by a constant on either
// side (t . τ and τ . t). Multiplication of two non-constant terms is not
// representable. Formulas add =, ⊑ (<=), ⊏ (<), the propositional connectives
// and the two quantifiers. Nodes are immutable and shared.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "treeshare/tree.hpp"

namespace treeshare {

enum class TermKind { Var, Const, Union, Intersect, Complement, Plus, RMul, LMul };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind = TermKind::Const;
  std::string name;    // Var
  TreeShare constant;  // Const; the constant factor of RMul / LMul
  TermPtr lhs;         // operand of Complement, RMul, LMul; left of binaries
  TermPtr rhs;         // right of Union, Intersect, Plus

  static TermPtr var(std::string name);
  static TermPtr constant_of(TreeShare value);
  static TermPtr join(TermPtr a, TermPtr b);
  static TermPtr meet(TermPtr a, TermPtr b);
  static TermPtr complement_of(TermPtr a);
  static TermPtr sum(TermPtr a, TermPtr b);
  // t ⋈ τ
  static TermPtr rmul(TermPtr t, TreeShare factor);
  // τ ⋈ t
  static TermPtr lmul(TreeShare factor, TermPtr t);
};

enum class FormulaKind {
  True,
  False,
  Eq,
  Leq,
  Lt,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Forall,
  Exists
};

// Range of a quantified variable. NonTrivial restricts it to 𝕋⁺ = 𝕋 ∖ {•, ∘};
// the concrete syntax marks such quantifiers as `A+ x.` / `E+ x.`.
enum class Domain { All, NonTrivial };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::True;
  TermPtr left_term;   // atoms
  TermPtr right_term;  // atoms
  FormulaPtr lhs;      // Not, binary connectives, quantifier body
  FormulaPtr rhs;      // binary connectives
  std::string var;     // quantifiers
  Domain domain = Domain::All;

  static FormulaPtr truth(bool value);
  static FormulaPtr eq(TermPtr a, TermPtr b);
  static FormulaPtr leq(TermPtr a, TermPtr b);
  static FormulaPtr lt(TermPtr a, TermPtr b);
  static FormulaPtr negate(FormulaPtr f);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(std::string var, FormulaPtr body, Domain d = Domain::All);
  static FormulaPtr exists(std::string var, FormulaPtr body, Domain d = Domain::All);
  static FormulaPtr quantifier(FormulaKind kind, std::string var, FormulaPtr body,
                               Domain d = Domain::All);
};

bool is_atom(const Formula& f);
bool is_quantifier(const Formula& f);
bool is_binary(const Formula& f);

// Left-nested conjunction / disjunction; empty lists give true / false.
FormulaPtr conjunction(const std::vector<FormulaPtr>& parts);
FormulaPtr disjunction(const std::vector<FormulaPtr>& parts);

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_variables(const FormulaPtr& f);
void collect_variables(const TermPtr& t, std::set<std::string>& out);
// Free and bound names.
std::set<std::string> all_variables(const FormulaPtr& f);
bool is_closed(const FormulaPtr& f);
bool is_ground(const TermPtr& t);

// Constants as they occur, including the factors of RMul / LMul.
std::vector<TreeShare> constants(const FormulaPtr& f);
void collect_constants(const TermPtr& t, std::vector<TreeShare>& out);
// Height of the tallest constant; 0 when there is none.
int formula_height(const FormulaPtr& f);

// AST size with every tree constant counted by its node count.
std::size_t size(const TermPtr& t);
std::size_t size(const FormulaPtr& f);

// Number of ∀/∃ switches in the sequence of quantifiers met in pre-order,
// each quantifier's kind flipped under negative polarity (inside ¬ or an
// implication's antecedent). Bi-implications count as (a → b) ∧ (b → a).
int alternations(const FormulaPtr& f);

// Capture-free substitution of a term for a free variable.
TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& value);
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& value);

}  // namespace treeshare
