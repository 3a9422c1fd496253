#pragma once

// Bounded reasoning for formulas that mix the Boolean operators with
// multiplication, and the embedding of binary strings as unary trees.
//
// check_bounded lets every quantifier range over the trees of height ≤ h. A
// true existential sentence or a false universal one is settled for good;
// anything else only describes the restricted domain. Quantifiers written
// as ∃x. U(x) ∧ Φ or ∀x. U(x) → Φ, with U the unary predicate built by
// unary_guard, range over unary trees only and U is decided exactly.

#include <cstddef>
#include <string>
#include <utility>

#include "treeshare/evaluate.hpp"
#include "treeshare/formula.hpp"
#include "treeshare/string_formula.hpp"

namespace treeshare {

enum class VerdictKind { TrueUpTo, False, TrueSound, FalseSound };

struct BoundedVerdict {
  VerdictKind kind = VerdictKind::TrueUpTo;
  int height = 0;
  // Values of the outer quantifiers that decide the verdict: the first
  // failing values of universals for a false sentence, the first satisfying
  // values of existentials for a true one.
  Assignment witness;
  std::size_t evaluations = 0;

  bool sound() const noexcept {
    return kind == VerdictKind::TrueSound || kind == VerdictKind::FalseSound;
  }
  bool value() const noexcept {
    return kind == VerdictKind::TrueUpTo || kind == VerdictKind::TrueSound;
  }
};

// "true", "false", "true-up-to-h" or "false-up-to-h".
std::string to_string(const BoundedVerdict& v);

inline constexpr std::size_t kDefaultNodeBudget = 100'000'000;
inline constexpr const char* kNodeBudgetVariable = "TREESHARE_NODE_BUDGET";

// kDefaultNodeBudget unless TREESHARE_NODE_BUDGET holds a positive number.
std::size_t default_node_budget();

struct BoundedOptions {
  // Atom evaluations allowed before BudgetExceeded.
  std::size_t budget = default_node_budget();
};

// Throws DomainError on free variables and BudgetExceeded when the budget
// runs out or an unguarded quantifier would range over more than
// enumerate(kMaxEnumerationHeight).
BoundedVerdict check_bounded(const FormulaPtr& f, int h, const BoundedOptions& options = {});

// ── unary trees ────────────────────────────────────────────────────────────

// g(ε) = •, g(0) = (* o), g(1) = (o *), g(uv) = g(u) ⋈ g(v).
TreeShare embed_string(const std::string& bits);
// Root-to-black-leaf path of a unary tree; NotUnary otherwise.
std::string unembed(const TreeShare& u);
bool is_unary(const TreeShare& t);

// x ≠ ∘ ∧ ∀inner. (inner ⋈ (* o) ⊏ x ↔ inner ⋈ (o *) ⊏ x)
FormulaPtr unary_guard(const std::string& x, const std::string& inner);

// (one black leaf, the unary_guard formula evaluated with inner ranging over
// enumerate(h)).
std::pair<bool, bool> unary_check(const TreeShare& tau, int h);

// Sentence over binary strings with suffix successors, binary constants, =
// and the prefix order, rewritten over unary trees. S_w(t) becomes t ⋈ g(w),
// u ⪯ v becomes g(v) ⊑ g(u), and each quantifier is relativized with
// unary_guard. Throws UnsupportedSymbol on prefix successors or the letter
// 2 and FragmentError on free variables.
FormulaPtr reduce_string_sentence(const words::FormulaPtr& g);

}  // namespace treeshare
