#pragma once

#include <string>
#include <vector>

#include "treeshare/formula.hpp"

namespace treeshare {

// Syntactic fragments, from most to least restricted.
//   BA        no multiplication at all
//   MULT      only rmul / lmul over variables and constants, atoms are =
//   COMBINED  Boolean operators, ⊕, ⊑, ⊏ together with rmul; no lmul
//   GENERAL   everything else (lmul mixed with Boolean structure)
enum class FragmentClass { BA, MULT, COMBINED, GENERAL };

std::string to_string(FragmentClass c);
FragmentClass classify(const FormulaPtr& f);

// Eliminates ⊕, ⊑ and ⊏. Each ⊕ inside an atom becomes ⊔ and contributes
// the side condition a ⊓ b = ∘, conjoined after the atom. Ground atoms are
// evaluated and the truth constants simplified away. Multiplicative
// subterms are kept.
FormulaPtr desugar(const FormulaPtr& f);

// Drops truth constants: true ∧ φ ↦ φ, ¬false ↦ true, ∀x. true ↦ true, ...
FormulaPtr simplify(const FormulaPtr& f);

// Renames bound variables so that every binder is unique and distinct from
// the free variables. Free variables keep their names.
FormulaPtr rename_apart(const FormulaPtr& f);

struct QuantifierBinding {
  FormulaKind kind = FormulaKind::Forall;
  std::string var;
  Domain domain = Domain::All;
};

// Splits a prenex formula into its quantifier prefix and matrix.
std::vector<QuantifierBinding> prefix_of(const FormulaPtr& f, FormulaPtr* matrix = nullptr);
FormulaPtr with_prefix(const std::vector<QuantifierBinding>& prefix, FormulaPtr matrix);

bool is_prenex(const FormulaPtr& f);

// Prenex normal form. Bi-implications that contain quantifiers are expanded
// first; quantifiers are pulled out in pre-order, flipping under negative
// polarity, so alternations() of the result equals alternations(f).
FormulaPtr prenex(const FormulaPtr& f);

}  // namespace treeshare
