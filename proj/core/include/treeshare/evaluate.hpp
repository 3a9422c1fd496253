#pragma once

// Direct semantics of terms and formulas over concrete tree shares.

#include <map>
#include <optional>
#include <string>

#include "treeshare/formula.hpp"

namespace treeshare {

using Assignment = std::map<std::string, TreeShare>;

// Value of t, or std::nullopt when some ⊕ inside it is undefined. Throws
// Error when a variable has no value.
std::optional<TreeShare> evaluate(const TermPtr& t, const Assignment& env);

// Atoms whose terms are undefined are false.
bool evaluate_atom(const Formula& atom, const Assignment& env);

// Quantifier-free formulas only; throws FragmentError on a quantifier.
bool holds(const FormulaPtr& f, const Assignment& env);

// Formula without variables (free or bound); throws DomainError otherwise.
bool eval_ground(const FormulaPtr& f);

std::string to_string(const Assignment& env);

}  // namespace treeshare
