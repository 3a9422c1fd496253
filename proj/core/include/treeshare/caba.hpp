#pragma once

// Decision procedure for the Boolean / additive fragment. Formulas are
// desugared, put in prenex form and flattened to •/∘ constants; the
// quantifier prefix is then played as a game on region tables, where each
// quantified variable splits every nonempty region into an "in" and an
// "out" part. In an atomless algebra a nonempty region can be split in all
// three nontrivial ways, which makes the game exact.

#include <optional>
#include <string>
#include <vector>

#include "treeshare/evaluate.hpp"
#include "treeshare/formula.hpp"

namespace treeshare {

// Emptiness flags for the 2^k regions over k variables. Bit i of a region
// index is set when the region lies inside variable i.
class RegionTable {
 public:
  explicit RegionTable(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t regions() const noexcept { return flags_.size(); }

  bool nonempty(std::size_t region) const { return flags_.at(region); }
  void set_nonempty(std::size_t region, bool value = true) { flags_.at(region) = value; }

  bool consistent() const;
  // Sign vector of a region, one '1' (in) or '0' (out) per variable.
  std::string sign_vector(std::size_t region) const;
  // Nonempty regions, all-in first (descending sign vectors).
  std::vector<std::size_t> nonempty_regions() const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<bool> flags_;
};

// Truth of a closed BA sentence. Throws FragmentError on multiplication and
// DomainError on free variables.
bool decide(const FormulaPtr& f);

// Model of an existential BA formula (free variables are read
// existentially), or std::nullopt when it is unsatisfiable. The model is
// checked by ground evaluation before it is returned. Throws FragmentError
// on multiplication or a universal quantifier.
std::optional<Assignment> sat_model(const FormulaPtr& f);

// Splits • into one disjoint nonzero piece per nonempty region with the
// right-spine comb (* o), (o (* o)), ... and a final residue, then gives
// each variable the union of the pieces of its regions. Throws Inconsistent
// when every region is empty.
Assignment realize_regions(const RegionTable& rt);

// Pieces of the comb partition of • into k parts.
std::vector<TreeShare> comb_partition(std::size_t k);

}  // namespace treeshare
