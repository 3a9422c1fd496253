#pragma once

// Seeded random formulas for benchmarks and property tests.

#include <cstdint>
#include <random>
#include <string>

#include "treeshare/formula.hpp"
#include "treeshare/transform.hpp"

namespace treeshare {

struct GeneratorOptions {
  FragmentClass fragment = FragmentClass::BA;
  int depth = 3;            // nesting of connectives and quantifiers
  int constant_height = 2;  // constants are drawn from enumerate(constant_height)
  int variables = 3;        // most variables in scope at once
  bool quantifier_free = false;
  std::uint64_t seed = 0;
};

class FormulaGenerator {
 public:
  explicit FormulaGenerator(GeneratorOptions options);

  // Closed sentence, or a quantifier-free formula over v0, v1, ... when
  // options.quantifier_free is set.
  FormulaPtr next();

 private:
  FormulaPtr formula(int depth, int scope);
  FormulaPtr atom(int scope);
  TermPtr term(int depth, int scope);
  TreeShare constant();
  int pick(int n);
  bool coin(double p);

  GeneratorOptions options_;
  std::mt19937_64 rng_;
  int next_var_ = 0;
};

}  // namespace treeshare
