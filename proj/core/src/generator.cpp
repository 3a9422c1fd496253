#include "treeshare/generator.hpp"

#include <algorithm>

namespace treeshare {

FormulaGenerator::FormulaGenerator(GeneratorOptions options)
    : options_(options), rng_(options.seed) {
  options_.constant_height = std::clamp(options_.constant_height, 0, kMaxEnumerationHeight);
  options_.variables = std::max(options_.variables, 1);
  options_.depth = std::max(options_.depth, 0);
}

int FormulaGenerator::pick(int n) {
  return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng_));
}

bool FormulaGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

TreeShare FormulaGenerator::constant() {
  const auto& all = enumerate(options_.constant_height);
  return all[static_cast<std::size_t>(pick(static_cast<int>(all.size())))];
}

TermPtr FormulaGenerator::term(int depth, int scope) {
  auto leaf = [&]() -> TermPtr {
    if (scope > 0 && coin(0.7)) return Term::var("v" + std::to_string(next_var_ - 1 - pick(scope)));
    return Term::constant_of(constant());
  };
  if (depth <= 0 || coin(0.35)) return leaf();
  switch (options_.fragment) {
    case FragmentClass::BA:
      switch (pick(4)) {
        case 0: return Term::complement_of(term(depth - 1, scope));
        case 1: return Term::join(term(depth - 1, scope), term(depth - 1, scope));
        case 2: return Term::meet(term(depth - 1, scope), term(depth - 1, scope));
        default: return Term::sum(term(depth - 1, scope), term(depth - 1, scope));
      }
    case FragmentClass::MULT:
      if (coin(0.5)) return Term::rmul(term(depth - 1, scope), constant());
      return Term::lmul(constant(), term(depth - 1, scope));
    default:
      switch (pick(5)) {
        case 0: return Term::complement_of(term(depth - 1, scope));
        case 1: return Term::join(term(depth - 1, scope), term(depth - 1, scope));
        case 2: return Term::meet(term(depth - 1, scope), term(depth - 1, scope));
        case 3: return Term::sum(term(depth - 1, scope), term(depth - 1, scope));
        default: return Term::rmul(term(depth - 1, scope), constant());
      }
  }
}

FormulaPtr FormulaGenerator::atom(int scope) {
  TermPtr a = term(2, scope);
  TermPtr b = term(2, scope);
  if (options_.fragment == FragmentClass::MULT) return Formula::eq(a, b);
  switch (pick(3)) {
    case 0: return Formula::leq(a, b);
    case 1: return Formula::lt(a, b);
    default: return Formula::eq(a, b);
  }
}

FormulaPtr FormulaGenerator::formula(int depth, int scope) {
  if (depth <= 0) return atom(scope);
  int choices = options_.quantifier_free || scope >= options_.variables ? 5 : 7;
  switch (pick(choices)) {
    case 0: return atom(scope);
    case 1: return Formula::negate(formula(depth - 1, scope));
    case 2: return Formula::conj(formula(depth - 1, scope), formula(depth - 1, scope));
    case 3: return Formula::disj(formula(depth - 1, scope), formula(depth - 1, scope));
    case 4: return Formula::implies(formula(depth - 1, scope), formula(depth - 1, scope));
    default: {
      std::string v = "v" + std::to_string(next_var_++);
      FormulaPtr body = formula(depth - 1, scope + 1);
      --next_var_;
      return coin(0.5) ? Formula::forall(v, body) : Formula::exists(v, body);
    }
  }
}

FormulaPtr FormulaGenerator::next() {
  next_var_ = 0;
  if (options_.quantifier_free) {
    next_var_ = options_.variables;
    FormulaPtr f = formula(options_.depth, options_.variables);
    next_var_ = 0;
    return f;
  }
  // Open with a quantifier so that most sentences mention a variable.
  std::string v = "v" + std::to_string(next_var_++);
  FormulaPtr body = formula(options_.depth, 1);
  next_var_ = 0;
  return coin(0.5) ? Formula::forall(v, body) : Formula::exists(v, body);
}

}  // namespace treeshare
