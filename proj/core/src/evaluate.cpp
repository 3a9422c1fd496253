#include "treeshare/evaluate.hpp"

#include "treeshare/error.hpp"

namespace treeshare {

std::optional<TreeShare> evaluate(const TermPtr& t, const Assignment& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw Error("no value for variable '" + t->name + "'");
      return it->second;
    }
    case TermKind::Const:
      return t->constant;
    case TermKind::Complement: {
      auto a = evaluate(t->lhs, env);
      if (!a) return std::nullopt;
      return complement(*a);
    }
    case TermKind::RMul: {
      auto a = evaluate(t->lhs, env);
      if (!a) return std::nullopt;
      return bowtie(*a, t->constant);
    }
    case TermKind::LMul: {
      auto a = evaluate(t->lhs, env);
      if (!a) return std::nullopt;
      return bowtie(t->constant, *a);
    }
    case TermKind::Union:
    case TermKind::Intersect:
    case TermKind::Plus: {
      auto a = evaluate(t->lhs, env);
      if (!a) return std::nullopt;
      auto b = evaluate(t->rhs, env);
      if (!b) return std::nullopt;
      if (t->kind == TermKind::Union) return unite(*a, *b);
      if (t->kind == TermKind::Intersect) return intersect(*a, *b);
      return plus(*a, *b);
    }
  }
  return std::nullopt;
}

bool evaluate_atom(const Formula& atom, const Assignment& env) {
  auto a = evaluate(atom.left_term, env);
  if (!a) return false;
  auto b = evaluate(atom.right_term, env);
  if (!b) return false;
  switch (atom.kind) {
    case FormulaKind::Eq: return *a == *b;
    case FormulaKind::Leq: return leq(*a, *b);
    case FormulaKind::Lt: return lt(*a, *b);
    default: throw Error("evaluate_atom: not an atom");
  }
}

bool holds(const FormulaPtr& f, const Assignment& env) {
  switch (f->kind) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::Lt: return evaluate_atom(*f, env);
    case FormulaKind::Not: return !holds(f->lhs, env);
    case FormulaKind::And: return holds(f->lhs, env) && holds(f->rhs, env);
    case FormulaKind::Or: return holds(f->lhs, env) || holds(f->rhs, env);
    case FormulaKind::Implies: return !holds(f->lhs, env) || holds(f->rhs, env);
    case FormulaKind::Iff: return holds(f->lhs, env) == holds(f->rhs, env);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      throw FragmentError("holds: quantifier over '" + f->var + "' needs a bounded evaluator");
  }
  return false;
}

bool eval_ground(const FormulaPtr& f) {
  if (!all_variables(f).empty()) throw DomainError("eval_ground: formula has variables");
  return holds(f, {});
}

std::string to_string(const Assignment& env) {
  std::string out;
  for (const auto& [name, value] : env) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value.str();
  }
  return out;
}

}  // namespace treeshare
