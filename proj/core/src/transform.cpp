#include "treeshare/transform.hpp"

#include <map>
#include <set>

#include "treeshare/evaluate.hpp"

namespace treeshare {

std::string to_string(FragmentClass c) {
  switch (c) {
    case FragmentClass::BA: return "BA";
    case FragmentClass::MULT: return "MULT";
    case FragmentClass::COMBINED: return "COMBINED";
    case FragmentClass::GENERAL: return "GENERAL";
  }
  return "GENERAL";
}

namespace {

struct Features {
  bool rmul = false;
  bool lmul = false;
  bool boolean = false;  // ⊔ ⊓ complement ⊕
  bool order = false;    // ⊑ ⊏
};

void scan(const TermPtr& t, Features& out) {
  if (!t) return;
  switch (t->kind) {
    case TermKind::RMul: out.rmul = true; break;
    case TermKind::LMul: out.lmul = true; break;
    case TermKind::Union:
    case TermKind::Intersect:
    case TermKind::Complement:
    case TermKind::Plus: out.boolean = true; break;
    default: break;
  }
  scan(t->lhs, out);
  scan(t->rhs, out);
}

void scan(const FormulaPtr& f, Features& out) {
  if (!f) return;
  if (is_atom(*f)) {
    if (f->kind != FormulaKind::Eq) out.order = true;
    scan(f->left_term, out);
    scan(f->right_term, out);
    return;
  }
  scan(f->lhs, out);
  scan(f->rhs, out);
}

}  // namespace

FragmentClass classify(const FormulaPtr& f) {
  Features feat;
  scan(f, feat);
  if (!feat.rmul && !feat.lmul) return FragmentClass::BA;
  if (!feat.boolean && !feat.order) return FragmentClass::MULT;
  if (!feat.lmul) return FragmentClass::COMBINED;
  return FragmentClass::GENERAL;
}

// ── desugar ────────────────────────────────────────────────────────────────

namespace {

TermPtr strip_plus(const TermPtr& t, std::vector<FormulaPtr>& conditions) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return t;
    case TermKind::Complement:
      return Term::complement_of(strip_plus(t->lhs, conditions));
    case TermKind::RMul:
      return Term::rmul(strip_plus(t->lhs, conditions), t->constant);
    case TermKind::LMul:
      return Term::lmul(t->constant, strip_plus(t->lhs, conditions));
    case TermKind::Union:
    case TermKind::Intersect: {
      TermPtr a = strip_plus(t->lhs, conditions);
      TermPtr b = strip_plus(t->rhs, conditions);
      return t->kind == TermKind::Union ? Term::join(a, b) : Term::meet(a, b);
    }
    case TermKind::Plus: {
      std::size_t slot = conditions.size();
      conditions.push_back(nullptr);
      TermPtr a = strip_plus(t->lhs, conditions);
      TermPtr b = strip_plus(t->rhs, conditions);
      conditions[slot] = Formula::eq(Term::meet(a, b), Term::constant_of(TreeShare::white()));
      return Term::join(a, b);
    }
  }
  return t;
}

FormulaPtr fold_ground(const FormulaPtr& atom) {
  if (atom->kind == FormulaKind::Eq && is_ground(atom->left_term) &&
      is_ground(atom->right_term)) {
    return Formula::truth(evaluate_atom(*atom, {}));
  }
  return atom;
}

FormulaPtr desugar_atom(const FormulaPtr& f) {
  std::vector<FormulaPtr> conditions;
  TermPtr l = strip_plus(f->left_term, conditions);
  TermPtr r = strip_plus(f->right_term, conditions);
  std::vector<FormulaPtr> parts;
  switch (f->kind) {
    case FormulaKind::Eq:
      parts.push_back(Formula::eq(l, r));
      break;
    case FormulaKind::Leq:
      parts.push_back(Formula::eq(Term::join(l, r), r));
      break;
    default:
      parts.push_back(Formula::eq(Term::join(l, r), r));
      parts.push_back(Formula::negate(Formula::eq(l, r)));
      break;
  }
  parts.insert(parts.end(), conditions.begin(), conditions.end());
  for (auto& p : parts) {
    p = p->kind == FormulaKind::Not ? Formula::negate(fold_ground(p->lhs)) : fold_ground(p);
  }
  return conjunction(parts);
}

FormulaPtr desugar_rec(const FormulaPtr& f) {
  if (is_atom(*f)) return desugar_atom(f);
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Not:
      return Formula::negate(desugar_rec(f->lhs));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return Formula::quantifier(f->kind, f->var, desugar_rec(f->lhs), f->domain);
    default: {
      auto out = std::make_shared<Formula>(*f);
      out->lhs = desugar_rec(f->lhs);
      out->rhs = desugar_rec(f->rhs);
      return out;
    }
  }
}

bool is_true(const FormulaPtr& f) { return f->kind == FormulaKind::True; }
bool is_false(const FormulaPtr& f) { return f->kind == FormulaKind::False; }

}  // namespace

FormulaPtr desugar(const FormulaPtr& f) { return simplify(desugar_rec(f)); }

FormulaPtr simplify(const FormulaPtr& f) {
  if (is_atom(*f) || is_true(f) || is_false(f)) return f;
  switch (f->kind) {
    case FormulaKind::Not: {
      FormulaPtr a = simplify(f->lhs);
      if (is_true(a)) return Formula::truth(false);
      if (is_false(a)) return Formula::truth(true);
      return a == f->lhs ? f : Formula::negate(a);
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      FormulaPtr body = simplify(f->lhs);
      if (is_true(body) || is_false(body)) return body;
      return body == f->lhs ? f : Formula::quantifier(f->kind, f->var, body, f->domain);
    }
    default:
      break;
  }
  FormulaPtr a = simplify(f->lhs);
  FormulaPtr b = simplify(f->rhs);
  switch (f->kind) {
    case FormulaKind::And:
      if (is_false(a) || is_false(b)) return Formula::truth(false);
      if (is_true(a)) return b;
      if (is_true(b)) return a;
      break;
    case FormulaKind::Or:
      if (is_true(a) || is_true(b)) return Formula::truth(true);
      if (is_false(a)) return b;
      if (is_false(b)) return a;
      break;
    case FormulaKind::Implies:
      if (is_false(a) || is_true(b)) return Formula::truth(true);
      if (is_true(a)) return b;
      if (is_false(b)) return simplify(Formula::negate(a));
      break;
    case FormulaKind::Iff:
      if (is_true(a)) return b;
      if (is_true(b)) return a;
      if (is_false(a)) return simplify(Formula::negate(b));
      if (is_false(b)) return simplify(Formula::negate(a));
      break;
    default:
      break;
  }
  if (a == f->lhs && b == f->rhs) return f;
  auto out = std::make_shared<Formula>(*f);
  out->lhs = a;
  out->rhs = b;
  return out;
}

// ── renaming ───────────────────────────────────────────────────────────────

namespace {

TermPtr rename_term(const TermPtr& t, const std::map<std::string, std::string>& names) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = names.find(t->name);
      return it == names.end() || it->second == t->name ? t : Term::var(it->second);
    }
    case TermKind::Const:
      return t;
    case TermKind::Complement:
      return Term::complement_of(rename_term(t->lhs, names));
    case TermKind::RMul:
      return Term::rmul(rename_term(t->lhs, names), t->constant);
    case TermKind::LMul:
      return Term::lmul(t->constant, rename_term(t->lhs, names));
    case TermKind::Union:
      return Term::join(rename_term(t->lhs, names), rename_term(t->rhs, names));
    case TermKind::Intersect:
      return Term::meet(rename_term(t->lhs, names), rename_term(t->rhs, names));
    case TermKind::Plus:
      return Term::sum(rename_term(t->lhs, names), rename_term(t->rhs, names));
  }
  return t;
}

class Renamer {
 public:
  explicit Renamer(const FormulaPtr& f) : used_(free_variables(f)), reserved_(all_variables(f)) {}

  FormulaPtr run(const FormulaPtr& f, std::map<std::string, std::string> names) {
    if (is_atom(*f)) {
      auto out = std::make_shared<Formula>(*f);
      out->left_term = rename_term(f->left_term, names);
      out->right_term = rename_term(f->right_term, names);
      return out;
    }
    switch (f->kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::string name = f->var;
        if (used_.count(name)) name = fresh(f->var);
        used_.insert(name);
        names[f->var] = name;
        return Formula::quantifier(f->kind, name, run(f->lhs, names), f->domain);
      }
      default: {
        auto out = std::make_shared<Formula>(*f);
        out->lhs = run(f->lhs, names);
        if (f->rhs) out->rhs = run(f->rhs, names);
        return out;
      }
    }
  }

 private:
  std::string fresh(const std::string& base) {
    for (int i = 1;; ++i) {
      std::string candidate = base + "_" + std::to_string(i);
      if (!used_.count(candidate) && !reserved_.count(candidate)) return candidate;
    }
  }

  std::set<std::string> used_;
  std::set<std::string> reserved_;
};

}  // namespace

FormulaPtr rename_apart(const FormulaPtr& f) { return Renamer(f).run(f, {}); }

// ── prenex ─────────────────────────────────────────────────────────────────

std::vector<QuantifierBinding> prefix_of(const FormulaPtr& f, FormulaPtr* matrix) {
  std::vector<QuantifierBinding> out;
  FormulaPtr cur = f;
  while (is_quantifier(*cur)) {
    out.push_back({cur->kind, cur->var, cur->domain});
    cur = cur->lhs;
  }
  if (matrix) *matrix = cur;
  return out;
}

FormulaPtr with_prefix(const std::vector<QuantifierBinding>& prefix, FormulaPtr matrix) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    matrix = Formula::quantifier(it->kind, it->var, std::move(matrix), it->domain);
  }
  return matrix;
}

namespace {

bool has_quantifier(const FormulaPtr& f) {
  if (!f || is_atom(*f)) return false;
  if (is_quantifier(*f)) return true;
  return has_quantifier(f->lhs) || has_quantifier(f->rhs);
}

FormulaPtr expand_iff(const FormulaPtr& f) {
  if (!has_quantifier(f)) return f;
  if (f->kind == FormulaKind::Iff) {
    FormulaPtr a = expand_iff(f->lhs);
    FormulaPtr b = expand_iff(f->rhs);
    return Formula::conj(Formula::implies(a, b), Formula::implies(b, a));
  }
  if (is_quantifier(*f)) {
    return Formula::quantifier(f->kind, f->var, expand_iff(f->lhs), f->domain);
  }
  auto out = std::make_shared<Formula>(*f);
  out->lhs = expand_iff(f->lhs);
  if (f->rhs) out->rhs = expand_iff(f->rhs);
  return out;
}

FormulaKind flip(FormulaKind k) {
  return k == FormulaKind::Forall ? FormulaKind::Exists : FormulaKind::Forall;
}

FormulaPtr pull(const FormulaPtr& f, bool positive, std::vector<QuantifierBinding>& prefix) {
  if (!has_quantifier(f)) return f;
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      prefix.push_back({positive ? f->kind : flip(f->kind), f->var, f->domain});
      return pull(f->lhs, positive, prefix);
    case FormulaKind::Not:
      return Formula::negate(pull(f->lhs, !positive, prefix));
    case FormulaKind::Implies: {
      FormulaPtr a = pull(f->lhs, !positive, prefix);
      return Formula::implies(a, pull(f->rhs, positive, prefix));
    }
    default: {
      auto out = std::make_shared<Formula>(*f);
      out->lhs = pull(f->lhs, positive, prefix);
      out->rhs = pull(f->rhs, positive, prefix);
      return out;
    }
  }
}

}  // namespace

bool is_prenex(const FormulaPtr& f) {
  FormulaPtr matrix;
  prefix_of(f, &matrix);
  return !has_quantifier(matrix);
}

FormulaPtr prenex(const FormulaPtr& f) {
  if (is_prenex(f)) return f;
  FormulaPtr g = rename_apart(expand_iff(f));
  std::vector<QuantifierBinding> prefix;
  FormulaPtr matrix = pull(g, true, prefix);
  return with_prefix(prefix, matrix);
}

}  // namespace treeshare
