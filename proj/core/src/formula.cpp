#include "treeshare/formula.hpp"

#include <algorithm>
#include <utility>

namespace treeshare {

namespace {

TermPtr make_term(TermKind kind, TermPtr lhs = nullptr, TermPtr rhs = nullptr) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

FormulaPtr make_formula(FormulaKind kind, FormulaPtr lhs = nullptr,
                        FormulaPtr rhs = nullptr) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

FormulaPtr make_atom(FormulaKind kind, TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->left_term = std::move(a);
  f->right_term = std::move(b);
  return f;
}

}  // namespace

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr Term::constant_of(TreeShare value) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->constant = std::move(value);
  return t;
}

TermPtr Term::join(TermPtr a, TermPtr b) {
  return make_term(TermKind::Union, std::move(a), std::move(b));
}
TermPtr Term::meet(TermPtr a, TermPtr b) {
  return make_term(TermKind::Intersect, std::move(a), std::move(b));
}
TermPtr Term::complement_of(TermPtr a) {
  return make_term(TermKind::Complement, std::move(a));
}
TermPtr Term::sum(TermPtr a, TermPtr b) {
  return make_term(TermKind::Plus, std::move(a), std::move(b));
}

TermPtr Term::rmul(TermPtr t, TreeShare factor) {
  auto r = std::make_shared<Term>();
  r->kind = TermKind::RMul;
  r->lhs = std::move(t);
  r->constant = std::move(factor);
  return r;
}

TermPtr Term::lmul(TreeShare factor, TermPtr t) {
  auto r = std::make_shared<Term>();
  r->kind = TermKind::LMul;
  r->lhs = std::move(t);
  r->constant = std::move(factor);
  return r;
}

FormulaPtr Formula::truth(bool value) {
  static const FormulaPtr t = make_formula(FormulaKind::True);
  static const FormulaPtr f = make_formula(FormulaKind::False);
  return value ? t : f;
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b) {
  return make_atom(FormulaKind::Eq, std::move(a), std::move(b));
}
FormulaPtr Formula::leq(TermPtr a, TermPtr b) {
  return make_atom(FormulaKind::Leq, std::move(a), std::move(b));
}
FormulaPtr Formula::lt(TermPtr a, TermPtr b) {
  return make_atom(FormulaKind::Lt, std::move(a), std::move(b));
}
FormulaPtr Formula::negate(FormulaPtr f) { return make_formula(FormulaKind::Not, std::move(f)); }
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::And, std::move(a), std::move(b));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Or, std::move(a), std::move(b));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Implies, std::move(a), std::move(b));
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Iff, std::move(a), std::move(b));
}

FormulaPtr Formula::quantifier(FormulaKind kind, std::string var, FormulaPtr body,
                               Domain d) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(body);
  f->var = std::move(var);
  f->domain = d;
  return f;
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body, Domain d) {
  return quantifier(FormulaKind::Forall, std::move(var), std::move(body), d);
}
FormulaPtr Formula::exists(std::string var, FormulaPtr body, Domain d) {
  return quantifier(FormulaKind::Exists, std::move(var), std::move(body), d);
}

bool is_atom(const Formula& f) {
  return f.kind == FormulaKind::Eq || f.kind == FormulaKind::Leq ||
         f.kind == FormulaKind::Lt;
}

bool is_quantifier(const Formula& f) {
  return f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists;
}

bool is_binary(const Formula& f) {
  return f.kind == FormulaKind::And || f.kind == FormulaKind::Or ||
         f.kind == FormulaKind::Implies || f.kind == FormulaKind::Iff;
}

FormulaPtr conjunction(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) return Formula::truth(true);
  FormulaPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conj(acc, parts[i]);
  return acc;
}

FormulaPtr disjunction(const std::vector<FormulaPtr>& parts) {
  if (parts.empty()) return Formula::truth(false);
  FormulaPtr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::disj(acc, parts[i]);
  return acc;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::Const:
      return a->constant == b->constant;
    case TermKind::Complement:
      return equal(a->lhs, b->lhs);
    case TermKind::RMul:
    case TermKind::LMul:
      return a->constant == b->constant && equal(a->lhs, b->lhs);
    default:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (is_atom(*a)) {
    return equal(a->left_term, b->left_term) && equal(a->right_term, b->right_term);
  }
  if (is_quantifier(*a)) {
    return a->var == b->var && a->domain == b->domain && equal(a->lhs, b->lhs);
  }
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

void collect_variables(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) {
    out.insert(t->name);
    return;
  }
  collect_variables(t->lhs, out);
  collect_variables(t->rhs, out);
}

namespace {

void free_vars(const FormulaPtr& f, std::set<std::string>& bound,
               std::set<std::string>& out) {
  if (!f) return;
  if (is_atom(*f)) {
    std::set<std::string> vs;
    collect_variables(f->left_term, vs);
    collect_variables(f->right_term, vs);
    for (const auto& v : vs) {
      if (!bound.count(v)) out.insert(v);
    }
    return;
  }
  if (is_quantifier(*f)) {
    bool fresh = bound.insert(f->var).second;
    free_vars(f->lhs, bound, out);
    if (fresh) bound.erase(f->var);
    return;
  }
  free_vars(f->lhs, bound, out);
  free_vars(f->rhs, bound, out);
}

void every_var(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (is_atom(*f)) {
    collect_variables(f->left_term, out);
    collect_variables(f->right_term, out);
    return;
  }
  if (is_quantifier(*f)) out.insert(f->var);
  every_var(f->lhs, out);
  every_var(f->rhs, out);
}

}  // namespace

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const FormulaPtr& f) {
  std::set<std::string> out;
  every_var(f, out);
  return out;
}

bool is_closed(const FormulaPtr& f) { return free_variables(f).empty(); }

bool is_ground(const TermPtr& t) {
  if (!t) return true;
  if (t->kind == TermKind::Var) return false;
  return is_ground(t->lhs) && is_ground(t->rhs);
}

void collect_constants(const TermPtr& t, std::vector<TreeShare>& out) {
  if (!t) return;
  if (t->kind == TermKind::Const || t->kind == TermKind::RMul ||
      t->kind == TermKind::LMul) {
    out.push_back(t->constant);
  }
  collect_constants(t->lhs, out);
  collect_constants(t->rhs, out);
}

namespace {

void formula_constants(const FormulaPtr& f, std::vector<TreeShare>& out) {
  if (!f) return;
  if (is_atom(*f)) {
    collect_constants(f->left_term, out);
    collect_constants(f->right_term, out);
    return;
  }
  formula_constants(f->lhs, out);
  formula_constants(f->rhs, out);
}

}  // namespace

std::vector<TreeShare> constants(const FormulaPtr& f) {
  std::vector<TreeShare> out;
  formula_constants(f, out);
  return out;
}

int formula_height(const FormulaPtr& f) {
  int h = 0;
  for (const TreeShare& c : constants(f)) h = std::max(h, c.height());
  return h;
}

std::size_t size(const TermPtr& t) {
  if (!t) return 0;
  switch (t->kind) {
    case TermKind::Var:
      return 1;
    case TermKind::Const:
      return t->constant.size();
    case TermKind::RMul:
    case TermKind::LMul:
      return 1 + t->constant.size() + size(t->lhs);
    default:
      return 1 + size(t->lhs) + size(t->rhs);
  }
}

std::size_t size(const FormulaPtr& f) {
  if (!f) return 0;
  if (is_atom(*f)) return 1 + size(f->left_term) + size(f->right_term);
  if (is_quantifier(*f)) return 2 + size(f->lhs);
  return 1 + size(f->lhs) + size(f->rhs);
}

namespace {

void quantifier_sequence(const FormulaPtr& f, bool positive, std::vector<bool>& seq) {
  if (!f || is_atom(*f)) return;
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool universal = (f->kind == FormulaKind::Forall) == positive;
      seq.push_back(universal);
      quantifier_sequence(f->lhs, positive, seq);
      return;
    }
    case FormulaKind::Not:
      quantifier_sequence(f->lhs, !positive, seq);
      return;
    case FormulaKind::Implies:
      quantifier_sequence(f->lhs, !positive, seq);
      quantifier_sequence(f->rhs, positive, seq);
      return;
    case FormulaKind::Iff:
      quantifier_sequence(f->lhs, !positive, seq);
      quantifier_sequence(f->rhs, positive, seq);
      quantifier_sequence(f->rhs, !positive, seq);
      quantifier_sequence(f->lhs, positive, seq);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      quantifier_sequence(f->lhs, positive, seq);
      quantifier_sequence(f->rhs, positive, seq);
      return;
    default:
      return;
  }
}

}  // namespace

int alternations(const FormulaPtr& f) {
  std::vector<bool> seq;
  quantifier_sequence(f, true, seq);
  int count = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] != seq[i - 1]) ++count;
  }
  return count;
}

TermPtr substitute(const TermPtr& t, const std::string& var, const TermPtr& value) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Var:
      return t->name == var ? value : t;
    case TermKind::Const:
      return t;
    case TermKind::Complement:
      return Term::complement_of(substitute(t->lhs, var, value));
    case TermKind::RMul:
      return Term::rmul(substitute(t->lhs, var, value), t->constant);
    case TermKind::LMul:
      return Term::lmul(t->constant, substitute(t->lhs, var, value));
    case TermKind::Union:
      return Term::join(substitute(t->lhs, var, value), substitute(t->rhs, var, value));
    case TermKind::Intersect:
      return Term::meet(substitute(t->lhs, var, value), substitute(t->rhs, var, value));
    case TermKind::Plus:
      return Term::sum(substitute(t->lhs, var, value), substitute(t->rhs, var, value));
  }
  return t;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const TermPtr& value) {
  if (!f) return f;
  if (is_atom(*f)) {
    auto out = std::make_shared<Formula>(*f);
    out->left_term = substitute(f->left_term, var, value);
    out->right_term = substitute(f->right_term, var, value);
    return out;
  }
  if (is_quantifier(*f)) {
    if (f->var == var) return f;
    std::set<std::string> value_vars;
    collect_variables(value, value_vars);
    if (value_vars.count(f->var)) {
      std::set<std::string> taken = all_variables(f);
      taken.insert(value_vars.begin(), value_vars.end());
      taken.insert(var);
      std::string renamed = fresh_name(f->var, taken);
      FormulaPtr body = substitute(f->lhs, f->var, Term::var(renamed));
      return Formula::quantifier(f->kind, renamed, substitute(body, var, value),
                                 f->domain);
    }
    return Formula::quantifier(f->kind, f->var, substitute(f->lhs, var, value),
                               f->domain);
  }
  if (f->kind == FormulaKind::True || f->kind == FormulaKind::False) return f;
  auto out = std::make_shared<Formula>(*f);
  out->lhs = substitute(f->lhs, var, value);
  out->rhs = substitute(f->rhs, var, value);
  return out;
}

}  // namespace treeshare
