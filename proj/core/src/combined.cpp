#include "treeshare/combined.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>
#include <vector>

#include "treeshare/error.hpp"
#include "treeshare/transform.hpp"

namespace treeshare {

std::string to_string(const BoundedVerdict& v) {
  switch (v.kind) {
    case VerdictKind::TrueSound: return "true";
    case VerdictKind::FalseSound: return "false";
    case VerdictKind::TrueUpTo: return "true-up-to-" + std::to_string(v.height);
    case VerdictKind::False: return "false-up-to-" + std::to_string(v.height);
  }
  return {};
}

std::size_t default_node_budget() {
  const char* text = std::getenv(kNodeBudgetVariable);
  if (!text || !*text) return kDefaultNodeBudget;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0' || value == 0) return kDefaultNodeBudget;
  return static_cast<std::size_t>(value);
}

// ── unary trees ────────────────────────────────────────────────────────────

TreeShare embed_string(const std::string& bits) {
  TreeShare out = TreeShare::black();
  for (char c : bits) {
    if (c != '0' && c != '1') throw DomainError("embed_string: '" + bits + "' is not binary");
    out = bowtie(out, c == '0' ? left_half() : right_half());
  }
  return out;
}

bool is_unary(const TreeShare& t) { return t.black_leaves() == 1; }

std::string unembed(const TreeShare& u) {
  if (!is_unary(u)) throw NotUnary(u.str() + " does not have exactly one black leaf");
  std::string out;
  TreeShare cur = u;
  while (!cur.is_leaf()) {
    bool left = cur.left().black_leaves() == 1;
    out += left ? '0' : '1';
    cur = left ? cur.left() : cur.right();
  }
  return out;
}

FormulaPtr unary_guard(const std::string& x, const std::string& inner) {
  TermPtr tx = Term::var(x);
  TermPtr ti = Term::var(inner);
  FormulaPtr body = Formula::iff(Formula::lt(Term::rmul(ti, left_half()), tx),
                                 Formula::lt(Term::rmul(ti, right_half()), tx));
  return Formula::conj(Formula::negate(Formula::eq(tx, Term::constant_of(TreeShare::white()))),
                       Formula::forall(inner, body));
}

std::pair<bool, bool> unary_check(const TreeShare& tau, int h) {
  bool structural = is_unary(tau);
  bool formula = !tau.is_white();
  for (const TreeShare& t : enumerate(h)) {
    if (!formula) break;
    formula = lt(bowtie(t, left_half()), tau) == lt(bowtie(t, right_half()), tau);
  }
  return {structural, formula};
}

// ── bounded evaluation ─────────────────────────────────────────────────────

namespace {

// Body of a quantifier relativized with unary_guard, or null.
FormulaPtr guarded_body(const Formula& q) {
  const FormulaPtr& body = q.lhs;
  FormulaKind link = q.kind == FormulaKind::Exists ? FormulaKind::And : FormulaKind::Implies;
  if (body->kind != link) return nullptr;
  const FormulaPtr& g = body->lhs;
  if (g->kind != FormulaKind::And || g->rhs->kind != FormulaKind::Forall) return nullptr;
  if (!equal(g, unary_guard(q.var, g->rhs->var))) return nullptr;
  return body->rhs;
}

const std::vector<TreeShare>& unary_domain(int h) {
  static std::map<int, std::vector<TreeShare>> cache;
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  std::vector<TreeShare> out;
  for (const std::string& w : words::words_up_to("01", h)) out.push_back(embed_string(w));
  std::sort(out.begin(), out.end(), enumeration_less);
  return cache.emplace(h, std::move(out)).first->second;
}

const std::vector<TreeShare>& nontrivial_domain(int h) {
  static std::map<int, std::vector<TreeShare>> cache;
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  std::vector<TreeShare> out;
  for (const TreeShare& t : enumerate(h)) {
    if (!t.is_leaf()) out.push_back(t);
  }
  return cache.emplace(h, std::move(out)).first->second;
}

struct Plan {
  const std::vector<TreeShare>* domain = nullptr;
  FormulaPtr body;
};

class BoundedEvaluator {
 public:
  BoundedEvaluator(const FormulaPtr& f, int h, std::size_t budget) : h_(h), budget_(budget) {
    plan(f);
  }

  bool eval(const FormulaPtr& f, Assignment& env, int depth = 0) {
    switch (f->kind) {
      case FormulaKind::True: return true;
      case FormulaKind::False: return false;
      case FormulaKind::Eq:
      case FormulaKind::Leq:
      case FormulaKind::Lt:
        if (++used_ > budget_) throw BudgetExceeded(budget_, used_ - 1, progress_);
        return evaluate_atom(*f, env);
      case FormulaKind::Not: return !eval(f->lhs, env, depth);
      case FormulaKind::And: return eval(f->lhs, env, depth) && eval(f->rhs, env, depth);
      case FormulaKind::Or: return eval(f->lhs, env, depth) || eval(f->rhs, env, depth);
      case FormulaKind::Implies: return !eval(f->lhs, env, depth) || eval(f->rhs, env, depth);
      case FormulaKind::Iff: return eval(f->lhs, env, depth) == eval(f->rhs, env, depth);
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        const Plan& p = plans_.at(f.get());
        bool want = f->kind == FormulaKind::Exists;
        bool result = !want;
        const auto& dom = *p.domain;
        for (std::size_t i = 0; i < dom.size(); ++i) {
          if (depth == 0) {
            progress_ = "outermost quantifier over " + f->var + " at value " +
                        std::to_string(i + 1) + " of " + std::to_string(dom.size());
          }
          env.insert_or_assign(f->var, dom[i]);
          if (eval(p.body, env, depth + 1) == want) {
            result = want;
            break;
          }
        }
        env.erase(f->var);
        return result;
      }
    }
    return false;
  }

  // Records the values that make f evaluate to `want`, descending as long as
  // a single choice explains the result.
  void explain(const FormulaPtr& f, bool want, Assignment& env, Assignment& witness) {
    switch (f->kind) {
      case FormulaKind::Not:
        explain(f->lhs, !want, env, witness);
        return;
      case FormulaKind::And:
      case FormulaKind::Or: {
        bool conj = f->kind == FormulaKind::And;
        if (want == conj) {
          explain(f->lhs, want, env, witness);
          explain(f->rhs, want, env, witness);
        } else if (eval(f->lhs, env, 1) == want) {
          explain(f->lhs, want, env, witness);
        } else {
          explain(f->rhs, want, env, witness);
        }
        return;
      }
      case FormulaKind::Implies:
        if (!want) {
          explain(f->lhs, true, env, witness);
          explain(f->rhs, false, env, witness);
        } else if (!eval(f->lhs, env, 1)) {
          explain(f->lhs, false, env, witness);
        } else {
          explain(f->rhs, true, env, witness);
        }
        return;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        bool universal = f->kind == FormulaKind::Forall;
        if (universal == want) return;
        const Plan& p = plans_.at(f.get());
        for (const TreeShare& v : *p.domain) {
          env.insert_or_assign(f->var, v);
          if (eval(p.body, env, 1) == want) {
            witness.insert_or_assign(f->var, v);
            explain(p.body, want, env, witness);
            return;
          }
        }
        env.erase(f->var);
        return;
      }
      default:
        return;
    }
  }

  std::size_t used() const noexcept { return used_; }
  void reset_budget() { used_ = 0; }

  // Kinds of the quantifiers after polarity adjustment, guard internals
  // excluded. Bi-implications contribute both kinds.
  void effective_kinds(const FormulaPtr& f, int polarity, bool& any_forall, bool& any_exists) const {
    switch (f->kind) {
      case FormulaKind::Not:
        effective_kinds(f->lhs, -polarity, any_forall, any_exists);
        return;
      case FormulaKind::And:
      case FormulaKind::Or:
        effective_kinds(f->lhs, polarity, any_forall, any_exists);
        effective_kinds(f->rhs, polarity, any_forall, any_exists);
        return;
      case FormulaKind::Implies:
        effective_kinds(f->lhs, -polarity, any_forall, any_exists);
        effective_kinds(f->rhs, polarity, any_forall, any_exists);
        return;
      case FormulaKind::Iff:
        effective_kinds(f->lhs, 0, any_forall, any_exists);
        effective_kinds(f->rhs, 0, any_forall, any_exists);
        return;
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        int sign = f->kind == FormulaKind::Forall ? 1 : -1;
        if (polarity == 0 || polarity * sign > 0) any_forall = true;
        if (polarity == 0 || polarity * sign < 0) any_exists = true;
        effective_kinds(plans_.at(f.get()).body, polarity, any_forall, any_exists);
        return;
      }
      default:
        return;
    }
  }

 private:
  void plan(const FormulaPtr& f) {
    if (!f || is_atom(*f)) return;
    if (is_quantifier(*f)) {
      Plan p;
      if (FormulaPtr body = guarded_body(*f)) {
        p.domain = &unary_domain(h_);
        p.body = body;
      } else {
        if (h_ > kMaxEnumerationHeight) {
          throw BudgetExceeded(budget_, 0,
                               "unguarded quantifier over " + f->var + " needs all " +
                                   "trees of height " + std::to_string(h_));
        }
        p.domain = f->domain == Domain::All ? &enumerate(h_) : &nontrivial_domain(h_);
        p.body = f->lhs;
      }
      plans_.emplace(f.get(), p);
      plan(p.body);
      return;
    }
    plan(f->lhs);
    plan(f->rhs);
  }

  int h_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::string progress_;
  std::unordered_map<const Formula*, Plan> plans_;
};

}  // namespace

BoundedVerdict check_bounded(const FormulaPtr& f, int h, const BoundedOptions& options) {
  if (h < 0) throw DomainError("check_bounded: negative height bound");
  if (!is_closed(f)) throw DomainError("check_bounded: formula has free variables");
  FormulaPtr g = rename_apart(f);
  BoundedEvaluator ev(g, h, options.budget);
  Assignment env;
  bool value = ev.eval(g, env);

  BoundedVerdict out;
  out.height = h;
  out.evaluations = ev.used();
  bool any_forall = false;
  bool any_exists = false;
  ev.effective_kinds(g, 1, any_forall, any_exists);
  if (value) {
    out.kind = any_forall ? VerdictKind::TrueUpTo : VerdictKind::TrueSound;
  } else {
    out.kind = any_exists ? VerdictKind::False : VerdictKind::FalseSound;
  }
  ev.reset_budget();
  ev.explain(g, value, env, out.witness);
  return out;
}

// ── string sentences ───────────────────────────────────────────────────────

namespace {

void require_binary(const std::string& w, const char* what) {
  if (w.find_first_not_of("01") != std::string::npos) {
    throw UnsupportedSymbol(std::string(what) + " '" + w + "' is not over {0,1}");
  }
}

TermPtr reduce_term(const words::TermPtr& t) {
  switch (t->kind) {
    case words::TermKind::Var:
      return Term::var(t->text);
    case words::TermKind::Const:
      require_binary(t->text, "constant");
      return Term::constant_of(embed_string(t->text));
    case words::TermKind::Suffix:
      require_binary(t->text, "successor S_");
      return Term::rmul(reduce_term(t->arg), embed_string(t->text));
    case words::TermKind::Prefix:
      throw UnsupportedSymbol("prefix successor P_" + t->text + " has no counterpart");
  }
  return nullptr;
}

class Reducer {
 public:
  explicit Reducer(const words::FormulaPtr& g) : used_(words::all_variables(g)) {}

  FormulaPtr run(const words::FormulaPtr& g) {
    switch (g->kind) {
      case words::FormulaKind::True:
      case words::FormulaKind::False:
        return Formula::truth(g->kind == words::FormulaKind::True);
      case words::FormulaKind::Eq:
        return Formula::eq(reduce_term(g->left_term), reduce_term(g->right_term));
      case words::FormulaKind::PrefixOf:
        return Formula::leq(reduce_term(g->right_term), reduce_term(g->left_term));
      case words::FormulaKind::Not:
        return Formula::negate(run(g->lhs));
      case words::FormulaKind::And:
        return Formula::conj(run(g->lhs), run(g->rhs));
      case words::FormulaKind::Or:
        return Formula::disj(run(g->lhs), run(g->rhs));
      case words::FormulaKind::Implies:
        return Formula::implies(run(g->lhs), run(g->rhs));
      case words::FormulaKind::Iff:
        return Formula::iff(run(g->lhs), run(g->rhs));
      case words::FormulaKind::Forall:
        return Formula::forall(g->var, Formula::implies(guard(g->var), run(g->lhs)));
      case words::FormulaKind::Exists:
        return Formula::exists(g->var, Formula::conj(guard(g->var), run(g->lhs)));
    }
    return nullptr;
  }

 private:
  FormulaPtr guard(const std::string& x) {
    std::string name;
    do {
      name = "u" + std::to_string(next_++);
    } while (used_.count(name));
    used_.insert(name);
    return unary_guard(x, name);
  }

  std::set<std::string> used_;
  int next_ = 1;
};

}  // namespace

FormulaPtr reduce_string_sentence(const words::FormulaPtr& g) {
  if (!words::free_variables(g).empty()) {
    throw FragmentError("reduce_string_sentence: sentence has free variables");
  }
  return Reducer(g).run(g);
}

}  // namespace treeshare
