#include "treeshare/word_bridge.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "treeshare/error.hpp"
#include "treeshare/transform.hpp"

namespace treeshare {

// ── strip_trivial ──────────────────────────────────────────────────────────

namespace {

void require_multiplicative(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return;
    case TermKind::RMul:
    case TermKind::LMul:
      require_multiplicative(t->lhs);
      return;
    default:
      throw FragmentError("expected a multiplicative formula (found a Boolean operator)");
  }
}

void require_multiplicative(const FormulaPtr& f) {
  if (is_atom(*f)) {
    if (f->kind != FormulaKind::Eq) {
      throw FragmentError("expected a multiplicative formula (found an order atom)");
    }
    require_multiplicative(f->left_term);
    require_multiplicative(f->right_term);
    return;
  }
  if (f->lhs) require_multiplicative(f->lhs);
  if (f->rhs) require_multiplicative(f->rhs);
}

TermPtr simplify_term(const TermPtr& t) {
  if (t->kind != TermKind::RMul && t->kind != TermKind::LMul) return t;
  TermPtr a = simplify_term(t->lhs);
  const TreeShare& c = t->constant;
  if (c.is_black()) return a;
  if (c.is_white()) return Term::constant_of(TreeShare::white());
  if (a->kind == TermKind::Const) {
    return Term::constant_of(t->kind == TermKind::RMul ? bowtie(a->constant, c)
                                                        : bowtie(c, a->constant));
  }
  if (a == t->lhs) return t;
  return t->kind == TermKind::RMul ? Term::rmul(a, c) : Term::lmul(c, a);
}

// Every variable still in the formula ranges over 𝕋⁺ here.
FormulaPtr strip_atom(const FormulaPtr& f) {
  TermPtr l = simplify_term(f->left_term);
  TermPtr r = simplify_term(f->right_term);
  bool lc = l->kind == TermKind::Const;
  bool rc = r->kind == TermKind::Const;
  if (lc && rc) return Formula::truth(l->constant == r->constant);
  if (equal(l, r)) return Formula::truth(true);
  if ((lc && l->constant.is_leaf()) || (rc && r->constant.is_leaf())) {
    return Formula::truth(false);
  }
  return Formula::eq(l, r);
}

FormulaPtr strip(const FormulaPtr& f) {
  if (is_atom(*f)) return strip_atom(f);
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      FormulaPtr nontrivial = simplify(
          Formula::quantifier(f->kind, f->var, strip(f->lhs), Domain::NonTrivial));
      if (nontrivial->kind == FormulaKind::Forall || nontrivial->kind == FormulaKind::Exists) {
        if (!free_variables(nontrivial->lhs).count(f->var)) nontrivial = nontrivial->lhs;
      }
      if (f->domain == Domain::NonTrivial) return nontrivial;
      FormulaPtr white = strip(substitute(f->lhs, f->var, Term::constant_of(TreeShare::white())));
      FormulaPtr black = strip(substitute(f->lhs, f->var, Term::constant_of(TreeShare::black())));
      FormulaPtr out = f->kind == FormulaKind::Exists
                           ? Formula::disj(Formula::disj(white, black), nontrivial)
                           : Formula::conj(Formula::conj(white, black), nontrivial);
      return simplify(out);
    }
    default: {
      auto out = std::make_shared<Formula>(*f);
      out->lhs = strip(f->lhs);
      if (f->rhs) out->rhs = strip(f->rhs);
      return simplify(out);
    }
  }
}

}  // namespace

FormulaPtr strip_trivial(const FormulaPtr& f) {
  require_multiplicative(f);
  if (!is_closed(f)) throw DomainError("strip_trivial: formula has free variables");
  return strip(f);
}

// ── translation ────────────────────────────────────────────────────────────

namespace {

std::string code_for(const TreeShare& c, const EncodingTable& table) {
  if (c.is_leaf()) throw DomainError("translate: constant " + c.str() + " is not in 𝕋⁺");
  return encode_tree(c, table);
}

words::TermPtr translate_term(const TermPtr& t, const EncodingTable& table) {
  switch (t->kind) {
    case TermKind::Var:
      return words::Term::var(t->name);
    case TermKind::Const:
      return words::Term::constant(code_for(t->constant, table));
    case TermKind::RMul:
      return words::Term::suffix("2" + code_for(t->constant, table),
                                 translate_term(t->lhs, table));
    case TermKind::LMul:
      return words::Term::prefix(code_for(t->constant, table) + "2",
                                 translate_term(t->lhs, table));
    default:
      throw FragmentError("translate: Boolean operator in a multiplicative formula");
  }
}

words::FormulaKind word_kind(FormulaKind k) {
  switch (k) {
    case FormulaKind::Not: return words::FormulaKind::Not;
    case FormulaKind::And: return words::FormulaKind::And;
    case FormulaKind::Or: return words::FormulaKind::Or;
    case FormulaKind::Implies: return words::FormulaKind::Implies;
    case FormulaKind::Iff: return words::FormulaKind::Iff;
    case FormulaKind::Forall: return words::FormulaKind::Forall;
    default: return words::FormulaKind::Exists;
  }
}

FormulaKind tree_kind(words::FormulaKind k) {
  switch (k) {
    case words::FormulaKind::Not: return FormulaKind::Not;
    case words::FormulaKind::And: return FormulaKind::And;
    case words::FormulaKind::Or: return FormulaKind::Or;
    case words::FormulaKind::Implies: return FormulaKind::Implies;
    case words::FormulaKind::Iff: return FormulaKind::Iff;
    case words::FormulaKind::Forall: return FormulaKind::Forall;
    default: return FormulaKind::Exists;
  }
}

}  // namespace

words::FormulaPtr translate(const FormulaPtr& f, const EncodingTable& table) {
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return words::Formula::truth(f->kind == FormulaKind::True);
    case FormulaKind::Eq:
      return words::Formula::eq(translate_term(f->left_term, table),
                                translate_term(f->right_term, table));
    case FormulaKind::Leq:
    case FormulaKind::Lt:
      throw FragmentError("translate: order atoms are not multiplicative");
    case FormulaKind::Not:
      return words::Formula::negate(translate(f->lhs, table));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      if (f->domain != Domain::NonTrivial) {
        throw DomainError("translate: quantifier over '" + f->var +
                          "' ranges over all of 𝕋; apply strip_trivial first");
      }
      return words::Formula::quantifier(word_kind(f->kind), f->var, translate(f->lhs, table));
    default:
      return words::Formula::binary(word_kind(f->kind), translate(f->lhs, table),
                                    translate(f->rhs, table));
  }
}

namespace {

TermPtr reverse_term(const words::TermPtr& t) {
  switch (t->kind) {
    case words::TermKind::Var:
      return Term::var(t->text);
    case words::TermKind::Const:
      return Term::constant_of(word_to_tree(t->text));
    case words::TermKind::Suffix:
      if (t->text.empty() || t->text.front() != '2') {
        throw UnsupportedSymbol("S_" + t->text + " does not start with the delimiter 2");
      }
      return Term::rmul(reverse_term(t->arg), word_to_tree(t->text.substr(1)));
    case words::TermKind::Prefix:
      if (t->text.empty() || t->text.back() != '2') {
        throw UnsupportedSymbol("P_" + t->text + " does not end with the delimiter 2");
      }
      return Term::lmul(word_to_tree(t->text.substr(0, t->text.size() - 1)),
                        reverse_term(t->arg));
  }
  return nullptr;
}

}  // namespace

FormulaPtr reverse_translate(const words::FormulaPtr& g) {
  switch (g->kind) {
    case words::FormulaKind::True:
    case words::FormulaKind::False:
      return Formula::truth(g->kind == words::FormulaKind::True);
    case words::FormulaKind::Eq:
      return Formula::eq(reverse_term(g->left_term), reverse_term(g->right_term));
    case words::FormulaKind::PrefixOf:
      throw UnsupportedSymbol("the prefix order has no multiplicative counterpart");
    case words::FormulaKind::Not:
      return Formula::negate(reverse_translate(g->lhs));
    case words::FormulaKind::Forall:
    case words::FormulaKind::Exists:
      return Formula::quantifier(tree_kind(g->kind), g->var, reverse_translate(g->lhs),
                                 Domain::NonTrivial);
    default: {
      auto out = std::make_shared<Formula>();
      out->kind = tree_kind(g->kind);
      out->lhs = reverse_translate(g->lhs);
      out->rhs = reverse_translate(g->rhs);
      return out;
    }
  }
}

// ── successor expansion ────────────────────────────────────────────────────

words::TermPtr expand_successors(const words::TermPtr& t) {
  if (t->kind == words::TermKind::Var || t->kind == words::TermKind::Const) return t;
  words::TermPtr out = expand_successors(t->arg);
  const std::string& w = t->text;
  if (t->kind == words::TermKind::Prefix) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = words::Term::prefix(std::string(1, *it), out);
  } else {
    for (char c : w) out = words::Term::suffix(std::string(1, c), out);
  }
  return out;
}

words::FormulaPtr expand_successors(const words::FormulaPtr& g) {
  if (words::is_atom(*g)) {
    auto out = std::make_shared<words::Formula>(*g);
    out->left_term = expand_successors(g->left_term);
    out->right_term = expand_successors(g->right_term);
    return out;
  }
  if (g->kind == words::FormulaKind::True || g->kind == words::FormulaKind::False) return g;
  auto out = std::make_shared<words::Formula>(*g);
  out->lhs = expand_successors(g->lhs);
  if (g->rhs) out->rhs = expand_successors(g->rhs);
  return out;
}

// ── SMT-LIB ────────────────────────────────────────────────────────────────

namespace {

constexpr const char* kDomainPredicate = "in_ternary";

std::string symbol(const std::string& name) {
  bool simple = !name.empty() && !std::isdigit(static_cast<unsigned char>(name[0]));
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') simple = false;
  }
  return simple ? name : "|" + name + "|";
}

std::string smt_term(const words::TermPtr& t) {
  switch (t->kind) {
    case words::TermKind::Var: return symbol(t->text);
    case words::TermKind::Const: return "\"" + t->text + "\"";
    case words::TermKind::Prefix:
      return "(str.++ \"" + t->text + "\" " + smt_term(t->arg) + ")";
    case words::TermKind::Suffix:
      return "(str.++ " + smt_term(t->arg) + " \"" + t->text + "\")";
  }
  return {};
}

std::string smt_formula(const words::FormulaPtr& g) {
  switch (g->kind) {
    case words::FormulaKind::True: return "true";
    case words::FormulaKind::False: return "false";
    case words::FormulaKind::Eq:
      return "(= " + smt_term(g->left_term) + " " + smt_term(g->right_term) + ")";
    case words::FormulaKind::PrefixOf:
      return "(str.prefixof " + smt_term(g->left_term) + " " + smt_term(g->right_term) + ")";
    case words::FormulaKind::Not: return "(not " + smt_formula(g->lhs) + ")";
    case words::FormulaKind::And:
      return "(and " + smt_formula(g->lhs) + " " + smt_formula(g->rhs) + ")";
    case words::FormulaKind::Or:
      return "(or " + smt_formula(g->lhs) + " " + smt_formula(g->rhs) + ")";
    case words::FormulaKind::Implies:
      return "(=> " + smt_formula(g->lhs) + " " + smt_formula(g->rhs) + ")";
    case words::FormulaKind::Iff:
      return "(= " + smt_formula(g->lhs) + " " + smt_formula(g->rhs) + ")";
    case words::FormulaKind::Forall:
    case words::FormulaKind::Exists: {
      std::vector<std::string> vars;
      words::FormulaPtr body = g;
      while (body->kind == g->kind) {
        vars.push_back(body->var);
        body = body->lhs;
      }
      bool universal = g->kind == words::FormulaKind::Forall;
      std::string binders, guards;
      for (const auto& v : vars) {
        if (!binders.empty()) binders += ' ';
        binders += "(" + symbol(v) + " String)";
        guards += " (" + std::string(kDomainPredicate) + " " + symbol(v) + ")";
      }
      std::string guard = vars.size() == 1 ? guards.substr(1) : "(and" + guards + ")";
      std::string inner = universal ? "(=> " + guard + " " + smt_formula(body) + ")"
                                    : "(and " + guard + " " + smt_formula(body) + ")";
      return std::string(universal ? "(forall (" : "(exists (") + binders + ") " + inner + ")";
    }
  }
  return {};
}

}  // namespace

std::string emit_smtlib(const words::FormulaPtr& g) {
  std::set<std::string> free = words::free_variables(g);
  std::vector<std::string> declared(free.begin(), free.end());
  words::FormulaPtr body = g;
  bool negate = g->kind == words::FormulaKind::Forall;
  if (words::is_quantifier(*g)) {
    while (body->kind == g->kind) {
      declared.push_back(body->var);
      body = body->lhs;
    }
  }

  std::ostringstream out;
  out << "; word constraints over {0,1,2}*, prefix successor P_w(t) = w.t, suffix successor S_w(t) = t.w\n";
  if (negate) {
    out << "; check: the sentence is valid iff this script is unsat\n";
  } else {
    out << "; check: the sentence is true iff this script is sat\n";
  }
  out << "(set-logic ALL)\n";
  out << "(define-fun " << kDomainPredicate
      << " ((s String)) Bool (str.in_re s (re.* (re.range \"0\" \"2\"))))\n";
  for (const auto& v : declared) out << "(declare-const " << symbol(v) << " String)\n";
  for (const auto& v : declared) out << "(assert (" << kDomainPredicate << " " << symbol(v) << "))\n";
  std::string matrix = smt_formula(body);
  out << "(assert " << (negate ? "(not " + matrix + ")" : matrix) << ")\n";
  out << "(check-sat)\n";
  return out.str();
}

}  // namespace treeshare
