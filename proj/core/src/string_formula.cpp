#include "treeshare/string_formula.hpp"

#include <cctype>
#include <optional>
#include <regex>

#include "treeshare/error.hpp"

namespace treeshare::words {

TermPtr Term::var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->text = std::move(name);
  return t;
}

TermPtr Term::constant(std::string word) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->text = std::move(word);
  return t;
}

TermPtr Term::prefix(std::string w, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Prefix;
  t->text = std::move(w);
  t->arg = std::move(arg);
  return t;
}

TermPtr Term::suffix(std::string w, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Suffix;
  t->text = std::move(w);
  t->arg = std::move(arg);
  return t;
}

FormulaPtr Formula::truth(bool value) {
  auto f = std::make_shared<Formula>();
  f->kind = value ? FormulaKind::True : FormulaKind::False;
  return f;
}

FormulaPtr Formula::eq(TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Eq;
  f->left_term = std::move(a);
  f->right_term = std::move(b);
  return f;
}

FormulaPtr Formula::prefix_of(TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::PrefixOf;
  f->left_term = std::move(a);
  f->right_term = std::move(b);
  return f;
}

FormulaPtr Formula::negate(FormulaPtr g) {
  auto f = std::make_shared<Formula>();
  f->kind = FormulaKind::Not;
  f->lhs = std::move(g);
  return f;
}

FormulaPtr Formula::binary(FormulaKind kind, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr Formula::quantifier(FormulaKind kind, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->var = std::move(var);
  f->lhs = std::move(body);
  return f;
}

bool is_atom(const Formula& f) {
  return f.kind == FormulaKind::Eq || f.kind == FormulaKind::PrefixOf;
}

bool is_quantifier(const Formula& f) {
  return f.kind == FormulaKind::Forall || f.kind == FormulaKind::Exists;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->text != b->text) return false;
  return equal(a->arg, b->arg);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind || a->var != b->var) return false;
  if (is_atom(*a)) return equal(a->left_term, b->left_term) && equal(a->right_term, b->right_term);
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

namespace {

void term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) out.insert(t->text);
  term_vars(t->arg, out);
}

void formula_vars(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& free,
                  std::set<std::string>& all) {
  if (!f) return;
  if (is_atom(*f)) {
    std::set<std::string> vs;
    term_vars(f->left_term, vs);
    term_vars(f->right_term, vs);
    for (const auto& v : vs) {
      all.insert(v);
      if (!bound.count(v)) free.insert(v);
    }
    return;
  }
  if (is_quantifier(*f)) {
    all.insert(f->var);
    bool fresh = bound.insert(f->var).second;
    formula_vars(f->lhs, bound, free, all);
    if (fresh) bound.erase(f->var);
    return;
  }
  formula_vars(f->lhs, bound, free, all);
  formula_vars(f->rhs, bound, free, all);
}

}  // namespace

std::set<std::string> free_variables(const FormulaPtr& f) {
  std::set<std::string> bound, free, all;
  formula_vars(f, bound, free, all);
  return free;
}

std::set<std::string> all_variables(const FormulaPtr& f) {
  std::set<std::string> bound, free, all;
  formula_vars(f, bound, free, all);
  return all;
}

// ── parsing ────────────────────────────────────────────────────────────────

namespace {

enum class Tok {
  LParen, RParen, Ident, Word, Eq, Le, Bang, AndOp, OrOp, Arrow, IffOp, Dot,
  Forall, Exists, True, False, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              s[i] == '\'')) {
        ++i;
      }
      std::string word(s.substr(start, i - start));
      Tok k = Tok::Ident;
      if (word == "A") k = Tok::Forall;
      else if (word == "E") k = Tok::Exists;
      else if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      out.push_back({k, word, start});
      continue;
    }
    if (c == '"') {
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] < '0' || s[i] > '2') throw ParseError(i, "digit 0, 1 or 2 in word literal");
        ++i;
      }
      if (i == s.size()) throw ParseError(i, "closing '\"'");
      out.push_back({Tok::Word, std::string(s.substr(start + 1, i - start - 1)), start});
      ++i;
      continue;
    }
    std::string_view rest = s.substr(i);
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(rest.substr(0, len)), start});
      i += len;
    };
    if (rest.starts_with("<->")) push(Tok::IffOp, 3);
    else if (rest.starts_with("<=")) push(Tok::Le, 2);
    else if (rest.starts_with("->")) push(Tok::Arrow, 2);
    else if (rest.starts_with("/\\")) push(Tok::AndOp, 2);
    else if (rest.starts_with("\\/")) push(Tok::OrOp, 2);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '=') push(Tok::Eq, 1);
    else if (c == '!') push(Tok::Bang, 1);
    else if (c == '.') push(Tok::Dot, 1);
    else throw ParseError(i, "token (unexpected character '" + std::string(1, c) + "')");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const std::regex& successor_pattern() {
  static const std::regex re("([PS])_?([012]*)");
  return re;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  FormulaPtr formula() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

  TermPtr term() {
    TermPtr t = parse_term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().offset, expected);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(what);
  }
  void expect_end() const {
    if (!at(Tok::End)) fail("end of input");
  }

  TermPtr parse_term() {
    if (accept(Tok::Word)) return Term::constant(tokens_[pos_ - 1].text);
    if (!at(Tok::Ident)) fail("term");
    std::string name = peek().text;
    ++pos_;
    std::smatch m;
    if (at(Tok::LParen) && std::regex_match(name, m, successor_pattern())) {
      ++pos_;
      TermPtr arg = parse_term();
      expect(Tok::RParen, "')'");
      return m[1] == "P" ? Term::prefix(m[2], arg) : Term::suffix(m[2], arg);
    }
    return Term::var(std::move(name));
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (accept(Tok::IffOp)) f = Formula::binary(FormulaKind::Iff, f, parse_imp());
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (accept(Tok::Arrow)) return Formula::binary(FormulaKind::Implies, f, parse_imp());
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::OrOp)) f = Formula::binary(FormulaKind::Or, f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_not();
    while (accept(Tok::AndOp)) f = Formula::binary(FormulaKind::And, f, parse_not());
    return f;
  }

  FormulaPtr parse_not() {
    if (accept(Tok::Bang)) return Formula::negate(parse_not());
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    if (at(Tok::Forall) || at(Tok::Exists)) {
      FormulaKind kind = at(Tok::Forall) ? FormulaKind::Forall : FormulaKind::Exists;
      ++pos_;
      if (!at(Tok::Ident)) fail("bound variable");
      std::string var = peek().text;
      ++pos_;
      expect(Tok::Dot, "'.' after bound variable");
      return Formula::quantifier(kind, std::move(var), parse_iff());
    }
    if (accept(Tok::True)) return Formula::truth(true);
    if (accept(Tok::False)) return Formula::truth(false);
    if (accept(Tok::LParen)) {
      FormulaPtr f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    TermPtr lhs = parse_term();
    if (accept(Tok::Eq)) return Formula::eq(lhs, parse_term());
    if (accept(Tok::Le)) return Formula::prefix_of(lhs, parse_term());
    fail("'=' or '<='");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: return 0;
    case FormulaKind::Iff: return 1;
    case FormulaKind::Implies: return 2;
    case FormulaKind::Or: return 3;
    case FormulaKind::And: return 4;
    case FormulaKind::Not: return 5;
    default: return 6;
  }
}

void print_formula(const FormulaPtr& f, int min_prec, std::string& out) {
  bool parens = precedence(*f) < min_prec;
  if (parens) out += '(';
  switch (f->kind) {
    case FormulaKind::True: out += "true"; break;
    case FormulaKind::False: out += "false"; break;
    case FormulaKind::Eq:
    case FormulaKind::PrefixOf:
      out += print(f->left_term);
      out += f->kind == FormulaKind::Eq ? " = " : " <= ";
      out += print(f->right_term);
      break;
    case FormulaKind::Not:
      out += '!';
      if (is_atom(*f->lhs)) {
        out += '(';
        print_formula(f->lhs, 0, out);
        out += ')';
      } else {
        print_formula(f->lhs, 5, out);
      }
      break;
    case FormulaKind::And:
      print_formula(f->lhs, 4, out);
      out += " /\\ ";
      print_formula(f->rhs, 5, out);
      break;
    case FormulaKind::Or:
      print_formula(f->lhs, 3, out);
      out += " \\/ ";
      print_formula(f->rhs, 4, out);
      break;
    case FormulaKind::Implies:
      print_formula(f->lhs, 3, out);
      out += " -> ";
      print_formula(f->rhs, 2, out);
      break;
    case FormulaKind::Iff:
      print_formula(f->lhs, 1, out);
      out += " <-> ";
      print_formula(f->rhs, 2, out);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f->kind == FormulaKind::Forall ? "A " : "E ";
      out += f->var;
      out += ". ";
      print_formula(f->lhs, 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).formula(); }
TermPtr parse_term(std::string_view text) { return Parser(text).term(); }

std::string print(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var: return t->text;
    case TermKind::Const: return "\"" + t->text + "\"";
    case TermKind::Prefix: return "P_" + t->text + "(" + print(t->arg) + ")";
    case TermKind::Suffix: return "S_" + t->text + "(" + print(t->arg) + ")";
  }
  return {};
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

// ── bounded semantics ──────────────────────────────────────────────────────

std::vector<std::string> words_up_to(const std::string& alphabet, int max_length) {
  std::vector<std::string> out{""};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    level_start = level_end;
  }
  return out;
}

std::string evaluate(const TermPtr& t, const WordAssignment& env) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = env.find(t->text);
      if (it == env.end()) throw Error("no value for word variable '" + t->text + "'");
      return it->second;
    }
    case TermKind::Const: return t->text;
    case TermKind::Prefix: return t->text + evaluate(t->arg, env);
    case TermKind::Suffix: return evaluate(t->arg, env) + t->text;
  }
  return {};
}

namespace {

bool eval_rec(const FormulaPtr& f, const std::vector<std::string>& domain, WordAssignment& env) {
  switch (f->kind) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Eq: return evaluate(f->left_term, env) == evaluate(f->right_term, env);
    case FormulaKind::PrefixOf:
      return evaluate(f->right_term, env).starts_with(evaluate(f->left_term, env));
    case FormulaKind::Not: return !eval_rec(f->lhs, domain, env);
    case FormulaKind::And: return eval_rec(f->lhs, domain, env) && eval_rec(f->rhs, domain, env);
    case FormulaKind::Or: return eval_rec(f->lhs, domain, env) || eval_rec(f->rhs, domain, env);
    case FormulaKind::Implies:
      return !eval_rec(f->lhs, domain, env) || eval_rec(f->rhs, domain, env);
    case FormulaKind::Iff: return eval_rec(f->lhs, domain, env) == eval_rec(f->rhs, domain, env);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool want = f->kind == FormulaKind::Exists;
      auto saved = env.find(f->var) == env.end() ? std::nullopt
                                                 : std::optional<std::string>(env[f->var]);
      bool result = !want;
      for (const auto& w : domain) {
        env[f->var] = w;
        if (eval_rec(f->lhs, domain, env) == want) {
          result = want;
          break;
        }
      }
      if (saved) env[f->var] = *saved;
      else env.erase(f->var);
      return result;
    }
  }
  return false;
}

}  // namespace

bool evaluate_bounded(const FormulaPtr& f, const std::string& alphabet, int max_length,
                      const WordAssignment& env) {
  std::vector<std::string> domain = words_up_to(alphabet, max_length);
  WordAssignment scratch = env;
  return eval_rec(f, domain, scratch);
}

}  // namespace treeshare::words
