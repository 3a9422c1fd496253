#include "treeshare/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "treeshare/error.hpp"
#include "treeshare/evaluate.hpp"

namespace treeshare {

namespace {

enum class Tok {
  LParen,
  RParen,
  White,
  Black,
  Ident,
  Bar,
  Amp,
  Tilde,
  Plus,
  Dot,
  Eq,
  Le,
  Lt,
  Bang,
  AndOp,
  OrOp,
  Arrow,
  IffOp,
  Forall,
  Exists,
  True,
  False,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string_view word = s.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "o") k = Tok::White;
      else if (word == "A") k = Tok::Forall;
      else if (word == "E") k = Tok::Exists;
      else if (word == "true") k = Tok::True;
      else if (word == "false") k = Tok::False;
      push(k, j - i);
      continue;
    }
    std::string_view rest = s.substr(i);
    if (rest.starts_with("<->")) push(Tok::IffOp, 3);
    else if (rest.starts_with("<=")) push(Tok::Le, 2);
    else if (rest.starts_with("->")) push(Tok::Arrow, 2);
    else if (rest.starts_with("/\\")) push(Tok::AndOp, 2);
    else if (rest.starts_with("\\/")) push(Tok::OrOp, 2);
    else {
      switch (c) {
        case '(': push(Tok::LParen, 1); break;
        case ')': push(Tok::RParen, 1); break;
        case '*': push(Tok::Black, 1); break;
        case '|': push(Tok::Bar, 1); break;
        case '&': push(Tok::Amp, 1); break;
        case '~': push(Tok::Tilde, 1); break;
        case '+': push(Tok::Plus, 1); break;
        case '.': push(Tok::Dot, 1); break;
        case '=': push(Tok::Eq, 1); break;
        case '<': push(Tok::Lt, 1); break;
        case '!': push(Tok::Bang, 1); break;
        default:
          throw ParseError(i, "token (unexpected character '" + std::string(1, c) + "')");
      }
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options)
      : tokens_(tokenize(text)), options_(options) {}

  FormulaPtr formula() {
    FormulaPtr f = guarded([&] { return parse_iff(); });
    expect_end();
    return f;
  }

  TermPtr term() {
    TermPtr t = guarded([&] { return parse_plus(); });
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(peek().offset, expected);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(what);
  }
  void expect_end() {
    if (!at(Tok::End)) fail("end of input");
  }

  // Runs a parse step, remembering the error that got furthest so that a
  // failed backtracking alternative reports the most useful position.
  template <typename F>
  auto guarded(F&& step) -> decltype(step()) {
    try {
      return step();
    } catch (const ParseError& e) {
      if (furthest_ && furthest_->position() > e.position()) throw *furthest_;
      throw;
    }
  }

  void note(const ParseError& e) {
    if (!furthest_ || e.position() >= furthest_->position()) furthest_ = e;
  }

  // ── trees ────────────────────────────────────────────────────────────────

  std::optional<RawTree> try_raw_tree() {
    std::size_t save = pos_;
    try {
      return raw_tree();
    } catch (const ParseError& e) {
      note(e);
      pos_ = save;
      return std::nullopt;
    }
  }

  RawTree raw_tree() {
    if (accept(Tok::White)) return RawTree::make_leaf(false);
    if (accept(Tok::Black)) return RawTree::make_leaf(true);
    expect(Tok::LParen, "tree");
    RawTree l = raw_tree();
    RawTree r = raw_tree();
    expect(Tok::RParen, "')'");
    return RawTree::make_node(std::move(l), std::move(r));
  }

  std::optional<TreeShare> try_tree() {
    std::size_t start = peek().offset;
    std::optional<RawTree> raw = try_raw_tree();
    if (!raw) return std::nullopt;
    if (!options_.canonicalize_literals && !is_canonical(*raw)) {
      throw ParseError(start, "canonical tree literal (got " + raw->str() + ")");
    }
    return canonicalize(*raw);
  }

  // ── terms ────────────────────────────────────────────────────────────────

  TermPtr parse_plus() {
    TermPtr t = parse_union();
    while (accept(Tok::Plus)) t = Term::sum(t, parse_union());
    return t;
  }

  TermPtr parse_union() {
    TermPtr t = parse_inter();
    while (accept(Tok::Bar)) t = Term::join(t, parse_inter());
    return t;
  }

  TermPtr parse_inter() {
    TermPtr t = parse_unary();
    while (accept(Tok::Amp)) t = Term::meet(t, parse_unary());
    return t;
  }

  TermPtr parse_unary() {
    if (accept(Tok::Tilde)) return Term::complement_of(parse_unary());
    return parse_dot();
  }

  // Value of a ground factor such as ((* o) + (o *)).
  TreeShare fold(const TermPtr& t, std::size_t offset) {
    auto v = evaluate(t, {});
    if (!v) throw ParseError(offset, "a defined constant factor (the sum overlaps)");
    return *v;
  }

  std::optional<TreeShare> try_factor() {
    if (auto c = try_tree()) return c;
    if (!at(Tok::LParen)) return std::nullopt;
    std::size_t save = pos_;
    std::size_t offset = peek().offset;
    ++pos_;
    TermPtr t = parse_plus();
    if (accept(Tok::RParen) && is_ground(t)) return fold(t, offset);
    pos_ = save;
    return std::nullopt;
  }

  TermPtr parse_dot() {
    std::size_t offset = peek().offset;
    TermPtr t = parse_primary_term();
    while (at(Tok::Dot)) {
      ++pos_;
      if (auto factor = try_factor()) {
        t = Term::rmul(t, *factor);
        continue;
      }
      if (is_ground(t)) return Term::lmul(fold(t, offset), parse_dot());
      fail("tree constant after '.'");
    }
    return t;
  }

  TermPtr parse_primary_term() {
    if (at(Tok::Ident)) {
      std::string name = peek().text;
      ++pos_;
      return Term::var(std::move(name));
    }
    if (auto c = try_tree()) return Term::constant_of(*c);
    if (accept(Tok::LParen)) {
      TermPtr t = parse_plus();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("term");
  }

  // ── formulas ─────────────────────────────────────────────────────────────

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (accept(Tok::IffOp)) f = Formula::iff(f, parse_imp());
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (accept(Tok::Arrow)) return Formula::implies(f, parse_imp());
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept(Tok::OrOp)) f = Formula::disj(f, parse_and());
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_not();
    while (accept(Tok::AndOp)) f = Formula::conj(f, parse_not());
    return f;
  }

  FormulaPtr parse_not() {
    if (accept(Tok::Bang)) return Formula::negate(parse_not());
    return parse_primary_formula();
  }

  static bool continues_term(Tok k) {
    return k == Tok::Eq || k == Tok::Le || k == Tok::Lt || k == Tok::Bar ||
           k == Tok::Amp || k == Tok::Plus || k == Tok::Dot;
  }

  FormulaPtr parse_primary_formula() {
    if (at(Tok::Forall) || at(Tok::Exists)) {
      FormulaKind kind = at(Tok::Forall) ? FormulaKind::Forall : FormulaKind::Exists;
      ++pos_;
      Domain domain = accept(Tok::Plus) ? Domain::NonTrivial : Domain::All;
      if (!at(Tok::Ident)) fail("bound variable");
      std::string var = peek().text;
      ++pos_;
      expect(Tok::Dot, "'.' after bound variable");
      return Formula::quantifier(kind, std::move(var), parse_iff(), domain);
    }
    if (accept(Tok::True)) return Formula::truth(true);
    if (accept(Tok::False)) return Formula::truth(false);
    if (at(Tok::LParen)) {
      std::size_t save = pos_;
      try {
        ++pos_;
        FormulaPtr f = parse_iff();
        expect(Tok::RParen, "')'");
        if (!continues_term(peek().kind)) return f;
      } catch (const ParseError& e) {
        note(e);
      }
      pos_ = save;
    }
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    TermPtr lhs = parse_plus();
    if (accept(Tok::Eq)) return Formula::eq(lhs, parse_plus());
    if (accept(Tok::Le)) return Formula::leq(lhs, parse_plus());
    if (accept(Tok::Lt)) return Formula::lt(lhs, parse_plus());
    fail("'=', '<=' or '<'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  std::optional<ParseError> furthest_;
};

// ── printing ───────────────────────────────────────────────────────────────

int term_prec(const Term& t) {
  switch (t.kind) {
    case TermKind::Plus: return 1;
    case TermKind::Union: return 2;
    case TermKind::Intersect: return 3;
    case TermKind::Complement: return 4;
    case TermKind::RMul:
    case TermKind::LMul: return 5;
    default: return 6;
  }
}

void print_term(const TermPtr& t, int min_prec, std::string& out) {
  bool parens = term_prec(*t) < min_prec;
  if (parens) out += '(';
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      break;
    case TermKind::Const:
      out += t->constant.str();
      break;
    case TermKind::Plus:
      print_term(t->lhs, 1, out);
      out += " + ";
      print_term(t->rhs, 2, out);
      break;
    case TermKind::Union:
      print_term(t->lhs, 2, out);
      out += " | ";
      print_term(t->rhs, 3, out);
      break;
    case TermKind::Intersect:
      print_term(t->lhs, 3, out);
      out += " & ";
      print_term(t->rhs, 4, out);
      break;
    case TermKind::Complement:
      out += '~';
      print_term(t->lhs, 4, out);
      break;
    case TermKind::RMul:
      // An lmul operand would swallow the trailing factor when reparsed.
      print_term(t->lhs, t->lhs->kind == TermKind::LMul ? 6 : 5, out);
      out += " . ";
      out += t->constant.str();
      break;
    case TermKind::LMul:
      out += t->constant.str();
      out += " . ";
      print_term(t->lhs, t->lhs->kind == TermKind::LMul ? 6 : 5, out);
      break;
  }
  if (parens) out += ')';
}

int formula_prec(const Formula& f) {
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
  bool parens = formula_prec(*f) < min_prec;
  if (parens) out += '(';
  switch (f->kind) {
    case FormulaKind::True:
      out += "true";
      break;
    case FormulaKind::False:
      out += "false";
      break;
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::Lt:
      print_term(f->left_term, 1, out);
      out += f->kind == FormulaKind::Eq ? " = " : f->kind == FormulaKind::Leq ? " <= " : " < ";
      print_term(f->right_term, 1, out);
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
      out += f->kind == FormulaKind::Forall ? 'A' : 'E';
      if (f->domain == Domain::NonTrivial) out += '+';
      out += ' ';
      out += f->var;
      out += ". ";
      print_formula(f->lhs, 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

FormulaPtr parse_formula(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).formula();
}

TermPtr parse_term(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).term();
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

std::string print(const TermPtr& t) {
  std::string out;
  print_term(t, 0, out);
  return out;
}

}  // namespace treeshare
