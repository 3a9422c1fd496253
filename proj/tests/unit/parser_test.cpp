#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "treeshare/error.hpp"
#include "treeshare/parser.hpp"

using namespace treeshare;

namespace {

std::vector<std::string> corpus(const std::string& name) {
  std::ifstream in(std::string(TREESHARE_TEST_DATA) + "/" + name);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("sum of halves reads as a quantified equation") {
  FormulaPtr f = parse_formula("A p. p = (p . (* o)) + (p . (o *))");
  REQUIRE(f->kind == FormulaKind::Forall);
  CHECK(f->var == "p");
  const FormulaPtr& eq = f->lhs;
  REQUIRE(eq->kind == FormulaKind::Eq);
  CHECK(eq->left_term->kind == TermKind::Var);
  const TermPtr& sum = eq->right_term;
  REQUIRE(sum->kind == TermKind::Plus);
  CHECK(sum->lhs->kind == TermKind::RMul);
  CHECK(sum->lhs->constant == left_half());
  CHECK(sum->rhs->constant == right_half());
}

TEST_CASE("simple quantifier") {
  FormulaPtr f = parse_formula("E a. a = a");
  CHECK(equal(f, Formula::exists("a", Formula::eq(Term::var("a"), Term::var("a")))));
}

TEST_CASE("golden formulas print back verbatim") {
  auto lines = corpus("formulas.fml");
  REQUIRE(lines.size() > 10);
  for (const auto& line : lines) {
    CAPTURE(line);
    FormulaPtr f = parse_formula(line);
    CHECK(print(f) == line);
    CHECK(equal(parse_formula(print(f)), f));
  }
}

TEST_CASE("precedence") {
  CHECK(equal(parse_formula("a | b & c = d"), parse_formula("(a | (b & c)) = d")));
  CHECK(equal(parse_formula("a + b | c = d"), parse_formula("(a + (b | c)) = d")));
  CHECK(equal(parse_formula("~a . (* o) = b"), parse_formula("~(a . (* o)) = b")));
  CHECK(equal(parse_formula("a = b -> b = c -> c = d"), parse_formula("a = b -> (b = c -> c = d)")));
  CHECK(equal(parse_formula("!a = b /\\ c = d \\/ e = f"),
              parse_formula("((!(a = b)) /\\ c = d) \\/ e = f")));
  CHECK(equal(parse_formula("A x. x = a /\\ x = b"), parse_formula("A x. (x = a /\\ x = b)")));
}

TEST_CASE("left and right multiplication") {
  FormulaPtr f = parse_formula("(o (* o)) . c = b . ((o *) o)");
  CHECK(f->left_term->kind == TermKind::LMul);
  CHECK(f->right_term->kind == TermKind::RMul);
}

TEST_CASE("ground factors are folded") {
  FormulaPtr f = parse_formula("A pi. pi = pi . ((* o) + (o *))");
  CHECK(print(f) == "A pi. pi = pi . *");
  CHECK_THROWS_AS(parse_formula("x . ((* o) + (* o)) = x"), ParseError);
}

TEST_CASE("nontrivial quantifiers") {
  FormulaPtr f = parse_formula("A+ x. E y. x = y");
  CHECK(f->domain == Domain::NonTrivial);
  CHECK(f->lhs->domain == Domain::All);
}

TEST_CASE("malformed input reports where parsing stopped") {
  try {
    parse_formula("A a. a = ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_formula("a = (* *)"), ParseError);
  CHECK(print(parse_formula("a = (* *)", {true})) == "a = *");
  CHECK_THROWS_AS(parse_formula("a . b = c"), ParseError);
  CHECK_THROWS_AS(parse_formula("A o. o = o"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
}

}  // TEST_SUITE
