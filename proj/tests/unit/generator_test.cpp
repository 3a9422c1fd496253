#include "doctest.h"
#include "treeshare/generator.hpp"
#include "treeshare/parser.hpp"
#include "treeshare/transform.hpp"

using namespace treeshare;

TEST_SUITE("generator") {

TEST_CASE("same seed, same formulas") {
  GeneratorOptions o;
  o.seed = 7;
  FormulaGenerator a(o), b(o);
  for (int i = 0; i < 50; ++i) CHECK(print(a.next()) == print(b.next()));
}

TEST_CASE("sentences are closed and in their fragment") {
  for (FragmentClass c : {FragmentClass::BA, FragmentClass::MULT, FragmentClass::COMBINED}) {
    GeneratorOptions o;
    o.fragment = c;
    o.seed = 13;
    FormulaGenerator gen(o);
    for (int i = 0; i < 100; ++i) {
      FormulaPtr f = gen.next();
      CAPTURE(print(f));
      CHECK(is_closed(f));
      CHECK(formula_height(f) <= o.constant_height);
      FragmentClass got = classify(f);
      if (c == FragmentClass::COMBINED) {
        CHECK(got != FragmentClass::GENERAL);
      } else if (c == FragmentClass::MULT) {
        CHECK((got == FragmentClass::MULT || got == FragmentClass::BA));
      } else {
        CHECK(got == FragmentClass::BA);
      }
    }
  }
}

TEST_CASE("quantifier-free mode") {
  GeneratorOptions o;
  o.quantifier_free = true;
  o.seed = 1;
  FormulaGenerator gen(o);
  for (int i = 0; i < 50; ++i) {
    FormulaPtr f = gen.next();
    CHECK(alternations(f) == 0);
    CHECK(print(f).find("A ") == std::string::npos);
    CHECK(print(f).find("E ") == std::string::npos);
  }
}

TEST_CASE("printed formulas parse back") {
  GeneratorOptions o;
  o.fragment = FragmentClass::COMBINED;
  o.seed = 2;
  FormulaGenerator gen(o);
  for (int i = 0; i < 100; ++i) {
    FormulaPtr f = gen.next();
    CHECK(equal(parse_formula(print(f)), f));
  }
}

}  // TEST_SUITE
