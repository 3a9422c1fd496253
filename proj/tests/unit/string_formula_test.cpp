#include "doctest.h"
#include "oracles.hpp"
#include "treeshare/error.hpp"
#include "treeshare/string_formula.hpp"

using namespace treeshare::words;

TEST_SUITE("string_formula") {

TEST_CASE("parse and print") {
  const char* samples[] = {
      "A a. E b. E c. a = S_220(b) /\\ b = P_022(c)",
      "E x. S_0(x) = \"1100\"",
      "A x. x <= x",
      "E x. E y. x <= y /\\ !(y <= x)",
      "A x. A y. x = y \\/ !(S_1(x) = S_1(y))",
  };
  for (const char* s : samples) {
    CAPTURE(s);
    FormulaPtr f = parse_formula(s);
    CHECK(equal(parse_formula(print(f)), f));
  }
  CHECK(print(parse_formula("E x. S0(x) = \"1100\"")) == "E x. S_0(x) = \"1100\"");
  CHECK_THROWS_AS(parse_formula("E x. S_3(x) = x"), treeshare::ParseError);
}

TEST_CASE("term values") {
  WordAssignment env{{"x", "01"}};
  CHECK(evaluate(parse_term("S_0(P_12(x))"), env) == "12010");
  CHECK(evaluate(parse_term("\"\""), env).empty());
}

TEST_CASE("words in shortlex order") {
  auto w = words_up_to("01", 2);
  CHECK(w == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
  CHECK(words_up_to("012", 3).size() == 40);
}

TEST_CASE("bounded truth agrees with the reference evaluator") {
  const char* samples[] = {
      "A x. x <= x",
      "E x. E y. x <= y /\\ !(y <= x)",
      "A x. E y. S_0(x) = y",
      "A x. E y. x = S_0(y)",
      "E x. S_0(x) = \"1100\"",
      "A x. A y. S_1(x) = S_1(y) -> x = y",
      "A x. A y. x <= y /\\ y <= x -> x = y",
  };
  for (const char* s : samples) {
    CAPTURE(s);
    FormulaPtr f = parse_formula(s);
    for (int n = 0; n <= 3; ++n) CHECK(evaluate_bounded(f, "01", n) == oracle::word_truth(f, n));
  }
}

TEST_CASE("free variables") {
  FormulaPtr f = parse_formula("E x. x = S_0(y)");
  CHECK(free_variables(f) == std::set<std::string>{"y"});
  CHECK(all_variables(f) == std::set<std::string>{"x", "y"});
}

}  // TEST_SUITE
