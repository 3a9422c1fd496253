#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "treeshare/combined.hpp"
#include "treeshare/error.hpp"
#include "treeshare/parser.hpp"
#include "treeshare/word_bridge.hpp"

using namespace treeshare;

namespace {

FormulaPtr P(const char* s) { return parse_formula(s); }
TreeShare T(const char* s) { return parse_tree(s); }

std::string joined(const Factorization& f) {
  std::string out;
  for (const auto& p : f) out += (out.empty() ? "" : " . ") + p.str();
  return out;
}

std::vector<TreeShare> nontrivial(int h) {
  std::vector<TreeShare> out;
  for (const auto& t : enumerate(h)) {
    if (!t.is_leaf()) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_SUITE("word_bridge") {

TEST_CASE("division and primality") {
  CHECK(is_prime(left_half()));
  CHECK(divide_right(T("((o *) o)"), right_half()) == left_half());
  CHECK_FALSE(divide_right(left_half(), right_half()).has_value());
  CHECK_THROWS_AS(divide_right(TreeShare::black(), left_half()), DomainError);
  CHECK_THROWS_AS(is_prime(TreeShare::white()), DomainError);
}

TEST_CASE("factorization examples") {
  CHECK(joined(factorize(T("(((o *) o) (o ((o *) o)))"))) == "(* (o *)) . (* o) . (o *)");
  CHECK(joined(factorize(left_half())) == "(* o)");
  CHECK_THROWS_AS(factorize(TreeShare::black()), DomainError);
}

TEST_CASE("factorization agrees with exhaustive decomposition") {
  oracle::FactorOracle oracle(3);
  for (const TreeShare& t : nontrivial(3)) {
    CAPTURE(t.str());
    CHECK(is_prime(t) == oracle.prime(t));
    auto all = oracle.factorizations(t);
    REQUIRE(all.size() == 1);
    CHECK(factorize(t) == all[0]);
  }
}

TEST_CASE("shortlex codes") {
  std::vector<std::string> want{"", "0", "1", "00", "01", "10", "11", "000"};
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(shortlex_code(i) == want[i]);
}

TEST_CASE("encoding of the worked example") {
  EncodingTable table = build_encoding({T("((o *) o)"), T("(o (* o))")});
  CHECK(table.primes() == std::vector<TreeShare>{left_half(), right_half()});
  CHECK(*table.code(left_half()) == "");
  CHECK(*table.code(right_half()) == "0");
  CHECK(encode_tree(T("((o *) o)"), table) == "20");
  CHECK(encode_tree(T("(o (* o))"), table) == "02");
  CHECK(encode_tree(left_half(), table) == "");
  CHECK(decode_string("20", table) == T("((o *) o)"));
  CHECK_THROWS_AS(decode_string("1", table), UnknownPrime);
  CHECK_THROWS_AS(encode_tree(T("(* (o *))"), table), EncodingGap);
}

TEST_CASE("encoding round trip and homomorphism") {
  EncodingTable table = build_encoding(nontrivial(3));
  for (const TreeShare& t : nontrivial(3)) CHECK(decode_string(encode_tree(t, table), table) == t);
  EncodingTable small = build_encoding(nontrivial(2));
  for (const TreeShare& a : nontrivial(2)) {
    for (const TreeShare& b : nontrivial(2)) {
      CHECK(encode_tree(bowtie(a, b), small) ==
            encode_tree(a, small) + "2" + encode_tree(b, small));
    }
  }
}

TEST_CASE("translation of the worked example") {
  FormulaPtr f = P("A+ a. E+ b. E+ c. a = b . ((o *) o) /\\ b = (o (* o)) . c");
  EncodingTable table = build_encoding(f);
  words::FormulaPtr g = translate(f, table);
  CHECK(words::print(g) == "A a. E b. E c. a = S_220(b) /\\ b = P_022(c)");
  CHECK(words::print(expand_successors(g)) ==
        "A a. E b. E c. a = S_0(S_2(S_2(b))) /\\ b = P_0(P_2(P_2(c)))");
}

TEST_CASE("reverse mapping") {
  CHECK(code_to_prime("") == left_half());
  CHECK(code_to_prime("0").str() == "(* (* o))");
  CHECK(code_to_prime("1").str() == "(* (o *))");
  CHECK(word_to_tree("20") == bowtie(left_half(), code_to_prime("0")));
  words::FormulaPtr g = words::parse_formula("A a. E b. E c. a = S_220(b) /\\ b = P_022(c)");
  FormulaPtr back = reverse_translate(g);
  TreeShare t1 = left_half();
  TreeShare t2 = T("(* (* o))");
  FormulaPtr want = Formula::forall(
      "a",
      Formula::exists(
          "b", Formula::exists(
                   "c", Formula::conj(Formula::eq(Term::var("a"), Term::rmul(Term::var("b"), bowtie(t1, t2))),
                                      Formula::eq(Term::var("b"), Term::lmul(bowtie(t2, t1), Term::var("c")))),
                   Domain::NonTrivial),
          Domain::NonTrivial),
      Domain::NonTrivial);
  CHECK(equal(back, want));
  CHECK_THROWS_AS(reverse_translate(words::parse_formula("a = S_02(b)")), UnsupportedSymbol);
  CHECK_THROWS_AS(reverse_translate(words::parse_formula("a <= b")), UnsupportedSymbol);
}

TEST_CASE("translate after reverse gives the same word formula up to codes") {
  words::FormulaPtr g = words::parse_formula("A a. E b. a = S_21(b) \\/ a = P_02(b)");
  FormulaPtr f = reverse_translate(g);
  EncodingTable table = build_encoding(f);
  std::string again = words::print(translate(f, table));
  CHECK(again == "A a. E b. a = S_20(b) \\/ a = P_2(b)");
}

TEST_CASE("translate rejects trivial constants and order atoms") {
  EncodingTable table = build_encoding({left_half()});
  CHECK_THROWS_AS(translate(P("A a. a = a . (* o)"), table), DomainError);
  CHECK_THROWS_AS(translate(P("A+ a. a = *"), table), DomainError);
  CHECK_THROWS_AS(translate(P("A+ a. a <= a"), table), FragmentError);
  CHECK_THROWS_AS(translate(P("A+ a. a = a . (o *)"), table), EncodingGap);
}

TEST_CASE("stripping the trivial cases") {
  CHECK(print(strip_trivial(P("E a. a . (* o) = o"))) == "true");
  CHECK(print(strip_trivial(P("E a. a . (* o) = *"))) == "false");
  CHECK(print(strip_trivial(P("A a. a . * = a"))) == "true");
  CHECK(print(strip_trivial(P("A a. E b. a = b . (* o)"))) == "false");
  CHECK(print(strip_trivial(P("A a. E b. a . (* o) = b"))) ==
        "(E+ b. (* o) = b) /\\ (A+ a. E+ b. a . (* o) = b)");
  CHECK(print(strip_trivial(P("A a. E b. a = b . (* o) \\/ a = b"))) ==
        "A+ a. a = (* o) \\/ (E+ b. a = b . (* o) \\/ a = b)");
  CHECK_THROWS_AS(strip_trivial(P("A a. a | a = a")), FragmentError);
  CHECK_THROWS_AS(strip_trivial(P("a . (* o) = b")), DomainError);
}

TEST_CASE("stripping keeps bounded truth") {
  const char* corpus[] = {
      "E a. a . (* o) = o",
      "E a. a . (* o) = *",
      "A a. a . * = a",
      "A a. E b. a = b . (* o)",
      "E a. E b. a . (* o) = (* o) . b",
      "A a. A b. a . (o *) = b . (o *) -> a = b",
      "E a. a . (o *) = (o *) . a /\\ !(a = *) /\\ !(a = o)",
      "A a. (* o) . a = a . (* o)",
  };
  for (const char* text : corpus) {
    FormulaPtr f = P(text);
    CAPTURE(text);
    CHECK(check_bounded(strip_trivial(f), 3).value() == check_bounded(f, 3).value());
  }
}

TEST_CASE("ground atoms keep their truth through translation") {
  const auto& dom = nontrivial(2);
  EncodingTable table = build_encoding(dom);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
  for (int i = 0; i < 200; ++i) {
    TreeShare a = dom[pick(rng)], b = dom[pick(rng)], c = dom[pick(rng)];
    FormulaPtr f = Formula::eq(Term::rmul(Term::constant_of(a), b), Term::lmul(c, Term::constant_of(a)));
    words::FormulaPtr g = translate(f, table);
    CHECK(eval_ground(f) == words::evaluate_bounded(g, "012", 0));
  }
}

TEST_CASE("successor expansion matches concatenation") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 5);
  auto word = [&] {
    std::string w;
    for (int n = len(rng); n > 0; --n) w += static_cast<char>('0' + letter(rng));
    return w;
  };
  for (int i = 0; i < 100; ++i) {
    std::string u = word(), v = word(), x = word();
    auto t = words::Term::suffix(u, words::Term::prefix(v, words::Term::var("x")));
    words::WordAssignment env{{"x", x}};
    CHECK(words::evaluate(expand_successors(t), env) == v + x + u);
    CHECK(words::evaluate(t, env) == v + x + u);
  }
  CHECK(words::print(expand_successors(words::parse_term("P_(b)"))) == "b");
}

}  // TEST_SUITE
