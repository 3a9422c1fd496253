#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "treeshare/error.hpp"
#include "treeshare/tree.hpp"

using namespace treeshare;

namespace {
TreeShare T(const char* s) { return parse_tree(s); }
}  // namespace

TEST_SUITE("tree") {

TEST_CASE("canonical form folds equal leaves") {
  CHECK(canonicalize(parse_raw_tree("((* *) (o (o o)))")).str() == "(* o)");
  CHECK(canonicalize(parse_raw_tree("*")).str() == "*");
  CHECK(canonicalize(parse_raw_tree("((* o) (* o))")).str() == "((* o) (* o))");
  CHECK_THROWS_AS(parse_tree("(* *)"), ParseError);
  CHECK_FALSE(is_canonical(parse_raw_tree("((* *) o)")));
  CHECK(is_canonical(parse_raw_tree("(* o)")));
}

TEST_CASE("canonicalize is idempotent") {
  for (const TreeShare& t : enumerate(3)) {
    CHECK(canonicalize(to_raw(t)) == t);
    CHECK(parse_tree(t.str()) == t);
  }
}

TEST_CASE("parse errors carry an offset") {
  try {
    parse_tree("(* o");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_tree("(* o) *"), ParseError);
  CHECK_THROWS_AS(parse_tree("x"), ParseError);
}

TEST_CASE("Boolean operators on displayed examples") {
  CHECK(unite(T("((* o) *)"), T("(o (o *))")).str() == "((* o) *)");
  CHECK(complement(T("(* o)")).str() == "(o *)");
  TreeShare a = T("((* o) *)");
  CHECK(intersect(a, complement(a)).is_white());
}

TEST_CASE("disjoint sum is partial") {
  CHECK_FALSE(plus(T("(* o)"), T("(* o)")).has_value());
  CHECK(plus(T("(* o)"), T("(o *)"))->is_black());
  for (const TreeShare& a : enumerate(2)) CHECK(*plus(TreeShare::white(), a) == a);
}

TEST_CASE("bowtie examples") {
  CHECK(bowtie(T("((* o) (o *))"), T("(o *)")).str() == "(((o *) o) (o (o *)))");
  CHECK(bowtie(left_half(), right_half()).str() == "((o *) o)");
  CHECK(bowtie(right_half(), left_half()).str() == "(o (* o))");
  for (const TreeShare& a : enumerate(2)) {
    CHECK(bowtie(a, TreeShare::black()) == a);
    CHECK(bowtie(TreeShare::black(), a) == a);
    CHECK(bowtie(a, TreeShare::white()).is_white());
  }
}

TEST_CASE("order") {
  CHECK(leq(T("(* o)"), TreeShare::black()));
  CHECK_FALSE(leq(TreeShare::black(), T("(* o)")));
  for (const TreeShare& a : enumerate(2)) CHECK_FALSE(lt(a, a));
}

TEST_CASE("height and size") {
  CHECK(TreeShare::black().height() == 0);
  CHECK(T("(* o)").height() == 1);
  CHECK(T("(o (o (* o)))").height() == 3);
  CHECK(T("(o (o (* o)))").size() == 7);
  CHECK(T("((* o) *)").black_leaves() == 2);
}

TEST_CASE("enumeration counts match brute force") {
  CHECK(enumerate(0).size() == 2);
  CHECK(enumerate(0)[0].is_white());
  CHECK(enumerate(0)[1].is_black());
  for (int h = 0; h <= 3; ++h) {
    CHECK(enumerate(h).size() == oracle::brute_force_canonical_count(h));
    CHECK(enumerate(h).size() == enumeration_count(h));
  }
  CHECK(enumerate(2).size() == 16);
  CHECK(enumerate(4).size() == 65536);
  CHECK(enumeration_count(4) == 65536);
  CHECK_THROWS_AS(enumerate(5), DomainError);
}

TEST_CASE("enumeration order is strict and total") {
  const auto& all = enumerate(3);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(enumeration_less(all[i - 1], all[i]));
}

TEST_CASE("operators agree with the cell model") {
  const auto& all = enumerate(2);
  for (const TreeShare& a : all) {
    auto ca = oracle::unfold(a, 2);
    CHECK(oracle::same(complement(a), oracle::negate(ca)));
    for (const TreeShare& b : all) {
      auto cb = oracle::unfold(b, 2);
      CHECK(oracle::same(unite(a, b), oracle::join(ca, cb)));
      CHECK(oracle::same(intersect(a, b), oracle::meet(ca, cb)));
      auto p = plus(a, b);
      auto q = oracle::add(ca, cb);
      REQUIRE(p.has_value() == q.has_value());
      if (p) CHECK(oracle::same(*p, *q));
      CHECK(oracle::same(bowtie(a, b), oracle::graft(a, cb)));
      CHECK(leq(a, b) == oracle::below(ca, cb));
    }
  }
}

TEST_CASE("cell model covers every tree exactly once") {
  auto cells = oracle::all_cells(3);
  CHECK(cells.size() == enumerate(3).size());
  std::set<std::string> seen;
  for (const TreeShare& t : enumerate(3)) seen.insert(t.str());
  CHECK(seen.size() == cells.size());
}

TEST_CASE("sum is commutative and cancellative") {
  const auto& all = enumerate(2);
  for (const TreeShare& a : all) {
    for (const TreeShare& b : all) {
      auto ab = plus(a, b);
      if (!ab) continue;
      CHECK(*plus(b, a) == *ab);
      for (const TreeShare& c : all) {
        auto ac = plus(a, c);
        if (ac && *ac == *ab) CHECK(b == c);
      }
    }
  }
}

TEST_CASE("halves sum back for every tree of height four") {
  for (const TreeShare& a : enumerate(4)) {
    auto s = plus(bowtie(a, left_half()), bowtie(a, right_half()));
    REQUIRE(s.has_value());
    CHECK(*s == a);
  }
}

}  // TEST_SUITE
