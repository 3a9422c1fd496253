#include "doctest.h"
#include "treeshare/error.hpp"
#include "treeshare/evaluate.hpp"
#include "treeshare/flatten.hpp"
#include "treeshare/generator.hpp"
#include "treeshare/parser.hpp"

using namespace treeshare;

namespace {

FormulaPtr P(const char* s) { return parse_formula(s); }

std::string names(const SplitResult& r) {
  std::string out;
  for (const auto& t : r.components) out += (out.empty() ? "" : ", ") + print(t);
  return out;
}

}  // namespace

TEST_SUITE("flatten") {

TEST_CASE("shapes") {
  CHECK(shape_of(parse_tree("(* (* o))")).str() == "(ℓ (ℓ ℓ))");
  CHECK(shape_of(TreeShare::black()).str() == "ℓ");
  Shape a = shape_of(parse_tree("(* (* o))"));
  Shape b = shape_of(parse_tree("((* o) *)"));
  CHECK(shape_join(a, b).str() == "((ℓ ℓ) (ℓ ℓ))");
  CHECK(shape_within(a, shape_join(a, b)));
  CHECK_FALSE(shape_within(shape_join(a, b), a));
  CHECK(shape_join(a, b).paths() == std::vector<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("split") {
  Shape s = shape_of(parse_tree("(* (* o))"));
  CHECK(names(split(parse_tree("((* o) *)"), s)) == "(* o), *, *");
  Shape wide = shape_of(parse_tree("((* o) (* o))"));
  CHECK(names(split(Term::var("v"), wide)) == "v00, v01, v10, v11");
  CHECK(names(split(TreeShare::black(), Shape::leaf())) == "*");
  CHECK(names(split(parse_term("~v | (* o)"), Shape::node(Shape::leaf(), Shape::leaf()))) ==
        "~v0 | *, ~v1 | o");
  CHECK_THROWS_AS(split(parse_term("v . (* o)"), Shape::leaf()), FragmentError);
}

TEST_CASE("assemble inverts split") {
  Shape s = shape_of(parse_tree("((* o) (* o))"));
  for (const TreeShare& t : enumerate(2)) {
    std::vector<TreeShare> parts;
    for (const auto& c : split(t, s).components) parts.push_back(c->constant);
    CHECK(assemble(parts, s) == t);
  }
  CHECK_THROWS_AS(assemble({TreeShare::black()}, s), ShapeMismatch);
}

TEST_CASE("split is a homomorphism on a one-level shape") {
  Shape s = Shape::node(Shape::leaf(), Shape::leaf());
  auto parts = [&](const TreeShare& t) {
    auto r = split(t, s);
    return std::vector<TreeShare>{r.components[0]->constant, r.components[1]->constant};
  };
  for (const TreeShare& a : enumerate(2)) {
    auto pa = parts(a);
    auto pc = parts(complement(a));
    for (int i = 0; i < 2; ++i) CHECK(pc[i] == complement(pa[i]));
    for (const TreeShare& b : enumerate(2)) {
      auto pb = parts(b);
      auto pu = parts(unite(a, b));
      auto pi = parts(intersect(a, b));
      for (int i = 0; i < 2; ++i) {
        CHECK(pu[i] == unite(pa[i], pb[i]));
        CHECK(pi[i] == intersect(pa[i], pb[i]));
      }
    }
  }
}

TEST_CASE("worked example keeps the component list") {
  FormulaPtr f = P("A a. E b. a | b = ((* o) o) \\/ !(~a = (o (* o)))");
  CHECK(print(flatten_formula(f)) ==
        "A a00. A a01. A a10. A a11. E b00. E b01. E b10. E b11. "
        "a00 | b00 = * /\\ a01 | b01 = o /\\ a10 | b10 = o /\\ a11 | b11 = o \\/ "
        "!(~a00 = o /\\ ~a01 = o /\\ ~a10 = * /\\ ~a11 = o)");
}

TEST_CASE("height-zero input is unchanged") {
  FormulaPtr f = P("A a. E b. a + b = * /\\ a & b = o");
  CHECK(flatten_formula(f) == f);
}

TEST_CASE("component names avoid clashes") {
  FormulaPtr f = P("A a. A a0. a = (* o) /\\ a0 = o");
  std::string text = print(flatten_formula(f));
  CAPTURE(text);
  CHECK(text.find("a_0") != std::string::npos);
}

TEST_CASE("order atoms and sums flatten componentwise") {
  FormulaPtr f = P("a <= (* o)");
  CHECK(print(flatten_formula(f)) == "a0 <= * /\\ a1 <= o");
  FormulaPtr g = P("a < (* o)");
  CHECK(print(flatten_formula(g)) == "a0 <= * /\\ a1 <= o /\\ !(a0 = * /\\ a1 = o)");
}

TEST_CASE("quantifier-free equivalence on every small assignment") {
  GeneratorOptions o;
  o.seed = 17;
  o.depth = 2;
  o.variables = 2;
  o.quantifier_free = true;
  FormulaGenerator gen(o);
  const auto& dom = enumerate(2);
  for (int i = 0; i < 60; ++i) {
    FormulaPtr f = gen.next();
    FormulaPtr g = flatten_formula(f);
    Shape s = shape_of_formula(f);
    auto vars = free_variables(f);
    std::vector<std::string> vs(vars.begin(), vars.end());
    CAPTURE(print(f));
    std::vector<std::size_t> idx(vs.size(), 0);
    while (true) {
      Assignment env, flat;
      for (std::size_t k = 0; k < vs.size(); ++k) env[vs[k]] = dom[idx[k]];
      if (formula_height(f) == 0) {
        flat = env;
      } else {
        for (const auto& [v, comps] : component_names(f, s)) {
          auto parts = split(env.at(v), s).components;
          for (std::size_t j = 0; j < comps.size(); ++j) flat[comps[j]] = parts[j]->constant;
        }
      }
      CHECK(holds(f, env) == holds(g, flat));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == dom.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

TEST_CASE("multiplication is rejected") {
  CHECK_THROWS_AS(flatten_formula(P("A a. a . (* o) = a")), FragmentError);
  CHECK_THROWS_AS(flatten_formula(P("A+ a. a = (* o)")), FragmentError);
}

}  // TEST_SUITE
