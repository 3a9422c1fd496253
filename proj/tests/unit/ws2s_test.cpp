#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "treeshare/error.hpp"
#include "treeshare/parser.hpp"
#include "treeshare/ws2s.hpp"

using namespace treeshare;

namespace {

FormulaPtr P(const char* s) { return parse_formula(s); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_formula(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') return line;
  }
  return {};
}

}  // namespace

TEST_SUITE("ws2s") {

TEST_CASE("library") {
  const std::string& lib = ws2s_library();
  CHECK(lib.rfind("ws2s;\n", 0) == 0);
  for (const char* pred : {"ant", "maxt", "roott", "subt", "eqt", "singleton", "uniont", "mint",
                           "sub0", "sub1", "leftMul", "rightMul"}) {
    CHECK(lib.find(std::string("pred ") + pred + "(") != std::string::npos);
  }
}

TEST_CASE("share obligation") {
  std::string out = emit_ws2s(P("A pi. A pi'. pi = pi' -> (pi . (* o)) + (pi . (o *)) = pi'"));
  CHECK(out.find("all2 X,X',XL,XR,XU:\n"
                 "  (ant(X) & ant(X') & ant(XL) & ant(XR) & ant(XU) & eqt(X,X') & \n"
                 "   leftMul(X,XL) & rightMul(X,XR) & uniont(XL,XR,XU)) => (eqt(XU,X'));\n") !=
        std::string::npos);
}

TEST_CASE("symmetry uses only ant and eqt") {
  std::string out = emit_ws2s(P("A a. A b. a = b -> b = a"));
  std::string sentence = out.substr(ws2s_library().size());
  CHECK(sentence == "\nall2 X,X':\n  (ant(X) & ant(X') & eqt(X,X')) => (eqt(X',X));\n");
}

TEST_CASE("longer paths get their own predicates") {
  std::string out = emit_ws2s(P("A a. E b. a = b . (o (* o))"));
  CHECK(out.find("pred sub10(var2 X, var2 X0) = \n  all1 x:x in X <=> x.1.0 in X0;\n") !=
        std::string::npos);
  CHECK(out.find("pathMul10(X',XM)") != std::string::npos);
}

TEST_CASE("deterministic") {
  FormulaPtr f = P("E a. A b. a = b . (o (* o)) \\/ a = b + a");
  CHECK(emit_ws2s(f) == emit_ws2s(f));
}

TEST_CASE("unsupported input") {
  CHECK_THROWS_AS(emit_ws2s(P("A a. a . ((* o) *) = a")), UnsupportedConstant);
  CHECK_THROWS_AS(emit_ws2s(P("A a. a | a = a")), UnsupportedSymbol);
  CHECK_THROWS_AS(emit_ws2s(P("A a. a <= a")), UnsupportedSymbol);
  CHECK_THROWS_AS(emit_ws2s(P("A a. a = (* o)")), UnsupportedSymbol);
  CHECK_THROWS_AS(emit_ws2s(P("A a. (* o) . a = a")), UnsupportedSymbol);
  CHECK_THROWS_AS(emit_ws2s(P("a = b")), FragmentError);
}

TEST_CASE("golden corpus") {
  std::filesystem::path dir = std::filesystem::path(TREESHARE_TEST_DATA) / "ws2s";
  int n = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".fml") continue;
    auto golden = entry.path();
    golden.replace_extension(".mona");
    CAPTURE(entry.path().string());
    REQUIRE(std::filesystem::exists(golden));
    CHECK(emit_ws2s(parse_formula(first_formula(entry.path()))) == slurp(golden));
    ++n;
  }
  CHECK(n >= 3);
}

}  // TEST_SUITE
