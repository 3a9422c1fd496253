#include "treeshare_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeshare/caba.hpp"
#include "treeshare/combined.hpp"
#include "treeshare/error.hpp"
#include "treeshare/evaluate.hpp"
#include "treeshare/flatten.hpp"
#include "treeshare/generator.hpp"
#include "treeshare/parser.hpp"
#include "treeshare/transform.hpp"
#include "treeshare/word_bridge.hpp"
#include "treeshare/ws2s.hpp"

namespace treeshare::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_content(const std::string& line) { return !line.empty() && line[0] != '#'; }

// A positional argument naming a file stands for its first formula line.
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (is_content(line)) return line;
  }
  throw Error("no formula in " + arg);
}

std::vector<std::string> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (is_content(line)) out.push_back(line);
  }
  return out;
}

// ── query records ──────────────────────────────────────────────────────────

struct Record {
  std::string formula;
  std::string fragment;
  std::string verdict;
  bool sound = false;
  std::optional<Assignment> witness;
  double ms = 0;
  std::string error;
};

int exit_code(const Record& r) {
  if (!r.error.empty()) return kUsage;
  if (r.verdict == "true" || r.verdict == "sat") return r.sound ? kTrue : kBounded;
  if (r.verdict == "false" || r.verdict == "unsat") return r.sound ? kFalse : kBounded;
  return kBounded;
}

json to_json(const Record& r) {
  json j;
  j["formula"] = r.formula;
  if (!r.error.empty()) {
    j["verdict"] = "error";
    j["error"] = r.error;
    return j;
  }
  j["fragment"] = r.fragment;
  j["verdict"] = r.verdict;
  j["sound"] = r.sound;
  if (r.witness) {
    json w = json::object();
    for (const auto& [k, v] : *r.witness) w[k] = v.str();
    j["witness"] = w;
  }
  j["ms"] = r.ms;
  return j;
}

void print_text(const Record& r, std::ostream& out) {
  if (!r.error.empty()) {
    out << "error: " << r.error << "\n";
    return;
  }
  out << r.verdict << "\n";
  if (r.witness && !r.witness->empty()) out << "witness: " << to_string(*r.witness) << "\n";
}

void fill_bounded(Record& r, const FormulaPtr& f, int height) {
  try {
    BoundedVerdict v = check_bounded(f, height);
    r.sound = v.sound();
    if (v.kind == VerdictKind::TrueUpTo) {
      r.verdict = "true-up-to-" + std::to_string(height);
    } else {
      r.verdict = v.value() ? "true" : "false";
    }
    if (!v.witness.empty()) r.witness = v.witness;
  } catch (const BudgetExceeded& e) {
    r.verdict = "unknown";
    r.sound = false;
  }
}

// BA formulas go to the decision procedure, everything else is checked up
// to `height`.
Record answer(const std::string& text, int height, bool timed) {
  Record r;
  r.formula = text;
  auto start = std::chrono::steady_clock::now();
  try {
    FormulaPtr f = parse_formula(text);
    FragmentClass c = classify(f);
    r.fragment = to_string(c);
    if (c == FragmentClass::BA) {
      r.sound = true;
      if (is_closed(f)) {
        r.verdict = decide(f) ? "true" : "false";
      } else {
        auto model = sat_model(f);
        r.verdict = model ? "sat" : "unsat";
        if (model) r.witness = *model;
      }
    } else {
      if (!is_closed(f)) throw DomainError("bounded checking needs a sentence");
      fill_bounded(r, f, height);
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  if (timed) {
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

// ── subcommands ────────────────────────────────────────────────────────────

FormulaPtr multiplicative_input(const std::string& text) {
  FormulaPtr f = parse_formula(text);
  if (classify(f) != FragmentClass::MULT) {
    throw FragmentError("expected a multiplicative formula, got " + to_string(classify(f)));
  }
  bool all_nontrivial = true;
  std::function<void(const FormulaPtr&)> scan = [&](const FormulaPtr& g) {
    if (!g || is_atom(*g)) return;
    if (is_quantifier(*g) && g->domain == Domain::All) all_nontrivial = false;
    scan(g->lhs);
    scan(g->rhs);
  };
  scan(f);
  return all_nontrivial ? f : strip_trivial(f);
}

int cmd_canon(const std::string& input, bool raw, std::ostream& out) {
  RawTree t = parse_raw_tree(input);
  if (!raw && !is_canonical(t)) {
    throw ParseError(0, "a canonical tree (pass --raw to fold " + t.str() + ")");
  }
  out << canonicalize(t).str() << "\n";
  return kTrue;
}

int cmd_factor(const std::string& input, std::ostream& out) {
  Factorization fs = factorize(canonicalize(parse_raw_tree(input)));
  for (std::size_t i = 0; i < fs.size(); ++i) out << (i ? " . " : "") << fs[i].str();
  out << "\n";
  return kTrue;
}

int cmd_encode(const std::string& input, std::ostream& out) {
  FormulaPtr f = multiplicative_input(input);
  EncodingTable table = build_encoding(f);
  out << table.str();
  out << words::print(translate(f, table)) << "\n";
  return kTrue;
}

int cmd_to_smt(const std::string& input, bool word_input, std::ostream& out) {
  words::FormulaPtr g;
  if (word_input) {
    g = words::parse_formula(input);
  } else {
    FormulaPtr f = multiplicative_input(input);
    g = translate(f, build_encoding(f));
  }
  out << emit_smtlib(g);
  return kTrue;
}

int cmd_bounded(const std::string& text, const FormulaPtr& f, int height, bool as_json,
                std::ostream& out) {
  Record r;
  r.formula = text;
  r.fragment = to_string(classify(f));
  auto start = std::chrono::steady_clock::now();
  fill_bounded(r, f, height);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (as_json) out << to_json(r).dump() << "\n";
  else print_text(r, out);
  return exit_code(r);
}

struct BenchOptions {
  std::string corpus;
  std::size_t random = 0;
  std::optional<std::uint64_t> seed;
  std::string fragment = "BA";
  int depth = 3;
  int constant_height = 2;
  int vars = 3;
  int height = 2;
  bool json = false;
  bool no_timing = false;
};

FragmentClass fragment_named(const std::string& name) {
  for (FragmentClass c : {FragmentClass::BA, FragmentClass::MULT, FragmentClass::COMBINED}) {
    if (to_string(c) == name) return c;
  }
  throw Error("unknown fragment '" + name + "' (BA, MULT or COMBINED)");
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  std::vector<std::string> lines;
  if (o.random > 0) {
    if (!o.seed) throw Error("--random needs --seed");
    GeneratorOptions g;
    g.fragment = fragment_named(o.fragment);
    g.depth = o.depth;
    g.constant_height = o.constant_height;
    g.variables = o.vars;
    g.seed = *o.seed;
    FormulaGenerator gen(g);
    for (std::size_t i = 0; i < o.random; ++i) lines.push_back(print(gen.next()));
  } else if (!o.corpus.empty()) {
    lines = read_corpus(o.corpus);
  } else {
    throw Error("bench needs a corpus file or --random");
  }

  std::map<std::string, std::map<std::string, std::size_t>> counts;
  for (const std::string& line : lines) {
    Record r = answer(line, o.height, !o.no_timing);
    counts[r.error.empty() ? r.fragment : "-"][r.error.empty() ? r.verdict : "error"]++;
    if (o.json) {
      out << to_json(r).dump() << "\n";
    } else if (r.error.empty()) {
      out << r.verdict << (r.sound ? "" : "?") << "\t" << r.fragment << "\t" << r.formula << "\n";
    } else {
      out << "error\t-\t" << r.formula << "\t" << r.error << "\n";
    }
  }

  if (o.json) {
    json summary = json::object();
    for (const auto& [fragment, verdicts] : counts) {
      for (const auto& [verdict, n] : verdicts) summary[fragment][verdict] = n;
    }
    out << json{{"records", lines.size()}, {"summary", summary}}.dump() << "\n";
  } else {
    out << "records: " << lines.size() << "\n";
    for (const auto& [fragment, verdicts] : counts) {
      out << fragment << ":";
      for (const auto& [verdict, n] : verdicts) out << " " << verdict << "=" << n;
      out << "\n";
    }
  }
  return kTrue;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tree-share formulas: decision, flattening, encodings and bounded checks",
               "treeshare"};
  app.require_subcommand(1);

  std::string input;
  bool raw = false;
  bool as_json = false;
  bool word_input = false;
  int height = 2;
  std::optional<int> reduce_height;
  BenchOptions bench;
  std::function<int()> action;

  auto add_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", input, what)->required();
  };

  auto* canon = app.add_subcommand("canon", "Print the canonical form of a tree");
  add_input(canon, "tree literal");
  canon->add_flag("--raw", raw, "Fold non-canonical input instead of rejecting it");
  canon->callback([&] { action = [&] { return cmd_canon(read_input(input), raw, out); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a variable-free formula");
  add_input(eval, "formula or file");
  eval->callback([&] {
    action = [&] {
      bool v = eval_ground(parse_formula(read_input(input)));
      out << (v ? "true" : "false") << "\n";
      return v ? kTrue : kFalse;
    };
  });

  auto* solve = app.add_subcommand("solve", "Decide a Boolean/additive sentence");
  add_input(solve, "formula or file");
  solve->add_flag("--json", as_json, "Emit a JSON record");
  solve->callback([&] {
    action = [&] {
      std::string text = read_input(input);
      FormulaPtr f = parse_formula(text);
      auto start = std::chrono::steady_clock::now();
      Record r;
      r.formula = text;
      r.fragment = to_string(classify(f));
      r.verdict = decide(f) ? "true" : "false";
      r.sound = true;
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (as_json) out << to_json(r).dump() << "\n";
      else print_text(r, out);
      return exit_code(r);
    };
  });

  auto* sat = app.add_subcommand("sat", "Find a model of an existential Boolean/additive formula");
  add_input(sat, "formula or file");
  sat->add_flag("--json", as_json, "Emit a JSON record");
  sat->callback([&] {
    action = [&] {
      std::string text = read_input(input);
      FormulaPtr f = parse_formula(text);
      auto start = std::chrono::steady_clock::now();
      Record r;
      r.formula = text;
      r.fragment = to_string(classify(f));
      auto model = sat_model(f);
      r.verdict = model ? "sat" : "unsat";
      r.sound = true;
      if (model) r.witness = *model;
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (as_json) {
        out << to_json(r).dump() << "\n";
      } else {
        out << r.verdict << "\n";
        if (model) {
          for (const auto& [k, v] : *model) out << k << " = " << v.str() << "\n";
        }
      }
      return exit_code(r);
    };
  });

  auto* flat = app.add_subcommand("flatten", "Flatten a Boolean formula to •/∘ constants");
  add_input(flat, "formula or file");
  flat->callback([&] {
    action = [&] {
      FormulaPtr f = parse_formula(read_input(input));
      out << print(flatten_formula(f)) << "\n";
      return kTrue;
    };
  });

  auto* factor = app.add_subcommand("factor", "Factor a tree into ⋈-primes");
  add_input(factor, "tree literal");
  factor->callback([&] { action = [&] { return cmd_factor(read_input(input), out); }; });

  auto* encode = app.add_subcommand("encode", "Translate a multiplicative formula into a word formula");
  add_input(encode, "formula or file");
  encode->callback([&] { action = [&] { return cmd_encode(read_input(input), out); }; });

  auto* smt = app.add_subcommand("to-smt", "Emit an SMT-LIB string script");
  add_input(smt, "formula or file");
  smt->add_flag("--words", word_input, "Input is already a word formula");
  smt->callback([&] { action = [&] { return cmd_to_smt(read_input(input), word_input, out); }; });

  auto* mona = app.add_subcommand("to-mona", "Emit a WS2S (MONA) unit");
  add_input(mona, "formula or file");
  mona->callback([&] {
    action = [&] {
      out << emit_ws2s(parse_formula(read_input(input)));
      return kTrue;
    };
  });

  auto* check = app.add_subcommand("check", "Evaluate a sentence over trees of bounded height");
  add_input(check, "formula or file");
  check->add_option("--height", height, "Height bound")->capture_default_str();
  check->add_flag("--json", as_json, "Emit a JSON record");
  check->callback([&] {
    action = [&] {
      std::string text = read_input(input);
      return cmd_bounded(text, parse_formula(text), height, as_json, out);
    };
  });

  auto* reduce = app.add_subcommand("reduce-string", "Rewrite a binary-string sentence over unary trees");
  add_input(reduce, "word sentence or file");
  reduce->add_option("--height", reduce_height, "Also check the result up to this height");
  reduce->add_flag("--json", as_json, "Emit a JSON record (with --height)");
  reduce->callback([&] {
    action = [&] {
      FormulaPtr f = reduce_string_sentence(words::parse_formula(read_input(input)));
      std::string text = print(f);
      if (!reduce_height) {
        out << text << "\n";
        return kTrue;
      }
      if (!as_json) out << text << "\n";
      return cmd_bounded(text, f, *reduce_height, as_json, out);
    };
  });

  auto* bench_cmd = app.add_subcommand("bench", "Answer every formula of a corpus");
  bench_cmd->add_option("corpus", bench.corpus, "Corpus file, one formula per line");
  bench_cmd->add_option("--random", bench.random, "Generate this many formulas instead");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--fragment", bench.fragment, "BA, MULT or COMBINED")->capture_default_str();
  bench_cmd->add_option("--depth", bench.depth, "Generator nesting depth")->capture_default_str();
  bench_cmd->add_option("--const-height", bench.constant_height, "Constant height")
      ->capture_default_str();
  bench_cmd->add_option("--vars", bench.vars, "Variables in scope")->capture_default_str();
  bench_cmd->add_option("--height", bench.height, "Height bound for bounded checks")
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench.json, "One JSON record per line");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Report 0 ms for reproducible output");
  bench_cmd->callback([&] { action = [&] { return cmd_bench(bench, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "treeshare: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace treeshare::cli
