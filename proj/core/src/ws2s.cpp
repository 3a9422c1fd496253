#include "treeshare/ws2s.hpp"

#include <map>
#include <set>
#include <vector>

#include "treeshare/combined.hpp"
#include "treeshare/error.hpp"
#include "treeshare/transform.hpp"

namespace treeshare {

const std::string& ws2s_library() {
  static const std::string text = R"(ws2s;
pred ant(var2 Y) = 
 all1 x,y: (x~=y & x in Y & y in Y) => (~(x<=y) & ~(y<=x));
pred maxt(var2 X,var2 Y) = 
  X sub Y & ex1 r:all1 x: x in X =>
  (r <= x & all1 z: r <= z => ex1 x': x' in X & (z <= x' | x' <= z));
pred roott(var1 x,var2 X) = 
  all1 y: y in X & x <= y & all1 z:all1 y':y' in X & z <= y' => x <= z;
pred subt(var2 X, var2 Y) = 
  all1 x1:all2 X':(maxt(X',X) & roott(x1,X')) =>
  (ex2 Y':maxt(Y',Y) => roott(x1,Y'));
pred eqt(var2 X, var2 Y) = 
  subt(X,Y) & subt(Y,X);
pred singleton(var2 X) = 
  ex1 x: x in X & (all1 y: y in X => x = y);
pred uniont(var2 X,var2 Y,var2 Z) = 
  Z = X union Y & empty(X inter Y);
pred mint(var2 X) = 
  all2 Y: maxt(Y,X) => singleton(Y);
pred sub0(var2 X, var2 X0) = 
  all1 x:x in X <=> x.0 in X0;
pred sub1(var2 X, var2 X0) = 
  all1 x:x in X <=> x.1 in X0;
pred leftMul(var2 X,var2 X') = 
  all2 Y:(eqt(X,Y) & mint(Y)) => sub0(Y,X');
pred rightMul(var2 X,var2 X') = 
  all2 Y:(eqt(X,Y) & mint(Y)) => sub1(Y,X');
)";
  return text;
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

class Ws2sWriter {
 public:
  std::string term(const TermPtr& t, std::vector<std::string>& defs) {
    switch (t->kind) {
      case TermKind::Var:
        return names_.at(t->name);
      case TermKind::RMul: {
        std::string arg = term(t->lhs, defs);
        if (!is_unary(t->constant)) {
          throw UnsupportedConstant("multiplier " + t->constant.str() + " is not a unary tree");
        }
        std::string path = unembed(t->constant);
        if (path.empty()) return arg;
        if (path == "0") return define("XL", "leftMul(" + arg + ",", defs);
        if (path == "1") return define("XR", "rightMul(" + arg + ",", defs);
        paths_.insert(path);
        return define("XM", "pathMul" + path + "(" + arg + ",", defs);
      }
      case TermKind::Plus: {
        std::string a = term(t->lhs, defs);
        std::string b = term(t->rhs, defs);
        return define("XU", "uniont(" + a + "," + b + ",", defs);
      }
      case TermKind::Const:
        throw UnsupportedSymbol("constant " + t->constant.str() + " has no WS2S encoding");
      case TermKind::LMul:
        throw UnsupportedSymbol("left multiplication has no WS2S encoding");
      default:
        throw UnsupportedSymbol("only =, + and right multiplication have a WS2S encoding");
    }
  }

  std::string atom(const FormulaPtr& f, std::vector<std::string>& defs) {
    if (f->kind != FormulaKind::Eq) {
      throw UnsupportedSymbol("order atoms have no WS2S encoding");
    }
    std::string a = term(f->left_term, defs);
    std::string b = term(f->right_term, defs);
    return "eqt(" + a + "," + b + ")";
  }

  void bind(const std::string& var) {
    std::string name = "X";
    for (std::size_t i = 0; i < names_.size(); ++i) name += '\'';
    names_.emplace(var, name);
  }

  // Conjunction of equations, or false.
  static bool atoms_of(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind == FormulaKind::And) return atoms_of(f->lhs, out) && atoms_of(f->rhs, out);
    if (!is_atom(*f)) return false;
    out.push_back(f);
    return true;
  }

  std::string hoisted(const std::vector<std::string>& vars, const std::vector<FormulaPtr>& hyp,
                      const std::vector<FormulaPtr>& concl) {
    std::vector<std::string> defs;
    std::vector<std::string> hyp_text;
    std::vector<std::string> concl_text;
    for (const auto& a : hyp) hyp_text.push_back(atom(a, defs));
    for (const auto& a : concl) concl_text.push_back(atom(a, defs));
    std::vector<std::string> all;
    for (const auto& v : vars) all.push_back(names_.at(v));
    all.insert(all.end(), aux_.begin(), aux_.end());
    std::vector<std::string> first;
    for (const auto& v : all) first.push_back("ant(" + v + ")");
    first.insert(first.end(), hyp_text.begin(), hyp_text.end());
    std::string out = "all2 " + join(all, ",") + ":\n  (" + join(first, " & ");
    if (!defs.empty()) out += " & \n   " + join(defs, " & ");
    out += ") => (" + join(concl_text, " & ") + ");\n";
    return out;
  }

  std::string formula(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::True: return "true";
      case FormulaKind::False: return "false";
      case FormulaKind::Eq:
      case FormulaKind::Leq:
      case FormulaKind::Lt: {
        std::size_t first_aux = aux_.size();
        std::vector<std::string> defs;
        std::string body = atom(f, defs);
        if (defs.empty()) return body;
        std::vector<std::string> local(aux_.begin() + static_cast<std::ptrdiff_t>(first_aux), aux_.end());
        std::vector<std::string> parts;
        for (const auto& v : local) parts.push_back("ant(" + v + ")");
        parts.insert(parts.end(), defs.begin(), defs.end());
        parts.push_back(body);
        return "(ex2 " + join(local, ",") + ": " + join(parts, " & ") + ")";
      }
      case FormulaKind::Not: return "~(" + formula(f->lhs) + ")";
      case FormulaKind::And: return "(" + formula(f->lhs) + " & " + formula(f->rhs) + ")";
      case FormulaKind::Or: return "(" + formula(f->lhs) + " | " + formula(f->rhs) + ")";
      case FormulaKind::Implies: return "(" + formula(f->lhs) + " => " + formula(f->rhs) + ")";
      case FormulaKind::Iff: return "(" + formula(f->lhs) + " <=> " + formula(f->rhs) + ")";
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::vector<std::string> vars;
        FormulaPtr body = f;
        while (body->kind == f->kind) {
          if (body->domain != Domain::All) {
            throw UnsupportedSymbol("quantifiers over nontrivial trees have no WS2S encoding");
          }
          bind(body->var);
          vars.push_back(names_.at(body->var));
          body = body->lhs;
        }
        std::vector<std::string> ants;
        for (const auto& v : vars) ants.push_back("ant(" + v + ")");
        std::string guard = ants.size() == 1 ? ants[0] : "(" + join(ants, " & ") + ")";
        bool universal = f->kind == FormulaKind::Forall;
        return std::string(universal ? "all2 " : "ex2 ") + join(vars, ",") + ": " + guard +
               (universal ? " => (" : " & (") + formula(body) + ")";
      }
    }
    return {};
  }

  std::string sentence(const FormulaPtr& f) {
    std::vector<std::string> vars;
    FormulaPtr body = f;
    while (body->kind == FormulaKind::Forall && body->domain == Domain::All) {
      vars.push_back(body->var);
      body = body->lhs;
    }
    std::vector<FormulaPtr> hyp, concl;
    if (!vars.empty() && body->kind == FormulaKind::Implies && atoms_of(body->lhs, hyp) &&
        atoms_of(body->rhs, concl)) {
      for (const auto& v : vars) bind(v);
      return hoisted(vars, hyp, concl);
    }
    return formula(f) + ";\n";
  }

  std::string generated_predicates() const {
    std::string out;
    for (const std::string& w : paths_) {
      std::string succ;
      for (char c : w) succ += std::string(".") + c;
      out += "pred sub" + w + "(var2 X, var2 X0) = \n  all1 x:x in X <=> x" + succ + " in X0;\n";
      out += "pred pathMul" + w + "(var2 X,var2 X') = \n  all2 Y:(eqt(X,Y) & mint(Y)) => sub" + w +
             "(Y,X');\n";
    }
    return out;
  }

 private:
  std::string define(const std::string& base, const std::string& call, std::vector<std::string>& defs) {
    int n = ++counters_[base];
    std::string name = n == 1 ? base : base + std::to_string(n);
    aux_.push_back(name);
    defs.push_back(call + name + ")");
    return name;
  }

  std::map<std::string, std::string> names_;
  std::map<std::string, int> counters_;
  std::vector<std::string> aux_;
  std::set<std::string> paths_;
};

}  // namespace

std::string emit_ws2s(const FormulaPtr& f) {
  if (!is_closed(f)) throw FragmentError("emit_ws2s: formula has free variables");
  Ws2sWriter writer;
  std::string sentence = writer.sentence(rename_apart(f));
  return ws2s_library() + writer.generated_predicates() + "\n" + sentence;
}

}  // namespace treeshare
