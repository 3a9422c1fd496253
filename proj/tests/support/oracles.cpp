#include "oracles.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

Cells unfold(const TreeShare& t, int depth) {
  Cells out;
  out.depth = depth;
  out.bits.assign(std::size_t{1} << depth, false);
  std::function<void(const TreeShare&, int, std::size_t)> fill = [&](const TreeShare& u, int d,
                                                                     std::size_t prefix) {
    if (u.is_leaf()) {
      std::size_t span = std::size_t{1} << (depth - d);
      for (std::size_t k = 0; k < span; ++k) out.bits[prefix * span + k] = u.is_black();
      return;
    }
    if (d == depth) throw std::logic_error("tree deeper than unfold depth");
    fill(u.left(), d + 1, prefix * 2);
    fill(u.right(), d + 1, prefix * 2 + 1);
  };
  fill(t, 0, 0);
  return out;
}

Cells widen(const Cells& c, int depth) {
  Cells out;
  out.depth = depth;
  std::size_t span = std::size_t{1} << (depth - c.depth);
  for (bool b : c.bits) out.bits.insert(out.bits.end(), span, b);
  return out;
}

namespace {

template <class Op>
Cells zip(const Cells& a, const Cells& b, Op op) {
  int d = std::max(a.depth, b.depth);
  Cells x = widen(a, d), y = widen(b, d);
  Cells out{d, {}};
  for (std::size_t i = 0; i < x.bits.size(); ++i) out.bits.push_back(op(x.bits[i], y.bits[i]));
  return out;
}

}  // namespace

Cells join(const Cells& a, const Cells& b) { return zip(a, b, [](bool x, bool y) { return x || y; }); }
Cells meet(const Cells& a, const Cells& b) { return zip(a, b, [](bool x, bool y) { return x && y; }); }

Cells negate(const Cells& a) {
  Cells out = a;
  out.bits.flip();
  return out;
}

std::optional<Cells> add(const Cells& a, const Cells& b) {
  Cells overlap = meet(a, b);
  for (bool bit : overlap.bits) {
    if (bit) return std::nullopt;
  }
  return join(a, b);
}

Cells graft(const TreeShare& a, const Cells& b) {
  const int depth = a.height() + b.depth;
  Cells out{depth, std::vector<bool>(std::size_t{1} << depth, false)};
  std::function<void(const TreeShare&, int, std::size_t)> fill = [&](const TreeShare& u, int d,
                                                                     std::size_t prefix) {
    if (u.is_leaf()) {
      if (!u.is_black()) return;
      Cells piece = widen(b, depth - d);
      std::size_t span = piece.bits.size();
      for (std::size_t k = 0; k < span; ++k) out.bits[prefix * span + k] = piece.bits[k];
      return;
    }
    fill(u.left(), d + 1, prefix * 2);
    fill(u.right(), d + 1, prefix * 2 + 1);
  };
  fill(a, 0, 0);
  return out;
}

bool below(const Cells& a, const Cells& b) { return join(a, b) == widen(b, std::max(a.depth, b.depth)); }

bool same(const TreeShare& t, const Cells& c) {
  if (t.height() > c.depth) return false;
  return unfold(t, c.depth) == c;
}

std::vector<Cells> all_cells(int depth) {
  std::size_t n = std::size_t{1} << depth;
  std::vector<Cells> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Cells c{depth, std::vector<bool>(n)};
    for (std::size_t i = 0; i < n; ++i) c.bits[i] = (mask >> (n - 1 - i)) & 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t brute_force_canonical_count(int h) {
  // Raw trees as (is leaf, colour, children); only counts are needed, so
  // track for each raw tree whether it is canonical and whether it is a leaf.
  struct Raw {
    bool leaf;
    bool black;
    bool canonical;
  };
  std::vector<Raw> level{{true, false, true}, {true, true, true}};
  for (int d = 1; d <= h; ++d) {
    std::vector<Raw> next{{true, false, true}, {true, true, true}};
    for (const Raw& l : level) {
      for (const Raw& r : level) {
        bool folds = l.leaf && r.leaf && l.black == r.black;
        next.push_back({false, false, l.canonical && r.canonical && !folds});
      }
    }
    level = std::move(next);
  }
  std::size_t count = 0;
  for (const Raw& r : level) count += r.canonical;
  return count;
}

FactorOracle::FactorOracle(int h) {
  std::vector<TreeShare> plus;
  for (const TreeShare& t : treeshare::enumerate(h)) {
    if (!t.is_leaf()) plus.push_back(t);
  }
  for (const TreeShare& s : plus) {
    for (const TreeShare& r : plus) {
      TreeShare p = treeshare::bowtie(s, r);
      if (p.height() <= h) splits_[p.str()].emplace_back(s, r);
    }
  }
}

bool FactorOracle::prime(const TreeShare& t) const { return !splits_.count(t.str()); }

std::vector<std::vector<TreeShare>> FactorOracle::factorizations(const TreeShare& t) const {
  if (prime(t)) return {{t}};
  std::set<std::string> seen;
  std::vector<std::vector<TreeShare>> out;
  for (const auto& [s, r] : splits_.at(t.str())) {
    if (!prime(r)) continue;
    for (auto seq : factorizations(s)) {
      seq.push_back(r);
      std::string key;
      for (const auto& p : seq) key += p.str() + ";";
      if (seen.insert(key).second) out.push_back(std::move(seq));
    }
  }
  return out;
}

namespace {

using treeshare::words::FormulaKind;
using treeshare::words::FormulaPtr;
using treeshare::words::TermKind;
using treeshare::words::TermPtr;

std::string value(const TermPtr& t, const std::map<std::string, std::string>& env) {
  switch (t->kind) {
    case TermKind::Var: return env.at(t->text);
    case TermKind::Const: return t->text;
    case TermKind::Prefix: return t->text + value(t->arg, env);
    case TermKind::Suffix: return value(t->arg, env) + t->text;
  }
  return {};
}

bool truth(const FormulaPtr& f, const std::vector<std::string>& dom,
           std::map<std::string, std::string>& env) {
  switch (f->kind) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Eq: return value(f->left_term, env) == value(f->right_term, env);
    case FormulaKind::PrefixOf: {
      std::string a = value(f->left_term, env), b = value(f->right_term, env);
      return b.compare(0, a.size(), a) == 0 && a.size() <= b.size();
    }
    case FormulaKind::Not: return !truth(f->lhs, dom, env);
    case FormulaKind::And: return truth(f->lhs, dom, env) && truth(f->rhs, dom, env);
    case FormulaKind::Or: return truth(f->lhs, dom, env) || truth(f->rhs, dom, env);
    case FormulaKind::Implies: return !truth(f->lhs, dom, env) || truth(f->rhs, dom, env);
    case FormulaKind::Iff: return truth(f->lhs, dom, env) == truth(f->rhs, dom, env);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool any = false, all = true;
      auto saved = env;
      for (const auto& w : dom) {
        env[f->var] = w;
        bool v = truth(f->lhs, dom, env);
        any = any || v;
        all = all && v;
      }
      env = saved;
      return f->kind == FormulaKind::Exists ? any : all;
    }
  }
  return false;
}

}  // namespace

bool word_truth(const FormulaPtr& f, int max_length) {
  std::vector<std::string> dom{""};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    std::size_t end = dom.size();
    for (std::size_t i = begin; i < end; ++i) {
      dom.push_back(dom[i] + "0");
      dom.push_back(dom[i] + "1");
    }
    begin = end;
  }
  std::map<std::string, std::string> env;
  return truth(f, dom, env);
}

}  // namespace oracle
