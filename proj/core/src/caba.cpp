#include "treeshare/caba.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "treeshare/error.hpp"
#include "treeshare/flatten.hpp"
#include "treeshare/transform.hpp"

namespace treeshare {

RegionTable::RegionTable(std::vector<std::string> variables)
    : vars_(std::move(variables)), flags_(std::size_t{1} << vars_.size(), false) {}

bool RegionTable::consistent() const {
  return std::find(flags_.begin(), flags_.end(), true) != flags_.end();
}

std::string RegionTable::sign_vector(std::size_t region) const {
  std::string s(vars_.size(), '0');
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (region >> i & 1) s[i] = '1';
  }
  return s;
}

std::vector<std::size_t> RegionTable::nonempty_regions() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < flags_.size(); ++r) {
    if (flags_[r]) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
    return sign_vector(a) > sign_vector(b);
  });
  return out;
}

std::string RegionTable::str() const {
  std::string out;
  for (std::size_t r = 0; r < flags_.size(); ++r) {
    if (!out.empty()) out += ' ';
    out += (vars_.empty() ? std::string("-") : sign_vector(r)) + (flags_[r] ? ":ne" : ":e");
  }
  return out;
}

std::vector<TreeShare> comb_partition(std::size_t k) {
  std::vector<TreeShare> pieces;
  if (k == 0) return pieces;
  TreeShare white = TreeShare::white();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    TreeShare p = left_half();
    for (std::size_t j = 0; j < i; ++j) p = TreeShare::node(white, p);
    pieces.push_back(p);
  }
  TreeShare residue = TreeShare::black();
  for (std::size_t j = 0; j + 1 < k; ++j) residue = TreeShare::node(white, residue);
  pieces.push_back(residue);
  return pieces;
}

Assignment realize_regions(const RegionTable& rt) {
  std::vector<std::size_t> regions = rt.nonempty_regions();
  if (regions.empty()) throw Inconsistent("realize_regions: every region is empty");
  std::vector<TreeShare> pieces = comb_partition(regions.size());
  Assignment out;
  for (std::size_t i = 0; i < rt.variables().size(); ++i) {
    TreeShare value = TreeShare::white();
    for (std::size_t n = 0; n < regions.size(); ++n) {
      if (regions[n] >> i & 1) value = unite(value, pieces[n]);
    }
    out[rt.variables()[i]] = value;
  }
  return out;
}

namespace {

constexpr std::size_t kMaxGroupVariables = 6;

// Boolean view of a flattened term: variables are region bits.
struct BoolExpr {
  enum class Op { Var, True, False, Not, And, Or } op = Op::False;
  int var = 0;
  int a = -1;
  int b = -1;
};

struct CompiledAtom {
  int group = -1;  // -1 for ground atoms
  int lhs = 0;
  int rhs = 0;
};

class RegionGame {
 public:
  RegionGame(std::vector<QuantifierBinding> prefix, FormulaPtr matrix)
      : matrix_(std::move(matrix)) {
    build_groups(prefix);
    compile(matrix_);
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i].group >= 0) group_atoms_[atoms_[i].group].push_back(static_cast<int>(i));
    }
    block_start_ = steps_.size();
    while (block_start_ > 0 && steps_[block_start_ - 1].kind == steps_.back().kind) {
      --block_start_;
    }
    block_base_.assign(groups_.size(), 0);
    for (std::size_t g = 0; g < groups_.size(); ++g) block_base_[g] = groups_[g].size();
    for (std::size_t i = steps_.size(); i-- > block_start_;) {
      block_base_[steps_[i].group] = static_cast<std::size_t>(steps_[i].position);
    }
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i == 0 || steps_[i].kind != steps_[i - 1].kind) {
        blocks_.push_back({steps_[i].kind, std::vector<std::size_t>(groups_.size(), 0),
                           std::vector<std::size_t>(groups_.size(), 0)});
        for (std::size_t g = 0; g < groups_.size(); ++g) {
          blocks_.back().base[g] = i == 0 ? 0 : blocks_[blocks_.size() - 2].base[g] +
                                                    blocks_[blocks_.size() - 2].count[g];
        }
      }
      blocks_.back().count[steps_[i].group]++;
    }
    types_.resize(blocks_.size());
  }

  bool value() {
    if (steps_.empty()) return eval_matrix(matrix_, initial_state());
    std::vector<int> start;
    for (std::size_t g = 0; g < groups_.size(); ++g) start.push_back(type_of(g, 0, 1));
    return solve(0, start);
  }

  // For existential prefixes: the final per-group tables of a winning play.
  std::optional<std::vector<RegionTable>> witness() {
    std::vector<State> path;
    if (!play(0, initial_state(), &path)) return std::nullopt;
    const State& last = path.empty() ? initial_state() : path.back();
    std::vector<RegionTable> tables;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      RegionTable rt(groups_[g]);
      for (std::size_t r = 0; r < rt.regions(); ++r) {
        if (last[g] >> r & 1) rt.set_nonempty(r);
      }
      tables.push_back(std::move(rt));
    }
    return tables;
  }

 private:
  using State = std::vector<std::uint64_t>;
  using Verdicts = std::vector<bool>;

  struct Step {
    FormulaKind kind;
    int group;
    int position;  // index of the variable inside its group
  };

  struct StateHash {
    std::size_t operator()(const std::pair<std::size_t, State>& k) const noexcept {
      std::size_t h = k.first;
      for (auto w : k.second) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
      return h;
    }
  };

  State initial_state() const { return State(groups_.size(), 1); }

  void build_groups(const std::vector<QuantifierBinding>& prefix) {
    std::vector<std::set<std::string>> atom_vars;
    collect_atoms(matrix_, atom_vars);

    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> find = [&](const std::string& v) {
      std::string& p = parent[v];
      if (p.empty() || p == v) {
        p = v;
        return v;
      }
      p = find(p);
      return p;
    };
    for (const auto& vars : atom_vars) {
      for (const auto& v : vars) {
        find(v);
        parent[find(v)] = find(*vars.begin());
      }
    }

    std::map<std::string, int> group_of_root;
    for (const auto& q : prefix) {
      if (!parent.count(q.var)) continue;
      std::string root = find(q.var);
      auto [it, fresh] = group_of_root.emplace(root, static_cast<int>(groups_.size()));
      if (fresh) {
        groups_.emplace_back();
        group_atoms_.emplace_back();
      }
      auto& members = groups_[it->second];
      if (members.size() == kMaxGroupVariables) {
        throw Error("region game: more than " + std::to_string(kMaxGroupVariables) +
                    " interacting variables");
      }
      steps_.push_back({q.kind, it->second, static_cast<int>(members.size())});
      var_slot_[q.var] = {it->second, static_cast<int>(members.size())};
      members.push_back(q.var);
    }
  }

  static void collect_terms(const TermPtr& t, std::set<std::string>& out) { collect_variables(t, out); }

  void collect_atoms(const FormulaPtr& f, std::vector<std::set<std::string>>& out) {
    if (is_atom(*f)) {
      std::set<std::string> vars;
      collect_terms(f->left_term, vars);
      collect_terms(f->right_term, vars);
      if (!vars.empty()) out.push_back(std::move(vars));
      return;
    }
    if (f->lhs) collect_atoms(f->lhs, out);
    if (f->rhs) collect_atoms(f->rhs, out);
  }

  int compile_term(const TermPtr& t, int& group) {
    BoolExpr e;
    switch (t->kind) {
      case TermKind::Var: {
        auto [g, pos] = var_slot_.at(t->name);
        group = g;
        e.op = BoolExpr::Op::Var;
        e.var = pos;
        break;
      }
      case TermKind::Const:
        if (!t->constant.is_leaf()) throw FragmentError("region game: constant of positive height");
        e.op = t->constant.is_black() ? BoolExpr::Op::True : BoolExpr::Op::False;
        break;
      case TermKind::Complement:
        e.op = BoolExpr::Op::Not;
        e.a = compile_term(t->lhs, group);
        break;
      case TermKind::Union:
      case TermKind::Intersect:
        e.op = t->kind == TermKind::Union ? BoolExpr::Op::Or : BoolExpr::Op::And;
        e.a = compile_term(t->lhs, group);
        e.b = compile_term(t->rhs, group);
        break;
      default:
        throw FragmentError("region game: unexpected term " + std::to_string(static_cast<int>(t->kind)));
    }
    exprs_.push_back(e);
    return static_cast<int>(exprs_.size()) - 1;
  }

  void compile(const FormulaPtr& f) {
    if (is_atom(*f)) {
      if (f->kind != FormulaKind::Eq) throw FragmentError("region game: atom is not an equation");
      CompiledAtom a;
      a.lhs = compile_term(f->left_term, a.group);
      a.rhs = compile_term(f->right_term, a.group);
      atom_index_[f.get()] = static_cast<int>(atoms_.size());
      atoms_.push_back(a);
      return;
    }
    if (is_quantifier(*f)) throw FragmentError("region game: matrix is not quantifier-free");
    if (f->lhs) compile(f->lhs);
    if (f->rhs) compile(f->rhs);
  }

  bool eval_expr(int i, std::uint64_t region) const {
    const BoolExpr& e = exprs_[i];
    switch (e.op) {
      case BoolExpr::Op::Var: return region >> e.var & 1;
      case BoolExpr::Op::True: return true;
      case BoolExpr::Op::False: return false;
      case BoolExpr::Op::Not: return !eval_expr(e.a, region);
      case BoolExpr::Op::And: return eval_expr(e.a, region) && eval_expr(e.b, region);
      case BoolExpr::Op::Or: return eval_expr(e.a, region) || eval_expr(e.b, region);
    }
    return false;
  }

  bool eval_atom(const CompiledAtom& a, const State& s) const {
    if (a.group < 0) return eval_expr(a.lhs, 0) == eval_expr(a.rhs, 0);
    std::uint64_t mask = s[a.group];
    while (mask) {
      std::uint64_t r = static_cast<std::uint64_t>(std::countr_zero(mask));
      mask &= mask - 1;
      if (eval_expr(a.lhs, r) != eval_expr(a.rhs, r)) return false;
    }
    return true;
  }

  bool eval_matrix(const FormulaPtr& f, const State& s) const {
    switch (f->kind) {
      case FormulaKind::True: return true;
      case FormulaKind::False: return false;
      case FormulaKind::Eq: return eval_atom(atoms_[atom_index_.at(f.get())], s);
      case FormulaKind::Not: return !eval_matrix(f->lhs, s);
      case FormulaKind::And: return eval_matrix(f->lhs, s) && eval_matrix(f->rhs, s);
      case FormulaKind::Or: return eval_matrix(f->lhs, s) || eval_matrix(f->rhs, s);
      case FormulaKind::Implies: return !eval_matrix(f->lhs, s) || eval_matrix(f->rhs, s);
      case FormulaKind::Iff: return eval_matrix(f->lhs, s) == eval_matrix(f->rhs, s);
      default: throw FragmentError("region game: unexpected connective");
    }
  }

  // Every refinement of the table `mask` over `position` variables by one
  // more variable, keeping each nonempty region nonempty in some half.
  static std::vector<std::uint64_t> refinements(std::uint64_t mask, int position) {
    std::vector<std::uint64_t> regions;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      regions.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
    }
    std::vector<std::uint64_t> out{0};
    for (std::uint64_t r : regions) {
      std::uint64_t out_half = std::uint64_t{1} << r;
      std::uint64_t in_half = std::uint64_t{1} << (r | (std::uint64_t{1} << position));
      std::vector<std::uint64_t> next;
      next.reserve(out.size() * 3);
      for (std::uint64_t base : out) {
        next.push_back(base | out_half);
        next.push_back(base | in_half);
        next.push_back(base | out_half | in_half);
      }
      out = std::move(next);
    }
    return out;
  }

  // Atoms of group g that hold on one region.
  Verdicts region_verdicts(std::size_t g, std::uint64_t region) const {
    Verdicts out;
    for (int a : group_atoms_[g]) {
      out.push_back(eval_expr(atoms_[a].lhs, region) == eval_expr(atoms_[a].rhs, region));
    }
    return out;
  }

  static Verdicts meet(const Verdicts& a, const Verdicts& b) {
    Verdicts out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
  }

  // Final tables reachable from `mask` once the group's block variables are
  // bound, one representative per distinct set of satisfied atoms. Each
  // nonempty region keeps a nonempty set of its extensions, so the atoms
  // satisfied by a final table are the meet over the chosen extensions.
  const std::map<Verdicts, std::uint64_t>& outcomes(std::size_t g, std::uint64_t mask) {
    auto key = std::make_pair(g, mask);
    auto hit = outcome_memo_.find(key);
    if (hit != outcome_memo_.end()) return hit->second;
    const std::size_t base = block_base_[g];
    const std::size_t extensions = std::size_t{1} << (groups_[g].size() - base);
    std::map<Verdicts, std::uint64_t> acc{{Verdicts(group_atoms_[g].size(), true), 0}};
    for (std::uint64_t m = mask; m; m &= m - 1) {
      std::uint64_t r = static_cast<std::uint64_t>(std::countr_zero(m));
      std::map<Verdicts, std::uint64_t> closure;
      for (std::size_t x = 0; x < extensions; ++x) {
        std::uint64_t region = r | (static_cast<std::uint64_t>(x) << base);
        Verdicts v = region_verdicts(g, region);
        std::uint64_t bit = std::uint64_t{1} << region;
        std::map<Verdicts, std::uint64_t> grown = closure;
        grown.emplace(v, bit);
        for (const auto& [w, rep] : closure) grown.emplace(meet(v, w), rep | bit);
        closure = std::move(grown);
      }
      std::map<Verdicts, std::uint64_t> next;
      for (const auto& [a, ra] : acc) {
        for (const auto& [b, rb] : closure) next.emplace(meet(a, b), ra | rb);
      }
      acc = std::move(next);
    }
    return outcome_memo_.emplace(key, std::move(acc)).first->second;
  }

  // ── block abstraction ──
  //
  // Within a block of like quantifiers the groups choose independently, and
  // a group's table matters to the rest of the game only through the tables
  // it can still reach. The type of a table before block b is the set of
  // types it can reach before block b + 1; before the last block it is the
  // set of reachable atom verdicts. Equal types are interned to one id.

  struct Block {
    FormulaKind kind;
    std::vector<std::size_t> base;   // group variables bound before the block
    std::vector<std::size_t> count;  // group variables bound inside it
  };

  int intern_verdicts(const Verdicts& v) {
    auto [it, fresh] = verdict_ids_.emplace(v, static_cast<int>(verdicts_.size()));
    if (fresh) verdicts_.push_back(v);
    return it->second;
  }

  int intern_type(std::size_t b, std::vector<int> children) {
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    auto& level = types_[b];
    auto [it, fresh] = level.ids.emplace(children, static_cast<int>(level.children.size()));
    if (fresh) level.children.push_back(std::move(children));
    return it->second;
  }

  // Tables over base + count variables that refine `mask`.
  std::vector<std::uint64_t> extensions_of(std::uint64_t mask, std::size_t base, std::size_t count) {
    std::vector<std::uint64_t> out{0};
    if (count == 0) return {mask};
    const std::size_t width = std::size_t{1} << count;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      std::uint64_t r = static_cast<std::uint64_t>(std::countr_zero(m));
      std::vector<std::uint64_t> next;
      for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << width); ++subset) {
        std::uint64_t bits = 0;
        for (std::size_t x = 0; x < width; ++x) {
          if (subset >> x & 1) bits |= std::uint64_t{1} << (r | (static_cast<std::uint64_t>(x) << base));
        }
        for (std::uint64_t o : out) next.push_back(o | bits);
      }
      out = std::move(next);
    }
    return out;
  }

  int type_of(std::size_t g, std::size_t b, std::uint64_t mask) {
    auto key = std::make_tuple(g, b, mask);
    auto hit = type_memo_.find(key);
    if (hit != type_memo_.end()) return hit->second;
    std::vector<int> children;
    if (b + 1 == blocks_.size()) {
      for (const auto& [v, rep] : outcomes(g, mask)) children.push_back(intern_verdicts(v));
    } else {
      for (std::uint64_t next : extensions_of(mask, blocks_[b].base[g], blocks_[b].count[g])) {
        children.push_back(type_of(g, b + 1, next));
      }
    }
    int id = intern_type(b, std::move(children));
    type_memo_.emplace(key, id);
    return id;
  }

  bool eval_verdicts(const FormulaPtr& f, const std::vector<int>& chosen) const {
    switch (f->kind) {
      case FormulaKind::True: return true;
      case FormulaKind::False: return false;
      case FormulaKind::Eq: {
        const int i = atom_index_.at(f.get());
        const CompiledAtom& a = atoms_[i];
        if (a.group < 0) return eval_expr(a.lhs, 0) == eval_expr(a.rhs, 0);
        const auto& members = group_atoms_[a.group];
        auto pos = std::find(members.begin(), members.end(), i) - members.begin();
        return verdicts_[chosen[a.group]][pos];
      }
      case FormulaKind::Not: return !eval_verdicts(f->lhs, chosen);
      case FormulaKind::And: return eval_verdicts(f->lhs, chosen) && eval_verdicts(f->rhs, chosen);
      case FormulaKind::Or: return eval_verdicts(f->lhs, chosen) || eval_verdicts(f->rhs, chosen);
      case FormulaKind::Implies: return !eval_verdicts(f->lhs, chosen) || eval_verdicts(f->rhs, chosen);
      case FormulaKind::Iff: return eval_verdicts(f->lhs, chosen) == eval_verdicts(f->rhs, chosen);
      default: throw FragmentError("region game: unexpected connective");
    }
  }

  bool solve(std::size_t b, const std::vector<int>& ids) {
    auto key = std::make_pair(b, ids);
    auto hit = solve_memo_.find(key);
    if (hit != solve_memo_.end()) return hit->second;
    const bool existential = blocks_[b].kind == FormulaKind::Exists;
    std::vector<int> chosen(ids.size());
    std::function<bool(std::size_t)> pick = [&](std::size_t g) {
      if (g == ids.size()) {
        bool v = b + 1 == blocks_.size() ? eval_verdicts(matrix_, chosen) : solve(b + 1, chosen);
        return v == existential;
      }
      for (int c : types_[b].children[ids[g]]) {
        chosen[g] = c;
        if (pick(g + 1)) return true;
      }
      return false;
    };
    bool result = pick(0) == existential;
    solve_memo_.emplace(key, result);
    return result;
  }

  // The trailing block of like quantifiers, solved group by group.
  bool play_block(const State& state, std::vector<State>* path) {
    bool existential = steps_.back().kind == FormulaKind::Exists;
    std::vector<std::vector<std::uint64_t>> choices(groups_.size());
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (const auto& [v, rep] : outcomes(g, state[g])) choices[g].push_back(rep);
    }
    State final_state(groups_.size(), 0);
    std::function<bool(std::size_t)> pick = [&](std::size_t g) {
      if (g == groups_.size()) return eval_matrix(matrix_, final_state) == existential;
      for (std::uint64_t rep : choices[g]) {
        final_state[g] = rep;
        if (pick(g + 1)) return true;
      }
      return false;
    };
    bool found = pick(0);
    if (found && existential && path) path->push_back(final_state);
    return found == existential;
  }

  bool play(std::size_t step, const State& state, std::vector<State>* path) {
    if (step == steps_.size()) return eval_matrix(matrix_, state);
    if (step == block_start_) return play_block(state, path);
    auto key = std::make_pair(step, state);
    auto hit = memo_.find(key);
    if (hit != memo_.end() && (!path || !hit->second)) return hit->second;
    const Step& st = steps_[step];
    bool existential = st.kind == FormulaKind::Exists;
    bool result = !existential;
    for (std::uint64_t next_mask : refinements(state[st.group], st.position)) {
      State next = state;
      next[st.group] = next_mask;
      bool v;
      if (path) {
        path->push_back(next);
        v = play(step + 1, next, path);
        if (!v) path->pop_back();
      } else {
        v = play(step + 1, next, nullptr);
      }
      if (v == existential) {
        result = v;
        break;
      }
    }
    memo_[key] = result;
    return result;
  }

  FormulaPtr matrix_;
  std::vector<std::vector<std::string>> groups_;
  std::vector<Step> steps_;
  std::map<std::string, std::pair<int, int>> var_slot_;
  std::vector<BoolExpr> exprs_;
  std::vector<CompiledAtom> atoms_;
  std::unordered_map<const Formula*, int> atom_index_;
  std::unordered_map<std::pair<std::size_t, State>, bool, StateHash> memo_;
  std::vector<std::vector<int>> group_atoms_;
  std::size_t block_start_ = 0;
  std::vector<std::size_t> block_base_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::map<Verdicts, std::uint64_t>> outcome_memo_;

  struct TypeLevel {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> children;
  };
  std::vector<Block> blocks_;
  std::vector<TypeLevel> types_;
  std::map<Verdicts, int> verdict_ids_;
  std::vector<Verdicts> verdicts_;
  std::map<std::tuple<std::size_t, std::size_t, std::uint64_t>, int> type_memo_;
  std::map<std::pair<std::size_t, std::vector<int>>, bool> solve_memo_;
};

void require_ba(const FormulaPtr& f) {
  if (classify(f) != FragmentClass::BA) {
    throw FragmentError("the region game decides the Boolean fragment only (got " +
                        to_string(classify(f)) + ")");
  }
}

// desugar, rename apart, prenex; the result keeps the source constants.
FormulaPtr normalize(const FormulaPtr& f) { return prenex(rename_apart(desugar(f))); }

}  // namespace

bool decide(const FormulaPtr& f) {
  require_ba(f);
  if (!is_closed(f)) throw DomainError("decide: formula has free variables");
  FormulaPtr flat = flatten_formula(normalize(f));
  FormulaPtr matrix;
  auto prefix = prefix_of(flat, &matrix);
  return RegionGame(prefix, matrix).value();
}

std::optional<Assignment> sat_model(const FormulaPtr& f) {
  require_ba(f);
  FormulaPtr g = normalize(f);
  FormulaPtr source_matrix;
  auto source_prefix = prefix_of(g, &source_matrix);
  for (const auto& q : source_prefix) {
    if (q.kind != FormulaKind::Exists) {
      throw FragmentError("sat_model: formula is not existential");
    }
  }
  std::vector<QuantifierBinding> closed_prefix;
  for (const auto& v : free_variables(g)) closed_prefix.push_back({FormulaKind::Exists, v});
  closed_prefix.insert(closed_prefix.end(), source_prefix.begin(), source_prefix.end());
  FormulaPtr closed = with_prefix(closed_prefix, source_matrix);

  Shape shape = shape_of_formula(closed);
  FormulaPtr flat = flatten_formula(closed);
  FormulaPtr flat_matrix;
  auto flat_prefix = prefix_of(flat, &flat_matrix);
  auto tables = RegionGame(flat_prefix, flat_matrix).witness();
  if (!tables) return std::nullopt;

  Assignment components;
  for (const auto& rt : *tables) {
    for (auto& [name, value] : realize_regions(rt)) components[name] = value;
  }
  Assignment model;
  auto names = component_names(closed, shape);
  for (const auto& q : closed_prefix) {
    auto it = std::find_if(names.begin(), names.end(),
                           [&](const auto& entry) { return entry.first == q.var; });
    std::vector<TreeShare> parts;
    for (const auto& c : it->second) {
      auto v = components.find(c);
      parts.push_back(v == components.end() ? TreeShare::white() : v->second);
    }
    model[q.var] = assemble(parts, shape);
  }
  if (!holds(source_matrix, model)) {
    throw Error("sat_model: extracted model fails verification: " + to_string(model));
  }
  return model;
}

}  // namespace treeshare
