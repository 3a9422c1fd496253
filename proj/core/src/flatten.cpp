#include "treeshare/flatten.hpp"

#include <map>
#include <set>

#include "treeshare/error.hpp"

namespace treeshare {

Shape Shape::leaf() { return Shape(); }

Shape Shape::node(Shape left, Shape right) {
  Shape s;
  s.children_ = std::make_shared<const std::pair<Shape, Shape>>(std::move(left), std::move(right));
  return s;
}

const Shape& Shape::left() const {
  if (is_leaf()) throw DomainError("Shape::left on a leaf");
  return children_->first;
}

const Shape& Shape::right() const {
  if (is_leaf()) throw DomainError("Shape::right on a leaf");
  return children_->second;
}

std::size_t Shape::leaves() const {
  return is_leaf() ? 1 : left().leaves() + right().leaves();
}

std::size_t Shape::size() const { return is_leaf() ? 1 : 1 + left().size() + right().size(); }

namespace {

void collect_paths(const Shape& s, std::string& prefix, std::vector<std::string>& out) {
  if (s.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  prefix.push_back('0');
  collect_paths(s.left(), prefix, out);
  prefix.back() = '1';
  collect_paths(s.right(), prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<std::string> Shape::paths() const {
  std::vector<std::string> out;
  std::string prefix;
  collect_paths(*this, prefix, out);
  return out;
}

std::string Shape::str() const {
  if (is_leaf()) return "ℓ";
  return "(" + left().str() + " " + right().str() + ")";
}

bool operator==(const Shape& a, const Shape& b) {
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  if (a.children_ == b.children_) return true;
  return a.left() == b.left() && a.right() == b.right();
}

Shape shape_of(const TreeShare& t) {
  if (t.is_leaf()) return Shape::leaf();
  return Shape::node(shape_of(t.left()), shape_of(t.right()));
}

Shape shape_join(const Shape& a, const Shape& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return Shape::node(shape_join(a.left(), b.left()), shape_join(a.right(), b.right()));
}

bool shape_within(const Shape& a, const Shape& b) { return shape_join(a, b) == b; }

Shape shape_of_formula(const FormulaPtr& f) {
  Shape s = Shape::leaf();
  for (const TreeShare& c : constants(f)) s = shape_join(s, shape_of(c));
  return s;
}

namespace {

void split_constant(const TreeShare& t, const Shape& s, std::vector<TreeShare>& out) {
  if (s.is_leaf()) {
    out.push_back(t);
  } else if (t.is_leaf()) {
    out.insert(out.end(), s.leaves(), t);
  } else {
    split_constant(t.left(), s.left(), out);
    split_constant(t.right(), s.right(), out);
  }
}

using Namer = std::map<std::string, std::vector<std::string>>;

std::vector<TermPtr> split_term(const TermPtr& t, const Shape& s, const Namer* names) {
  std::vector<TermPtr> out;
  switch (t->kind) {
    case TermKind::Var: {
      if (names) {
        for (const auto& n : names->at(t->name)) out.push_back(Term::var(n));
      } else {
        for (const auto& p : s.paths()) out.push_back(Term::var(t->name + p));
      }
      return out;
    }
    case TermKind::Const: {
      return split(t->constant, s).components;
    }
    case TermKind::Complement:
      for (const TermPtr& c : split_term(t->lhs, s, names)) out.push_back(Term::complement_of(c));
      return out;
    case TermKind::Union:
    case TermKind::Intersect:
    case TermKind::Plus: {
      auto a = split_term(t->lhs, s, names);
      auto b = split_term(t->rhs, s, names);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (t->kind == TermKind::Union) out.push_back(Term::join(a[i], b[i]));
        else if (t->kind == TermKind::Intersect) out.push_back(Term::meet(a[i], b[i]));
        else out.push_back(Term::sum(a[i], b[i]));
      }
      return out;
    }
    case TermKind::RMul:
    case TermKind::LMul:
      throw FragmentError("flatten: multiplication does not decompose along a shape");
  }
  return out;
}

}  // namespace

SplitResult split(const TreeShare& t, const Shape& s) {
  SplitResult r;
  std::vector<TreeShare> parts;
  split_constant(t, s, parts);
  for (const TreeShare& p : parts) r.components.push_back(Term::constant_of(p));
  return r;
}

SplitResult split(const TermPtr& t, const Shape& s) { return {split_term(t, s, nullptr)}; }

namespace {

TreeShare assemble_rec(const std::vector<TreeShare>& parts, const Shape& s, std::size_t& next) {
  if (s.is_leaf()) return parts.at(next++);
  TreeShare l = assemble_rec(parts, s.left(), next);
  TreeShare r = assemble_rec(parts, s.right(), next);
  return TreeShare::node(l, r);
}

}  // namespace

TreeShare assemble(const std::vector<TreeShare>& components, const Shape& s) {
  if (components.size() != s.leaves()) {
    throw ShapeMismatch("assemble: " + std::to_string(components.size()) +
                        " components for a shape with " + std::to_string(s.leaves()) +
                        " leaves");
  }
  std::size_t next = 0;
  return assemble_rec(components, s, next);
}

std::vector<std::pair<std::string, std::vector<std::string>>> component_names(
    const FormulaPtr& f, const Shape& s) {
  const std::set<std::string> originals = all_variables(f);
  const std::vector<std::string> paths = s.paths();
  std::map<std::string, std::string> separator;
  for (const auto& v : originals) separator[v] = "";

  auto names_for = [&](const std::string& v) {
    std::vector<std::string> out;
    for (const auto& p : paths) out.push_back(p.empty() ? v : v + separator[v] + p);
    return out;
  };

  for (;;) {
    std::map<std::string, std::set<std::string>> owners;
    for (const auto& v : originals) {
      for (const auto& n : names_for(v)) owners[n].insert(v);
    }
    std::set<std::string> clashing;
    for (const auto& [name, who] : owners) {
      bool foreign_original = originals.count(name) && !(who.size() == 1 && *who.begin() == name);
      if (who.size() > 1 || foreign_original) {
        for (const auto& v : who) {
          if (v != name) clashing.insert(v);
        }
      }
    }
    if (clashing.empty()) break;
    for (const auto& v : clashing) separator[v] += "_";
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const auto& v : originals) out.emplace_back(v, names_for(v));
  return out;
}

namespace {

class Flattener {
 public:
  Flattener(const Shape& s, Namer names) : shape_(s), names_(std::move(names)) {}

  FormulaPtr run(const FormulaPtr& f) const {
    switch (f->kind) {
      case FormulaKind::True:
      case FormulaKind::False:
        return f;
      case FormulaKind::Eq:
      case FormulaKind::Leq:
      case FormulaKind::Lt:
        return atom(f);
      case FormulaKind::Not:
        return Formula::negate(run(f->lhs));
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        if (f->domain != Domain::All) {
          throw FragmentError("flatten: 𝕋⁺-relativized quantifiers do not decompose");
        }
        FormulaPtr body = run(f->lhs);
        const auto& parts = names_.at(f->var);
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
          body = Formula::quantifier(f->kind, *it, body);
        }
        return body;
      }
      default: {
        auto out = std::make_shared<Formula>(*f);
        out->lhs = run(f->lhs);
        out->rhs = run(f->rhs);
        return out;
      }
    }
  }

 private:
  FormulaPtr atom(const FormulaPtr& f) const {
    auto l = split_term(f->left_term, shape_, &names_);
    auto r = split_term(f->right_term, shape_, &names_);
    std::vector<FormulaPtr> eqs;
    std::vector<FormulaPtr> leqs;
    for (std::size_t i = 0; i < l.size(); ++i) {
      eqs.push_back(Formula::eq(l[i], r[i]));
      leqs.push_back(Formula::leq(l[i], r[i]));
    }
    switch (f->kind) {
      case FormulaKind::Eq:
        return conjunction(eqs);
      case FormulaKind::Leq:
        return conjunction(leqs);
      default:
        return Formula::conj(conjunction(leqs), Formula::negate(conjunction(eqs)));
    }
  }

  Shape shape_;
  Namer names_;
};

void reject_multiplication(const FormulaPtr& f) {
  for (const auto& c : {f->left_term, f->right_term}) {
    if (!c) continue;
    std::vector<const Term*> stack{c.get()};
    while (!stack.empty()) {
      const Term* t = stack.back();
      stack.pop_back();
      if (t->kind == TermKind::RMul || t->kind == TermKind::LMul) {
        throw FragmentError("flatten: formula contains multiplication");
      }
      if (t->lhs) stack.push_back(t->lhs.get());
      if (t->rhs) stack.push_back(t->rhs.get());
    }
  }
  if (f->lhs) reject_multiplication(f->lhs);
  if (f->rhs) reject_multiplication(f->rhs);
}

}  // namespace

FormulaPtr flatten_formula(const FormulaPtr& f) {
  reject_multiplication(f);
  if (formula_height(f) == 0) return f;
  Shape s = shape_of_formula(f);
  Namer names;
  for (auto& [v, parts] : component_names(f, s)) names[v] = std::move(parts);
  return Flattener(s, std::move(names)).run(f);
}

}  // namespace treeshare
