#pragma once

// Flattening of Boolean tree-share formulas: every term is decomposed along
// the joint shape of the formula's constants so that only • and ∘ remain.

#include <memory>
#include <string>
#include <vector>

#include "treeshare/formula.hpp"

namespace treeshare {

// Leafless skeleton of a tree. Shapes are never folded: (ℓ ℓ) ≠ ℓ.
class Shape {
 public:
  Shape() = default;

  static Shape leaf();
  static Shape node(Shape left, Shape right);

  bool is_leaf() const noexcept { return !children_; }
  const Shape& left() const;
  const Shape& right() const;

  std::size_t leaves() const;
  std::size_t size() const;
  // Binary paths from the root to each leaf, left to right ("" for ℓ).
  std::vector<std::string> paths() const;
  // ℓ, (ℓ ℓ), ...
  std::string str() const;

  friend bool operator==(const Shape& a, const Shape& b);

 private:
  std::shared_ptr<const std::pair<Shape, Shape>> children_;
};

Shape shape_of(const TreeShare& t);
Shape shape_join(const Shape& a, const Shape& b);
// a ⊑ b, i.e. shape_join(a, b) = b.
bool shape_within(const Shape& a, const Shape& b);
// Join of ℓ and the shapes of every constant in f.
Shape shape_of_formula(const FormulaPtr& f);

struct SplitResult {
  // One entry per shape leaf, left to right.
  std::vector<TermPtr> components;
};

// Decomposes a variable or constant along s. Variables v yield v followed by
// the leaf path (v00, v01, ...); constants yield their subtrees, leaves being
// replicated, and a constant deeper than s keeps the whole subtree found at a
// shape leaf. Boolean combinations are split componentwise. Throws
// FragmentError on multiplication.
SplitResult split(const TermPtr& t, const Shape& s);
SplitResult split(const TreeShare& t, const Shape& s);

// Rebuilds a tree from one value per shape leaf; ShapeMismatch when the
// number of values differs from the number of leaves.
TreeShare assemble(const std::vector<TreeShare>& components, const Shape& s);

// Replaces every atom by the conjunction of its components and every
// quantifier Qv by Qv_1 ... Qv_n. Component variable names are v + path;
// if that clashes with another name the form v_path is used instead.
// Throws FragmentError on rmul / lmul and on 𝕋⁺-relativized quantifiers.
FormulaPtr flatten_formula(const FormulaPtr& f);

// Component variable names chosen by flatten_formula for each variable of f,
// in shape-leaf order.
std::vector<std::pair<std::string, std::vector<std::string>>> component_names(
    const FormulaPtr& f, const Shape& s);

}  // namespace treeshare
