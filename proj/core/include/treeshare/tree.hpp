#pragma once

// Tree shares: canonical Boolean binary trees with the Boolean operators
// (⊔, ⊓, complement), partial disjoint addition ⊕, and the multiplicative
// "bowtie" ⋈ that grafts a copy of its right operand onto every black leaf of
// its left operand.
//
// Textual syntax, shared by every module and the CLI:
//
//     o        white leaf ∘ (no ownership)
//     *        black leaf • (full ownership)
//     (l r)    node with left subtree l and right subtree r
//
// A tree is canonical when no subtree is (o o) or (* *). TreeShare values are
// canonical by construction; RawTree holds arbitrary trees before folding.

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace treeshare {

class TreeShare {
 public:
  // Defaults to the white leaf ∘.
  TreeShare();

  static TreeShare white();
  static TreeShare black();
  // Builds a node, folding (o o) to o and (* *) to *.
  static TreeShare node(const TreeShare& left, const TreeShare& right);

  bool is_leaf() const noexcept;
  bool is_white() const noexcept;
  bool is_black() const noexcept;
  // Not • and not ∘, i.e. a member of 𝕋⁺.
  bool is_nontrivial() const noexcept { return !is_leaf(); }

  // Children of a node. Undefined for leaves.
  const TreeShare& left() const;
  const TreeShare& right() const;

  int height() const noexcept;
  // Number of tree nodes, leaves included.
  std::size_t size() const noexcept;
  std::size_t black_leaves() const noexcept;
  std::size_t hash() const noexcept;

  std::string str() const;

  friend bool operator==(const TreeShare& a, const TreeShare& b) noexcept;

 private:
  struct Node;
  explicit TreeShare(std::shared_ptr<const Node> rep) : rep_(std::move(rep)) {}
  // Null handle; only used for the unused children of leaf nodes.
  explicit TreeShare(std::nullptr_t) {}
  std::shared_ptr<const Node> rep_;
};

std::ostream& operator<<(std::ostream& os, const TreeShare& t);

// Fixed total order used by enumerate(): leaves first (o before *), then by
// serialized text compared lexicographically.
bool enumeration_less(const TreeShare& a, const TreeShare& b);

// Structural order, cheaper than enumeration_less; suitable for map keys.
struct TreeLess {
  bool operator()(const TreeShare& a, const TreeShare& b) const;
};

struct TreeHash {
  std::size_t operator()(const TreeShare& t) const noexcept { return t.hash(); }
};

// ── named constants ─────────────────────────────────────────────────────────

inline TreeShare empty_share() { return TreeShare::white(); }
inline TreeShare full_share() { return TreeShare::black(); }
// 𝓛 = (* o)
TreeShare left_half();
// 𝓡 = (o *)
TreeShare right_half();

// ── raw trees and canonical form ────────────────────────────────────────────

struct RawTree {
  bool leaf = true;
  bool black = false;
  std::vector<RawTree> children;  // empty for leaves, exactly two otherwise

  static RawTree make_leaf(bool black);
  static RawTree make_node(RawTree left, RawTree right);

  std::string str() const;
};

bool is_canonical(const RawTree& t);
// Folds node(x, x) for leaves x bottom-up.
TreeShare canonicalize(const RawTree& t);
RawTree to_raw(const TreeShare& t);

// Parses a standalone tree literal. parse_tree rejects non-canonical input
// with a ParseError; parse_raw_tree accepts any well-formed tree.
TreeShare parse_tree(std::string_view text);
RawTree parse_raw_tree(std::string_view text);

// ── operators ───────────────────────────────────────────────────────────────

TreeShare unite(const TreeShare& a, const TreeShare& b);
TreeShare intersect(const TreeShare& a, const TreeShare& b);
TreeShare complement(const TreeShare& a);
// Disjoint union; std::nullopt when a ⊓ b ≠ ∘.
std::optional<TreeShare> plus(const TreeShare& a, const TreeShare& b);
TreeShare bowtie(const TreeShare& a, const TreeShare& b);

// a ⊑ b  ⇔  a ⊔ b = b
bool leq(const TreeShare& a, const TreeShare& b);
bool lt(const TreeShare& a, const TreeShare& b);

inline int height(const TreeShare& t) { return t.height(); }

// ── enumeration ─────────────────────────────────────────────────────────────

// Largest height enumerate() materializes: c(4) = 65536, c(5) = 2^32.
inline constexpr int kMaxEnumerationHeight = 4;

// Number of canonical trees of height ≤ h: c(0) = 2, c(h) = c(h−1)².
std::size_t enumeration_count(int h);

// Every canonical tree of height ≤ h exactly once, ordered by
// enumeration_less. Results are cached; throws DomainError above
// kMaxEnumerationHeight.
const std::vector<TreeShare>& enumerate(int h);

}  // namespace treeshare

template <>
struct std::hash<treeshare::TreeShare> {
  std::size_t operator()(const treeshare::TreeShare& t) const noexcept {
    return t.hash();
  }
};
