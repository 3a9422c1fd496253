#include "treeshare/tree.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <utility>

#include "treeshare/error.hpp"

namespace treeshare {

struct TreeShare::Node {
  bool leaf = true;
  bool black = false;
  TreeShare left{nullptr};
  TreeShare right{nullptr};
  int height = 0;
  std::size_t size = 1;
  std::size_t blacks = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// The two leaves are process-wide singletons; every tree bottoms out in them.
TreeShare TreeShare::white() {
  static const TreeShare leaf{[] {
    auto n = std::make_shared<Node>();
    n->hash = 0x5a17;
    return std::shared_ptr<const Node>(std::move(n));
  }()};
  return leaf;
}

TreeShare TreeShare::black() {
  static const TreeShare leaf{[] {
    auto n = std::make_shared<Node>();
    n->black = true;
    n->blacks = 1;
    n->hash = 0xb1ac;
    return std::shared_ptr<const Node>(std::move(n));
  }()};
  return leaf;
}

TreeShare::TreeShare() : TreeShare(white()) {}

TreeShare TreeShare::node(const TreeShare& left, const TreeShare& right) {
  if (left.is_leaf() && right.is_leaf() && left.is_black() == right.is_black()) {
    return left;
  }
  auto n = std::make_shared<Node>();
  n->leaf = false;
  n->left = left;
  n->right = right;
  n->height = 1 + std::max(left.height(), right.height());
  n->size = 1 + left.size() + right.size();
  n->blacks = left.black_leaves() + right.black_leaves();
  n->hash = mix(mix(0x7ee, left.hash()), right.hash());
  return TreeShare(std::shared_ptr<const Node>(std::move(n)));
}

bool TreeShare::is_leaf() const noexcept { return rep_->leaf; }
bool TreeShare::is_white() const noexcept { return rep_->leaf && !rep_->black; }
bool TreeShare::is_black() const noexcept { return rep_->leaf && rep_->black; }
const TreeShare& TreeShare::left() const { return rep_->left; }
const TreeShare& TreeShare::right() const { return rep_->right; }
int TreeShare::height() const noexcept { return rep_->height; }
std::size_t TreeShare::size() const noexcept { return rep_->size; }
std::size_t TreeShare::black_leaves() const noexcept { return rep_->blacks; }
std::size_t TreeShare::hash() const noexcept { return rep_->hash; }

namespace {

void write(const TreeShare& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.is_black() ? '*' : 'o';
    return;
  }
  out += '(';
  write(t.left(), out);
  out += ' ';
  write(t.right(), out);
  out += ')';
}

}  // namespace

std::string TreeShare::str() const {
  std::string out;
  out.reserve(size() * 2);
  write(*this, out);
  return out;
}

bool operator==(const TreeShare& a, const TreeShare& b) noexcept {
  if (a.rep_ == b.rep_) return true;
  if (a.rep_->hash != b.rep_->hash || a.rep_->size != b.rep_->size) return false;
  if (a.is_leaf() || b.is_leaf()) return false;  // distinct leaf singletons
  return a.left() == b.left() && a.right() == b.right();
}

std::ostream& operator<<(std::ostream& os, const TreeShare& t) {
  return os << t.str();
}

bool enumeration_less(const TreeShare& a, const TreeShare& b) {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf();
  if (a.is_leaf()) return a.is_white() && b.is_black();
  return a.str() < b.str();
}

bool TreeLess::operator()(const TreeShare& a, const TreeShare& b) const {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf();
  if (a.is_leaf()) return a.is_white() && b.is_black();
  if (!(a.left() == b.left())) return (*this)(a.left(), b.left());
  return (*this)(a.right(), b.right());
}

TreeShare left_half() {
  static const TreeShare t = TreeShare::node(TreeShare::black(), TreeShare::white());
  return t;
}

TreeShare right_half() {
  static const TreeShare t = TreeShare::node(TreeShare::white(), TreeShare::black());
  return t;
}

// ── raw trees ───────────────────────────────────────────────────────────────

RawTree RawTree::make_leaf(bool black) {
  RawTree t;
  t.black = black;
  return t;
}

RawTree RawTree::make_node(RawTree left, RawTree right) {
  RawTree t;
  t.leaf = false;
  t.children.reserve(2);
  t.children.push_back(std::move(left));
  t.children.push_back(std::move(right));
  return t;
}

std::string RawTree::str() const {
  if (leaf) return black ? "*" : "o";
  return "(" + children[0].str() + " " + children[1].str() + ")";
}

bool is_canonical(const RawTree& t) {
  if (t.leaf) return true;
  const RawTree& l = t.children[0];
  const RawTree& r = t.children[1];
  if (l.leaf && r.leaf && l.black == r.black) return false;
  return is_canonical(l) && is_canonical(r);
}

TreeShare canonicalize(const RawTree& t) {
  if (t.leaf) return t.black ? TreeShare::black() : TreeShare::white();
  return TreeShare::node(canonicalize(t.children[0]), canonicalize(t.children[1]));
}

RawTree to_raw(const TreeShare& t) {
  if (t.is_leaf()) return RawTree::make_leaf(t.is_black());
  return RawTree::make_node(to_raw(t.left()), to_raw(t.right()));
}

namespace {

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {}

  RawTree read_all() {
    RawTree t = read();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of tree literal");
    return t;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  RawTree read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "tree");
    char c = text_[pos_];
    if (c == 'o' || c == '*') {
      ++pos_;
      return RawTree::make_leaf(c == '*');
    }
    if (c != '(') throw ParseError(pos_, "'o', '*' or '('");
    ++pos_;
    RawTree l = read();
    RawTree r = read();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(pos_, "')'");
    ++pos_;
    return RawTree::make_node(std::move(l), std::move(r));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawTree parse_raw_tree(std::string_view text) { return TreeReader(text).read_all(); }

TreeShare parse_tree(std::string_view text) {
  RawTree raw = parse_raw_tree(text);
  if (!is_canonical(raw)) {
    throw ParseError(0, "canonical tree literal (got " + raw.str() + ")");
  }
  return canonicalize(raw);
}

// ── operators ───────────────────────────────────────────────────────────────
//
// Operands of different shapes are unfolded lazily: a leaf meeting a node acts
// like a node of two copies of itself, and TreeShare::node refolds results.

TreeShare unite(const TreeShare& a, const TreeShare& b) {
  if (a.is_black() || b.is_white()) return a;
  if (b.is_black() || a.is_white()) return b;
  return TreeShare::node(unite(a.left(), b.left()), unite(a.right(), b.right()));
}

TreeShare intersect(const TreeShare& a, const TreeShare& b) {
  if (a.is_white() || b.is_black()) return a;
  if (b.is_white() || a.is_black()) return b;
  return TreeShare::node(intersect(a.left(), b.left()),
                         intersect(a.right(), b.right()));
}

TreeShare complement(const TreeShare& a) {
  if (a.is_leaf()) return a.is_black() ? TreeShare::white() : TreeShare::black();
  return TreeShare::node(complement(a.left()), complement(a.right()));
}

namespace {

bool disjoint(const TreeShare& a, const TreeShare& b) {
  if (a.is_white() || b.is_white()) return true;
  if (a.is_black() || b.is_black()) return false;
  return disjoint(a.left(), b.left()) && disjoint(a.right(), b.right());
}

}  // namespace

std::optional<TreeShare> plus(const TreeShare& a, const TreeShare& b) {
  if (!disjoint(a, b)) return std::nullopt;
  return unite(a, b);
}

TreeShare bowtie(const TreeShare& a, const TreeShare& b) {
  if (a.is_white() || b.is_black()) return a;
  if (a.is_black()) return b;
  if (b.is_white()) return b;
  return TreeShare::node(bowtie(a.left(), b), bowtie(a.right(), b));
}

bool leq(const TreeShare& a, const TreeShare& b) {
  if (a.is_white() || b.is_black()) return true;
  if (a.is_black() || b.is_white()) return false;
  return leq(a.left(), b.left()) && leq(a.right(), b.right());
}

bool lt(const TreeShare& a, const TreeShare& b) { return leq(a, b) && !(a == b); }

// ── enumeration ─────────────────────────────────────────────────────────────

std::size_t enumeration_count(int h) {
  if (h < 0) return 0;
  std::size_t c = 2;
  for (int i = 1; i <= h; ++i) c *= c;
  return c;
}

namespace {

std::vector<TreeShare> build_level(int h) {
  std::vector<TreeShare> out{TreeShare::white(), TreeShare::black()};
  if (h == 0) return out;
  const std::vector<TreeShare>& below = enumerate(h - 1);
  out.reserve(enumeration_count(h));
  for (const TreeShare& l : below) {
    for (const TreeShare& r : below) {
      if (l.is_leaf() && r.is_leaf() && l.is_black() == r.is_black()) continue;
      out.push_back(TreeShare::node(l, r));
    }
  }
  std::vector<std::pair<std::string, TreeShare>> keyed;
  keyed.reserve(out.size() - 2);
  for (std::size_t i = 2; i < out.size(); ++i) keyed.emplace_back(out[i].str(), out[i]);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 0; i < keyed.size(); ++i) out[i + 2] = keyed[i].second;
  return out;
}

}  // namespace

const std::vector<TreeShare>& enumerate(int h) {
  if (h < 0 || h > kMaxEnumerationHeight) {
    throw DomainError("enumerate: height " + std::to_string(h) +
                      " outside supported range 0.." +
                      std::to_string(kMaxEnumerationHeight));
  }
  static std::array<std::once_flag, kMaxEnumerationHeight + 1> once;
  static std::array<std::vector<TreeShare>, kMaxEnumerationHeight + 1> levels;
  std::call_once(once[h], [h] { levels[h] = build_level(h); });
  return levels[h];
}

}  // namespace treeshare
