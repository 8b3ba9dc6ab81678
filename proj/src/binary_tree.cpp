#include "alttam/binary_tree.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "alttam/alt_tamari.hpp"
#include "alttam/error.hpp"

namespace alttam {

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  int size = left.size() + right.size() + 1;
  return BinaryTree(std::make_shared<const Node>(Node{std::move(left), std::move(right), size}));
}

int BinaryTree::size() const { return node_ ? node_->size : 0; }
const BinaryTree& BinaryTree::left() const { return node_->left; }
const BinaryTree& BinaryTree::right() const { return node_->right; }

bool operator==(const BinaryTree& a, const BinaryTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.size() == b.size() && a.left() == b.left() && a.right() == b.right();
}

std::string BinaryTree::to_parens() const {
  if (is_leaf()) return {};
  return "(" + left().to_parens() + ")" + right().to_parens();
}

namespace {

// First-return split of a balanced word: "(" inner ")" rest.
BinaryTree parse_range(std::string_view s) {
  if (s.empty()) return {};
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : -1;
    if (depth == 0) return BinaryTree::node(parse_range(s.substr(1, i - 1)), parse_range(s.substr(i + 1)));
  }
  return {};  // unreachable after validation
}

int preorder_size(const BinaryTree& t) { return t.size(); }

}  // namespace

BinaryTree parse_tree(std::string_view parens) {
  int depth = 0;
  for (char c : parens) {
    if (c != '(' && c != ')') throw Error(ErrorKind::BadAlphabet, std::string("unexpected character '") + c + "'");
    depth += c == '(' ? 1 : -1;
    if (depth < 0) throw Error(ErrorKind::NonDyckWord, "unbalanced parentheses");
  }
  if (depth != 0) throw Error(ErrorKind::NonDyckWord, "unbalanced parentheses");
  return parse_range(parens);
}

BinaryTree tree_y() { return BinaryTree::node({}, {}); }

std::vector<BinaryTree> enumerate_trees(int n) { return enumerate_trees(n, path_cap()); }

std::vector<BinaryTree> enumerate_trees(int n, int cap) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative size");
  if (n > cap) throw Error(ErrorKind::SizeTooLarge, "size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<BinaryTree>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[0].push_back(BinaryTree{});
  for (int m = 1; m <= n; ++m) {
    // larger left subtrees first
    for (int left = m - 1; left >= 0; --left) {
      for (const BinaryTree& l : by_size[static_cast<std::size_t>(left)]) {
        for (const BinaryTree& r : by_size[static_cast<std::size_t>(m - 1 - left)]) {
          by_size[static_cast<std::size_t>(m)].push_back(BinaryTree::node(l, r));
        }
      }
    }
  }
  return by_size[static_cast<std::size_t>(n)];
}

BinaryTree left_rotate_at(const BinaryTree& tree, int preorder) {
  if (tree.is_leaf() || preorder < 0 || preorder >= tree.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "no node with preorder index " + std::to_string(preorder));
  }
  if (preorder == 0) {
    if (tree.right().is_leaf()) throw Error(ErrorKind::IndexOutOfRange, "right child is a leaf");
    const BinaryTree& a = tree.left();
    const BinaryTree& b = tree.right().left();
    const BinaryTree& c = tree.right().right();
    return BinaryTree::node(BinaryTree::node(a, b), c);
  }
  const int left_size = preorder_size(tree.left());
  if (preorder <= left_size) {
    return BinaryTree::node(left_rotate_at(tree.left(), preorder - 1), tree.right());
  }
  return BinaryTree::node(tree.left(), left_rotate_at(tree.right(), preorder - 1 - left_size));
}

namespace {

void collect_rotations(const BinaryTree& tree, int offset, const BinaryTree& whole, std::vector<BinaryTree>& out) {
  if (tree.is_leaf()) return;
  if (!tree.right().is_leaf()) out.push_back(left_rotate_at(whole, offset));
  collect_rotations(tree.left(), offset + 1, whole, out);
  collect_rotations(tree.right(), offset + 1 + tree.left().size(), whole, out);
}

}  // namespace

std::vector<BinaryTree> left_rotation_covers(const BinaryTree& tree) {
  std::vector<BinaryTree> out;
  collect_rotations(tree, 0, tree, out);
  return out;
}

BinaryTree right_comb(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "combs have size at least 1");
  BinaryTree t = tree_y();
  for (int k = 2; k <= n; ++k) t = graft(t, t.size(), tree_y());
  return t;
}

BinaryTree left_comb(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "combs have size at least 1");
  BinaryTree t = tree_y();
  for (int k = 2; k <= n; ++k) t = graft(t, 0, tree_y());
  return t;
}

BinaryTree mirror_tree(const BinaryTree& tree) {
  if (tree.is_leaf()) return tree;
  return BinaryTree::node(mirror_tree(tree.right()), mirror_tree(tree.left()));
}

BinaryTree graft(const BinaryTree& tree, int leaf, const BinaryTree& other) {
  if (leaf < 0 || leaf > tree.size()) {
    throw Error(ErrorKind::LeafOutOfRange, "leaf " + std::to_string(leaf) + " of a tree with " +
                                               std::to_string(tree.leaves()) + " leaves");
  }
  if (tree.is_leaf()) return other;
  const int left_leaves = tree.left().leaves();
  if (leaf < left_leaves) return BinaryTree::node(graft(tree.left(), leaf, other), tree.right());
  return BinaryTree::node(tree.left(), graft(tree.right(), leaf - left_leaves, other));
}

BinaryTree plug(const BinaryTree& tree, Edge edge, const BinaryTree& other) {
  if (edge.is_root()) throw Error(ErrorKind::RootEdgeForbidden, "cannot plug into the root edge");
  if (tree.is_leaf() || edge.node >= tree.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "no node with preorder index " + std::to_string(edge.node));
  }
  if (edge.node == 0) {
    if (edge.side == Side::Left) {
      // the old left child continues the edge; `other` hangs on the right
      return BinaryTree::node(BinaryTree::node(tree.left(), other), tree.right());
    }
    return BinaryTree::node(tree.left(), BinaryTree::node(other, tree.right()));
  }
  const int left_size = tree.left().size();
  if (edge.node <= left_size) {
    return BinaryTree::node(plug(tree.left(), Edge{edge.node - 1, edge.side}, other), tree.right());
  }
  return BinaryTree::node(tree.left(), plug(tree.right(), Edge{edge.node - 1 - left_size, edge.side}, other));
}

TreeInterval build_R(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "R_n needs n >= 1");
  return TreeInterval{right_comb(n + 1), BinaryTree::node(right_comb(n), {})};
}

TreeInterval build_L(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "L_n needs n >= 1");
  return TreeInterval{BinaryTree::node({}, left_comb(n)), left_comb(n + 1)};
}

namespace {

// Leaf ranges [first, last] of every non-root node.
void proper_spans(const BinaryTree& tree, int first_leaf, bool is_root, std::set<std::pair<int, int>>& out) {
  if (tree.is_leaf()) return;
  if (!is_root) out.emplace(first_leaf, first_leaf + tree.size());
  proper_spans(tree.left(), first_leaf, false, out);
  proper_spans(tree.right(), first_leaf + tree.left().leaves(), false, out);
}

}  // namespace

bool is_new_interval(const TreeInterval& interval) {
  if (interval.bottom.size() != interval.top.size() ||
      (interval.bottom.size() > 0 &&
       !leq_by_search(IncrementFunction::ones(interval.bottom.size()), tree_to_path(interval.bottom),
                      tree_to_path(interval.top)))) {
    throw Error(ErrorKind::InvalidInterval, "bottom is not below top in the Tamari order");
  }
  std::set<std::pair<int, int>> bottom;
  std::set<std::pair<int, int>> top;
  proper_spans(interval.bottom, 0, true, bottom);
  proper_spans(interval.top, 0, true, top);
  return std::none_of(bottom.begin(), bottom.end(), [&](const auto& span) { return top.count(span) != 0; });
}

namespace {

void encode(const BinaryTree& tree, Word& out) {
  if (tree.is_leaf()) return;
  encode(tree.right(), out);
  out.push_back(Step::Up);
  encode(tree.left(), out);
  out.push_back(Step::Down);
}

BinaryTree decode(std::span<const Step> word) {
  if (word.empty()) return {};
  // the last step closes the final excursion; find its opening up step
  int depth = 0;
  for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
    depth += word[static_cast<std::size_t>(i)] == Step::Down ? 1 : -1;
    if (depth == 0) {
      auto split = static_cast<std::size_t>(i);
      return BinaryTree::node(decode(word.subspan(split + 1, word.size() - split - 2)), decode(word.first(split)));
    }
  }
  return {};  // unreachable for Dyck words
}

}  // namespace

DyckPath tree_to_path(const BinaryTree& tree) {
  Word word;
  word.reserve(static_cast<std::size_t>(2 * tree.size()));
  encode(tree, word);
  return DyckPath::from_steps(word);
}

BinaryTree path_to_tree(const DyckPath& path) {
  Word word = path.steps();
  return decode(word);
}

TreeTamari build_tree_tamari(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "posets need size at least 1");
  if (n > poset_cap()) throw Error(ErrorKind::SizeTooLarge, "size " + std::to_string(n) + " exceeds poset cap");
  TreeTamari out;
  out.trees = enumerate_trees(n, std::max(n, path_cap()));
  std::vector<std::string> labels;
  labels.reserve(out.trees.size());
  for (const BinaryTree& t : out.trees) labels.push_back(t.to_parens());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < out.trees.size(); ++i) {
    for (const BinaryTree& up : left_rotation_covers(out.trees[i])) covers.emplace_back(i, index.at(up.to_parens()));
  }
  out.poset = Poset::build(std::move(labels), std::move(covers), Reduction::Assert);
  return out;
}

}  // namespace alttam
