#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alttam/dyck_path.hpp"
#include "alttam/poset.hpp"

namespace alttam {

enum class Side { Left, Right };

/// Immutable planar rooted binary tree; the default value is the leaf.
/// Subtrees are shared, so copies are cheap.
class BinaryTree {
 public:
  BinaryTree() = default;
  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool is_leaf() const { return node_ == nullptr; }
  int size() const;
  int leaves() const { return size() + 1; }
  /// Children of a node; calling these on a leaf is a logic error.
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  /// Balanced parentheses: leaf = "", node = "(" left ")" right.
  std::string to_parens() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);

 private:
  struct Node;
  explicit BinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  int size = 1;
};

/// Inverse of to_parens. Throws NonDyckWord / BadAlphabet.
BinaryTree parse_tree(std::string_view parens);

/// The tree of size 1.
BinaryTree tree_y();

std::vector<BinaryTree> enumerate_trees(int n);
std::vector<BinaryTree> enumerate_trees(int n, int cap);

/// Node(A, Node(B, C)) -> Node(Node(A, B), C) at the node with the given
/// preorder index. Throws IndexOutOfRange if that node's right child is a leaf.
BinaryTree left_rotate_at(const BinaryTree& tree, int preorder);

/// Every left rotation of the tree, ordered by preorder index of the rotated node.
std::vector<BinaryTree> left_rotation_covers(const BinaryTree& tree);

BinaryTree right_comb(int n);
BinaryTree left_comb(int n);

BinaryTree mirror_tree(const BinaryTree& tree);

/// Identify the root node of `other` with leaf `leaf` (0..size, left to right).
BinaryTree graft(const BinaryTree& tree, int leaf, const BinaryTree& other);

/// Edge from the node with preorder index `node` to its `side` child. The
/// edge between the root and the root node is Edge::root().
struct Edge {
  int node = -1;
  Side side = Side::Left;

  static Edge root() { return Edge{-1, Side::Left}; }
  bool is_root() const { return node < 0; }
};

/// Insert a new node on `edge` carrying `other` on the opposite side.
/// Throws RootEdgeForbidden, IndexOutOfRange.
BinaryTree plug(const BinaryTree& tree, Edge edge, const BinaryTree& other);

struct TreeInterval {
  BinaryTree bottom;
  BinaryTree top;
};

/// R_n = [r_{n+1}, Node(r_n, leaf)] and its mirror L_n = [Node(leaf, l_n), l_{n+1}].
TreeInterval build_R(int n);
TreeInterval build_L(int n);

/// True iff bottom and top share no node spanning the same proper range of
/// leaves. Throws InvalidInterval when bottom is not below top.
bool is_new_interval(const TreeInterval& interval);

/// Last-return encoding: leaf -> empty, Node(L, R) -> path(R) u path(L) d.
/// Left rotations become delta-rotations for delta = all ones.
DyckPath tree_to_path(const BinaryTree& tree);
BinaryTree path_to_tree(const DyckPath& path);

/// Tamari order on trees of size n: closure of left rotations.
struct TreeTamari {
  std::vector<BinaryTree> trees;
  Poset poset;
};

TreeTamari build_tree_tamari(int n);

}  // namespace alttam
