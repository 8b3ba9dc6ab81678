#include <gtest/gtest.h>

#include <set>

#include "alttam/alt_tamari.hpp"
#include "alttam/binary_tree.hpp"
#include "alttam/error.hpp"

using namespace alttam;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an alttam::Error";
  return ErrorKind::InvalidArgument;
}

BinaryTree Y() { return tree_y(); }
BinaryTree N(BinaryTree l, BinaryTree r) { return BinaryTree::node(std::move(l), std::move(r)); }
const BinaryTree leaf{};

// Every pair (a, b) of trees is related the same way in both orders.
bool order_isomorphic(int n, DyckPath (*encode)(const BinaryTree&)) {
  const TreeTamari trees = build_tree_tamari(n);
  const AltTamariPoset tam = AltTamariPoset::build(IncrementFunction::ones(n));
  std::vector<std::size_t> image;
  std::set<std::size_t> distinct;
  for (const BinaryTree& t : trees.trees) {
    image.push_back(tam.index_of(encode(t)));
    distinct.insert(image.back());
  }
  if (distinct.size() != image.size()) return false;
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = 0; b < image.size(); ++b) {
      if (trees.poset.leq(a, b) != tam.poset().leq(image[a], image[b])) return false;
    }
  }
  return true;
}

// leaf -> empty, Node(L, R) -> u path(L) d path(R)
void first_return_word(const BinaryTree& t, Word& out) {
  if (t.is_leaf()) return;
  out.push_back(Step::Up);
  first_return_word(t.left(), out);
  out.push_back(Step::Down);
  first_return_word(t.right(), out);
}

DyckPath first_return(const BinaryTree& t) {
  Word w;
  first_return_word(t, w);
  return DyckPath::from_steps(w);
}

}  // namespace

TEST(Trees, ParensRoundTrip) {
  EXPECT_EQ(Y().to_parens(), "()");
  EXPECT_EQ(leaf.to_parens(), "");
  EXPECT_EQ(N(Y(), leaf).to_parens(), "(())");
  EXPECT_EQ(N(leaf, Y()).to_parens(), "()()");
  for (int n = 0; n <= 6; ++n) {
    for (const BinaryTree& t : enumerate_trees(n)) EXPECT_EQ(parse_tree(t.to_parens()), t);
  }
  EXPECT_EQ(kind_of([] { parse_tree("(()"); }), ErrorKind::NonDyckWord);
  EXPECT_EQ(kind_of([] { parse_tree("(x)"); }), ErrorKind::BadAlphabet);
}

TEST(Trees, EnumerateCounts) {
  EXPECT_EQ(enumerate_trees(3).size(), 5U);
  for (int n = 0; n <= 9; ++n) {
    const auto trees = enumerate_trees(n);
    EXPECT_EQ(trees.size(), catalan_u64(n));
    std::set<std::string> distinct;
    for (const auto& t : trees) {
      EXPECT_EQ(t.size(), n);
      EXPECT_EQ(t.leaves(), n + 1);
      distinct.insert(t.to_parens());
    }
    EXPECT_EQ(distinct.size(), trees.size());
  }
}

TEST(Trees, RotationCoversTamFour) {
  std::size_t total = 0;
  for (const BinaryTree& t : enumerate_trees(4)) total += left_rotation_covers(t).size();
  EXPECT_EQ(total, 21U);
  EXPECT_EQ(build_tree_tamari(4).poset.covers().size(), 21U);
}

TEST(Trees, LeftRotation) {
  const BinaryTree a = N(leaf, Y());
  EXPECT_EQ(left_rotate_at(a, 0), N(Y(), leaf));
  EXPECT_EQ(kind_of([&] { left_rotate_at(N(Y(), leaf), 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { left_rotate_at(a, 5); }), ErrorKind::IndexOutOfRange);
  // rotation at a non-root node
  EXPECT_EQ(left_rotate_at(N(N(leaf, Y()), leaf), 1), N(N(Y(), leaf), leaf));
}

TEST(Trees, Combs) {
  EXPECT_EQ(right_comb(1), Y());
  EXPECT_EQ(right_comb(3).to_parens(), "()()()");
  EXPECT_EQ(left_comb(3).to_parens(), "((()))");
  EXPECT_EQ(kind_of([] { right_comb(0); }), ErrorKind::InvalidArgument);
  // the combs are the extremes of the order
  for (int n = 1; n <= 5; ++n) {
    const TreeTamari t = build_tree_tamari(n);
    const std::size_t bottom = t.poset.index_of(right_comb(n).to_parens());
    const std::size_t top = t.poset.index_of(left_comb(n).to_parens());
    for (std::size_t i = 0; i < t.trees.size(); ++i) {
      EXPECT_TRUE(t.poset.leq(bottom, i));
      EXPECT_TRUE(t.poset.leq(i, top));
    }
  }
}

TEST(Trees, MirrorIsAnOrderReversingInvolution) {
  EXPECT_EQ(mirror_tree(left_comb(4)), right_comb(4));
  for (int n = 1; n <= 5; ++n) {
    const TreeTamari t = build_tree_tamari(n);
    for (std::size_t a = 0; a < t.trees.size(); ++a) {
      const BinaryTree& ta = t.trees[a];
      EXPECT_EQ(mirror_tree(mirror_tree(ta)), ta);
      const std::size_t ma = t.poset.index_of(mirror_tree(ta).to_parens());
      for (std::size_t b = 0; b < t.trees.size(); ++b) {
        const std::size_t mb = t.poset.index_of(mirror_tree(t.trees[b]).to_parens());
        EXPECT_EQ(t.poset.leq(a, b), t.poset.leq(mb, ma));
      }
    }
  }
}

TEST(Graft, Examples) {
  EXPECT_EQ(graft(Y(), 0, Y()), N(Y(), leaf));
  EXPECT_EQ(graft(Y(), 1, Y()), N(leaf, Y()));
  EXPECT_EQ(graft(leaf, 0, Y()), Y());
  EXPECT_EQ(graft(N(leaf, Y()), 1, Y()), N(leaf, N(Y(), leaf)));
  EXPECT_EQ(kind_of([] { graft(Y(), 2, Y()); }), ErrorKind::LeafOutOfRange);
  EXPECT_EQ(kind_of([] { graft(Y(), -1, Y()); }), ErrorKind::LeafOutOfRange);
  for (const BinaryTree& t : enumerate_trees(4)) {
    for (int leafi = 0; leafi <= 4; ++leafi) EXPECT_EQ(graft(t, leafi, right_comb(2)).size(), 6);
  }
}

TEST(Plug, Examples) {
  EXPECT_EQ(plug(Y(), Edge{0, Side::Left}, Y()), N(N(leaf, Y()), leaf));
  EXPECT_EQ(plug(Y(), Edge{0, Side::Right}, Y()), N(leaf, N(Y(), leaf)));
  EXPECT_EQ(plug(N(Y(), leaf), Edge{1, Side::Right}, leaf), N(N(leaf, Y()), leaf));
  EXPECT_EQ(kind_of([] { plug(Y(), Edge::root(), Y()); }), ErrorKind::RootEdgeForbidden);
  EXPECT_EQ(kind_of([] { plug(Y(), Edge{3, Side::Left}, Y()); }), ErrorKind::IndexOutOfRange);
}

TEST(Plug, ReconstructsEveryCoverOfTamFour) {
  // a cover Node(A, Node(B, C)) < Node(Node(A, B), C) is B plugged on either
  // side of the rotated node of the tree with B removed
  std::set<std::pair<std::string, std::string>> built;
  for (int m = 1; m <= 3; ++m) {
    for (const BinaryTree& tree : enumerate_trees(m)) {
      for (const BinaryTree& middle : enumerate_trees(3 - m)) {
        for (int s = 0; s < m; ++s) {
          const BinaryTree lo = plug(tree, Edge{s, Side::Right}, middle);
          const BinaryTree hi = plug(tree, Edge{s, Side::Left}, middle);
          EXPECT_EQ(left_rotate_at(lo, s), hi);
          built.emplace(lo.to_parens(), hi.to_parens());
        }
      }
    }
  }
  std::set<std::pair<std::string, std::string>> covers;
  const TreeTamari t = build_tree_tamari(4);
  for (const auto& [lo, hi] : t.poset.covers()) covers.emplace(t.poset.label(lo), t.poset.label(hi));
  EXPECT_EQ(built.size(), 21U);
  EXPECT_EQ(built, covers);
}

TEST(NewIntervals, CombFamilies) {
  for (int n = 1; n <= 6; ++n) {
    const TreeInterval r = build_R(n);
    const TreeInterval l = build_L(n);
    EXPECT_EQ(r.bottom.size(), n + 1);
    EXPECT_EQ(l.top.size(), n + 1);
    EXPECT_TRUE(is_new_interval(r));
    EXPECT_TRUE(is_new_interval(l));
    EXPECT_EQ(mirror_tree(r.bottom), l.top);
    EXPECT_EQ(mirror_tree(r.top), l.bottom);
  }
  EXPECT_EQ(kind_of([] { build_R(0); }), ErrorKind::InvalidArgument);
}

TEST(NewIntervals, GraftedIntervalsAreNotNew) {
  const TreeInterval cover{N(leaf, Y()), N(Y(), leaf)};
  EXPECT_TRUE(is_new_interval(cover));
  const TreeInterval grafted{graft(cover.bottom, 0, Y()), graft(cover.top, 0, Y())};
  EXPECT_FALSE(is_new_interval(grafted));
  EXPECT_FALSE(is_new_interval(TreeInterval{right_comb(3), right_comb(3)}));
  EXPECT_EQ(kind_of([&] { is_new_interval(TreeInterval{cover.top, cover.bottom}); }), ErrorKind::InvalidInterval);
}

TEST(Encoding, Examples) {
  EXPECT_EQ(tree_to_path(left_comb(3)), parse_dyck("uuuddd"));
  EXPECT_EQ(tree_to_path(right_comb(3)), parse_dyck("ududud"));
  EXPECT_EQ(tree_to_path(leaf), parse_dyck(""));
  for (int n = 0; n <= 7; ++n) {
    for (const BinaryTree& t : enumerate_trees(n)) EXPECT_EQ(path_to_tree(tree_to_path(t)), t);
  }
}

TEST(Encoding, LastReturnIsAnOrderIsomorphism) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(order_isomorphic(n, tree_to_path)) << n;
}

TEST(Encoding, FirstReturnIsNotAnOrderIsomorphism) {
  EXPECT_TRUE(order_isomorphic(2, first_return));
  EXPECT_FALSE(order_isomorphic(3, first_return));
}
