#pragma once

#include <cstddef>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/rooted_tree.hpp"

namespace pdtree {

/// Grows an ordered tree one child at a time; ids are creation order.
class TreeBuilder {
 public:
  TreeBuilder() : parent_{kDummy, kDummy} {}

  Rank root() const noexcept { return 1; }

  Rank add_child(Rank parent) {
    parent_.push_back(parent);
    return static_cast<Rank>(parent_.size() - 1);
  }

  void add_leaves(Rank parent, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) add_child(parent);
  }

  /// Copies `shape` below `at`, with `at` playing the role of shape's root.
  void graft(Rank at, const RootedTree& shape) {
    std::vector<Rank> image(shape.size() + 1, kDummy);
    image[1] = at;
    std::vector<Rank> order{1};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (Rank c : shape.children(order[head])) {
        image[c] = add_child(image[order[head]]);
        order.push_back(c);
      }
    }
  }

  /// BFS-ranked result.
  RootedTree build() const {
    return bfs_canonicalize(RootedTree::from_parents(parent_)).tree;
  }

 private:
  std::vector<Rank> parent_;
};

/// The 15-vertex worked example; already BFS ranked.
inline RootedTree example15_tree() {
  return RootedTree::from_parent_array({0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 12, 12});
}

/// A 19-vertex example in its original vertex numbering, which
/// is not depth monotone (16 and 17 sit above 14 and 15).
inline RootedTree example19_tree() {
  return RootedTree::from_parent_array(
      {0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 12, 12, 9, 9, 17, 10});
}

struct ProofFixtures {
  RootedTree tau0;
  RootedTree t1;
  RootedTree t2;
  RootedTree tau1;
  RootedTree tau2;
};

namespace detail {

// Height 3: the root has d0 children; the first has d0 leaf children, the
// last has d0 children whose last one has d0 leaf children. Returns the
// rightmost depth-3 leaf through `last_leaf`.
inline TreeBuilder tau0_builder(std::size_t d0, Rank& last_leaf) {
  TreeBuilder b;
  std::vector<Rank> top;
  for (std::size_t k = 0; k < d0; ++k) top.push_back(b.add_child(b.root()));
  b.add_leaves(top.front(), d0);
  std::vector<Rank> mid;
  for (std::size_t k = 0; k < d0; ++k) mid.push_back(b.add_child(top.back()));
  for (std::size_t k = 0; k < d0; ++k) last_leaf = b.add_child(mid.back());
  return b;
}

}  // namespace detail

/**
 * Trees from the variance-positivity argument, for a given minimal
 * branching outdegree d0 >= 2. t1 and t2 are full d0-ary trees with the same
 * order; tau1 and tau2 replace the rightmost depth-3 leaf of tau0 by t1 and
 * t2 respectively.
 */
inline ProofFixtures build_fixtures(std::size_t d0) {
  if (d0 < 2) throw Error(ErrorCode::DomainError, "d0 must be at least 2");
  Rank last_leaf = kDummy;
  const RootedTree tau0 = detail::tau0_builder(d0, last_leaf).build();

  // t1: first child of the root has an internal first child; last child of
  // the root has an internal last child.
  TreeBuilder b1;
  {
    std::vector<Rank> top;
    for (std::size_t k = 0; k < d0; ++k) top.push_back(b1.add_child(b1.root()));
    std::vector<Rank> left, right;
    for (std::size_t k = 0; k < d0; ++k) left.push_back(b1.add_child(top.front()));
    for (std::size_t k = 0; k < d0; ++k) right.push_back(b1.add_child(top.back()));
    b1.add_leaves(left.front(), d0);
    b1.add_leaves(right.back(), d0);
  }
  const RootedTree t1 = b1.build();

  // t2: first child of the root has only leaves; last child of the root has
  // internal first and last children.
  TreeBuilder b2;
  {
    std::vector<Rank> top;
    for (std::size_t k = 0; k < d0; ++k) top.push_back(b2.add_child(b2.root()));
    b2.add_leaves(top.front(), d0);
    std::vector<Rank> right;
    for (std::size_t k = 0; k < d0; ++k) right.push_back(b2.add_child(top.back()));
    b2.add_leaves(right.front(), d0);
    b2.add_leaves(right.back(), d0);
  }
  const RootedTree t2 = b2.build();

  Rank leaf1 = kDummy, leaf2 = kDummy;
  auto tb1 = detail::tau0_builder(d0, leaf1);
  tb1.graft(leaf1, t1);
  auto tb2 = detail::tau0_builder(d0, leaf2);
  tb2.graft(leaf2, t2);
  return {tau0, t1, t2, tb1.build(), tb2.build()};
}

}  // namespace pdtree
