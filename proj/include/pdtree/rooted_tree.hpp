#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdtree/error.hpp"

namespace pdtree {

/// Vertex rank. Ranks run 1..n; rank 0 is the dummy vertex that serves as
/// the root's parent.
using Rank = std::uint32_t;

inline constexpr Rank kDummy = 0;

/**
 * Ordered rooted tree stored as a parent array.
 *
 * parent(1) == 0 always; the root is rank 1. Children of each vertex are kept
 * in ascending rank order, which is also their left-to-right order. The tree
 * is immutable after construction.
 *
 * bfs_monotone() reports whether depth is nondecreasing in rank, which is the
 * only ordering the paired domination algorithm relies on.
 */
class RootedTree {
 public:
  /// raw[k] is the parent rank of vertex k+1 (so raw[0] must be 0).
  static RootedTree from_parent_array(std::span<const std::int64_t> raw) {
    const std::size_t n = raw.size();
    if (n == 0) throw Error(ErrorCode::EmptyTree, "parent array is empty");
    if (n >= static_cast<std::size_t>(UINT32_MAX))
      throw Error(ErrorCode::TooLarge, "tree order exceeds rank range");
    std::vector<Rank> parent(n + 1, kDummy);
    for (std::size_t k = 0; k < n; ++k) {
      if (raw[k] < 0 || raw[k] > static_cast<std::int64_t>(n))
        throw Error(ErrorCode::DanglingParentRank,
                    "vertex " + std::to_string(k + 1) + " has parent " +
                        std::to_string(raw[k]) + " outside [0," +
                        std::to_string(n) + "]");
      parent[k + 1] = static_cast<Rank>(raw[k]);
    }
    return RootedTree(std::move(parent), {});
  }

  static RootedTree from_parent_array(std::initializer_list<std::int64_t> raw) {
    return from_parent_array(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  static RootedTree from_parent_array(const std::vector<std::int64_t>& raw) {
    return from_parent_array(std::span<const std::int64_t>(raw));
  }

  /// Takes a full parent vector of length n+1 (slot 0 is the dummy) plus
  /// optional per-rank original labels (empty, or length n+1).
  static RootedTree from_parents(std::vector<Rank> parent_with_dummy,
                                 std::vector<Rank> labels = {}) {
    if (parent_with_dummy.size() < 2)
      throw Error(ErrorCode::EmptyTree, "parent array is empty");
    const auto n = parent_with_dummy.size() - 1;
    parent_with_dummy[0] = kDummy;
    for (std::size_t v = 1; v <= n; ++v)
      if (parent_with_dummy[v] > n)
        throw Error(ErrorCode::DanglingParentRank,
                    "vertex " + std::to_string(v) + " has parent " +
                        std::to_string(parent_with_dummy[v]));
    return RootedTree(std::move(parent_with_dummy), std::move(labels));
  }

  std::size_t size() const noexcept { return parent_.size() - 1; }

  Rank root() const noexcept { return 1; }

  Rank parent(Rank v) const noexcept { return parent_[v]; }

  /// Parent vector including the dummy slot 0; parents()[v] == parent(v).
  std::span<const Rank> parents() const noexcept { return parent_; }

  std::span<const Rank> children(Rank v) const noexcept {
    return {child_list_.data() + child_offset_[v],
            child_list_.data() + child_offset_[v + 1]};
  }

  std::size_t outdegree(Rank v) const noexcept {
    return child_offset_[v + 1] - child_offset_[v];
  }

  bool is_leaf(Rank v) const noexcept { return outdegree(v) == 0; }

  std::uint32_t depth(Rank v) const noexcept { return depth_[v]; }

  std::uint32_t height() const noexcept { return max_depth_; }

  bool bfs_monotone() const noexcept { return bfs_monotone_; }

  /// Label carried over from whatever the tree was built from (a Pruefer
  /// label, a pre-canonicalization rank). Defaults to the rank itself.
  Rank original_label(Rank v) const noexcept {
    return labels_.empty() ? v : labels_[v];
  }

  bool has_original_labels() const noexcept { return !labels_.empty(); }

  /// Parent ranks of vertices 1..n, as they appear in the text format.
  std::vector<Rank> parent_array() const {
    return {parent_.begin() + 1, parent_.end()};
  }

  /// Structural equality; original labels are metadata and are ignored.
  friend bool operator==(const RootedTree& a, const RootedTree& b) noexcept {
    return a.parent_ == b.parent_;
  }

 private:
  RootedTree(std::vector<Rank> parent, std::vector<Rank> labels)
      : parent_(std::move(parent)), labels_(std::move(labels)) {
    const auto n = size();
    if (!labels_.empty() && labels_.size() != n + 1)
      throw Error(ErrorCode::TokenCount, "label vector length mismatch");

    std::size_t roots = 0;
    for (std::size_t v = 1; v <= n; ++v)
      if (parent_[v] == kDummy) ++roots;
    if (roots > 1)
      throw Error(ErrorCode::MultipleRoots,
                  std::to_string(roots) + " vertices have parent 0");
    if (roots == 0)
      throw Error(ErrorCode::CycleDetected, "no vertex has parent 0");
    if (parent_[1] != kDummy)
      throw Error(ErrorCode::RootNotFirst, "vertex 1 must be the root");

    // Children by counting sort over ascending child rank.
    child_offset_.assign(n + 2, 0);
    for (std::size_t v = 2; v <= n; ++v) ++child_offset_[parent_[v] + 1];
    for (std::size_t v = 1; v <= n + 1; ++v) child_offset_[v] += child_offset_[v - 1];
    child_list_.resize(n > 0 ? n - 1 : 0);
    {
      std::vector<std::uint32_t> fill(child_offset_.begin(), child_offset_.end() - 1);
      for (std::size_t v = 2; v <= n; ++v)
        child_list_[fill[parent_[v]]++] = static_cast<Rank>(v);
    }

    // Reachability from the root decides acyclicity: every non-root vertex
    // has exactly one parent, so anything unreached sits on a cycle.
    depth_.assign(n + 1, 0);
    std::vector<Rank> queue;
    queue.reserve(n);
    queue.push_back(1);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Rank v = queue[head];
      for (Rank c : children(v)) {
        depth_[c] = depth_[v] + 1;
        queue.push_back(c);
      }
    }
    if (queue.size() != n)
      throw Error(ErrorCode::CycleDetected,
                  std::to_string(n - queue.size()) + " vertices unreachable from root");

    bfs_monotone_ = true;
    max_depth_ = 0;
    for (std::size_t v = 1; v <= n; ++v) {
      max_depth_ = std::max(max_depth_, depth_[v]);
      if (v > 1 && depth_[v] < depth_[v - 1]) bfs_monotone_ = false;
    }
  }

  std::vector<Rank> parent_;
  std::vector<Rank> labels_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<Rank> child_list_;
  std::vector<std::uint32_t> depth_;
  std::uint32_t max_depth_ = 0;
  bool bfs_monotone_ = false;
};

/// A canonicalized tree plus the map from old rank to new rank
/// (new_rank[0] == 0).
struct Canonical {
  RootedTree tree;
  std::vector<Rank> new_rank;
};

/**
 * Re-ranks a tree level by level: root gets 1, its children next (in order),
 * then the children of rank 2, then of rank 3, and so on. The ordered shape
 * is unchanged. Each new vertex keeps the original label of the vertex it
 * came from.
 */
inline Canonical bfs_canonicalize(const RootedTree& tree) {
  const auto n = tree.size();
  std::vector<Rank> order;  // order[new-1] = old
  order.reserve(n);
  order.push_back(1);
  std::vector<Rank> new_rank(n + 1, kDummy);
  new_rank[1] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Rank c : tree.children(order[head])) {
      order.push_back(c);
      new_rank[c] = static_cast<Rank>(order.size());
    }
  }
  std::vector<Rank> parent(n + 1, kDummy);
  std::vector<Rank> labels(n + 1, kDummy);
  for (std::size_t k = 0; k < n; ++k) {
    const Rank old = order[k];
    parent[k + 1] = new_rank[tree.parent(old)];
    labels[k + 1] = tree.original_label(old);
  }
  return {RootedTree::from_parents(std::move(parent), std::move(labels)),
          std::move(new_rank)};
}

/// Returns the tree unchanged when already depth-monotone, else canonicalizes.
inline RootedTree ensure_bfs_monotone(const RootedTree& tree) {
  if (tree.bfs_monotone()) return tree;
  return bfs_canonicalize(tree).tree;
}

/// Preorder (depth-first, left to right) outdegree sequence.
inline std::vector<Rank> dfs_outdegrees(const RootedTree& tree) {
  std::vector<Rank> out;
  out.reserve(tree.size());
  std::vector<Rank> stack{tree.root()};
  while (!stack.empty()) {
    const Rank v = stack.back();
    stack.pop_back();
    out.push_back(static_cast<Rank>(tree.outdegree(v)));
    auto kids = tree.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

/// Sizes of the subtree rooted at each vertex (index 0 unused).
inline std::vector<std::uint32_t> subtree_sizes(const RootedTree& tree) {
  const auto n = tree.size();
  std::vector<std::uint32_t> size(n + 1, 1);
  size[0] = 0;
  // Children always sit deeper than their parent, so sweeping by decreasing
  // depth is enough; a BFS order gives that for any rank assignment.
  std::vector<Rank> order{1};
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Rank c : tree.children(order[head])) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != 1) size[tree.parent(*it)] += size[*it];
  return size;
}

}  // namespace pdtree
