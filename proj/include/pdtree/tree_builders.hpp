#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/rooted_tree.hpp"

namespace pdtree {

/// Preorder outdegrees of an ordered tree (a Lukasiewicz word).
struct DegreeSequence {
  std::vector<Rank> degs;

  std::size_t size() const noexcept { return degs.size(); }

  /// D_j: number of vertices with outdegree j.
  std::map<Rank, std::size_t> tally() const {
    std::map<Rank, std::size_t> counts;
    for (Rank d : degs) ++counts[d];
    return counts;
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// Throws WrongTotal or InvalidPrefix when `degs` is not a Lukasiewicz word.
inline void validate_lukasiewicz(std::span<const Rank> degs) {
  const std::size_t n = degs.size();
  if (n == 0) throw Error(ErrorCode::EmptyTree, "empty degree sequence");
  std::uint64_t total = 0;
  for (Rank d : degs) total += d;
  if (total != n - 1)
    throw Error(ErrorCode::WrongTotal, "degree sum " + std::to_string(total) +
                                           " != n-1 = " + std::to_string(n - 1));
  std::uint64_t prefix = 0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += degs[k - 1];
    if (prefix < k)
      throw Error(ErrorCode::InvalidPrefix,
                  "prefix of length " + std::to_string(k) + " sums to " +
                      std::to_string(prefix));
  }
}

/// Ordered tree whose preorder outdegrees are `degs`, in BFS ranks.
inline RootedTree from_lukasiewicz(const DegreeSequence& seq) {
  const auto& degs = seq.degs;
  validate_lukasiewicz(degs);
  const std::size_t n = degs.size();
  std::vector<Rank> parent(n + 1, kDummy);
  // (vertex, children still to attach)
  std::vector<std::pair<Rank, Rank>> open;
  open.emplace_back(1, degs[0]);
  for (std::size_t k = 2; k <= n; ++k) {
    while (open.back().second == 0) open.pop_back();
    parent[k] = open.back().first;
    --open.back().second;
    open.emplace_back(static_cast<Rank>(k), degs[k - 1]);
  }
  return bfs_canonicalize(RootedTree::from_parents(std::move(parent))).tree;
}

inline DegreeSequence degree_sequence(const RootedTree& tree) {
  return {dfs_outdegrees(tree)};
}

/**
 * Decodes a Pruefer sequence over labels 1..n (n = seq.size() + 2) and roots
 * the labelled tree at `root`. Children are ordered by ascending label, then
 * ranks are assigned breadth first. original_label() gives each rank's label.
 */
inline RootedTree from_pruefer(std::span<const std::int64_t> seq, std::int64_t root) {
  const std::size_t n = seq.size() + 2;
  for (auto x : seq)
    if (x < 1 || x > static_cast<std::int64_t>(n))
      throw Error(ErrorCode::SequenceEntryOutOfRange,
                  "entry " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
  if (root < 1 || root > static_cast<std::int64_t>(n))
    throw Error(ErrorCode::SequenceEntryOutOfRange,
                "root " + std::to_string(root) + " outside [1," + std::to_string(n) + "]");

  // Linear-time decode on 0-based labels.
  std::vector<std::uint32_t> degree(n, 1);
  for (auto x : seq) ++degree[static_cast<std::size_t>(x - 1)];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (auto x : seq) {
    const auto v = static_cast<std::size_t>(x - 1);
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);

  std::vector<std::uint32_t> offset(n + 1, 0);
  for (auto [a, b] : edges) {
    ++offset[a + 1];
    ++offset[b + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) offset[i] += offset[i - 1];
  std::vector<std::uint32_t> adj(2 * (n - 1));
  {
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    for (auto [a, b] : edges) {
      adj[fill[a]++] = b;
      adj[fill[b]++] = a;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(adj.begin() + offset[i], adj.begin() + offset[i + 1]);

  std::vector<Rank> parent(n + 1, kDummy);
  std::vector<Rank> labels(n + 1, kDummy);
  std::vector<Rank> rank_of(n, kDummy);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  const auto r = static_cast<std::uint32_t>(root - 1);
  order.push_back(r);
  rank_of[r] = 1;
  labels[1] = r + 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto u = order[head];
    for (auto k = offset[u]; k < offset[u + 1]; ++k) {
      const auto w = adj[k];
      if (rank_of[w] != kDummy) continue;
      order.push_back(w);
      const auto rw = static_cast<Rank>(order.size());
      rank_of[w] = rw;
      parent[rw] = rank_of[u];
      labels[rw] = w + 1;
    }
  }
  return RootedTree::from_parents(std::move(parent), std::move(labels));
}

inline RootedTree from_pruefer(std::initializer_list<std::int64_t> seq, std::int64_t root) {
  return from_pruefer(std::span<const std::int64_t>(seq.begin(), seq.size()), root);
}

/**
 * Calls `visit(degs)` once for each ordered tree of order n, in
 * lexicographically decreasing Lukasiewicz order. There are Catalan(n-1)
 * of them.
 */
inline void for_each_lukasiewicz(std::size_t n,
                                 const std::function<void(std::span<const Rank>)>& visit) {
  if (n == 0) return;
  std::vector<Rank> degs(n, 0);
  // open = slots still to fill after position k, must stay >= 1 until the end.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t open) {
    if (k == n) {
      if (open == 0) visit(degs);
      return;
    }
    // After placing d at k, open' = open - 1 + d; need open' >= 1 unless k is
    // last, and open' <= n - k - 1 so the remaining vertices can close it.
    const std::size_t remaining = n - k - 1;
    for (std::size_t d = remaining + 1; d-- > 0;) {
      const std::size_t next = open - 1 + d;
      if (next > remaining) continue;
      if (k + 1 < n && next == 0) continue;
      degs[k] = static_cast<Rank>(d);
      rec(k + 1, next);
    }
  };
  rec(0, 1);
}

/// All ordered trees of order n, BFS ranked.
inline void for_each_ordered_tree(std::size_t n,
                                  const std::function<void(const RootedTree&)>& visit) {
  for_each_lukasiewicz(n, [&](std::span<const Rank> degs) {
    visit(from_lukasiewicz(DegreeSequence{{degs.begin(), degs.end()}}));
  });
}

}  // namespace pdtree
