#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/offspring.hpp"
#include "pdtree/rng.hpp"
#include "pdtree/rooted_tree.hpp"
#include "pdtree/tree_builders.hpp"

namespace pdtree {

inline constexpr std::uint64_t kDefaultRejectionCap = 10'000'000;

/**
 * Rotates a degree sequence summing to n-1 into the unique cyclic shift
 * that is a Lukasiewicz word: start right after the first position where
 * the walk sum(d_i - 1) reaches its minimum.
 */
inline std::vector<Rank> cycle_lemma_rotate(const std::vector<Rank>& degs) {
  const std::size_t n = degs.size();
  std::int64_t walk = 0, lowest = 0;
  std::size_t argmin = 0;  // walk index j, 1-based; 0 means "before start"
  for (std::size_t j = 1; j <= n; ++j) {
    walk += static_cast<std::int64_t>(degs[j - 1]) - 1;
    if (walk < lowest) {
      lowest = walk;
      argmin = j;
    }
  }
  std::vector<Rank> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = degs[(argmin + k) % n];
  return out;
}

/**
 * Conditioned Galton-Watson tree of exact order n.
 *
 * The outdegree multiset of n i.i.d. offspring draws is sampled
 * (multinomially, via successive binomials) and rejected until the degrees
 * sum to n-1. The multiset is then shuffled into a uniformly random sequence
 * and rotated by the cycle lemma. Since the GW weight of an ordered tree
 * depends only on its degree multiset, the result has the conditioned law.
 */
inline RootedTree sample_conditioned(const OffspringDistribution& dist, std::size_t n,
                                     const SeededRng& rng,
                                     std::uint64_t max_rounds = kDefaultRejectionCap) {
  if (n == 0) throw Error(ErrorCode::EmptyTree, "tree order must be positive");
  auto eng = rng.engine();
  const auto& p = dist.pmf();
  const std::size_t kmax = p.size();
  std::vector<double> tail(kmax + 1, 0.0);
  for (std::size_t k = kmax; k-- > 0;) tail[k] = tail[k + 1] + p[k];

  std::vector<std::size_t> counts(kmax, 0);
  for (std::uint64_t round = 0;; ++round) {
    if (round >= max_rounds)
      throw Error(ErrorCode::RejectionTimeout,
                  "no degree sequence summing to n-1 after " + std::to_string(max_rounds) +
                      " rounds");
    std::size_t remaining = n;
    std::uint64_t sum = 0;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t k = 0; k < kmax && remaining > 0; ++k) {
      std::size_t draw = remaining;
      if (k + 1 < kmax) {
        const double q = std::clamp(p[k] / tail[k], 0.0, 1.0);
        if (q < 1.0) {
          std::binomial_distribution<std::size_t> bin(remaining, q);
          draw = bin(eng);
        }
      }
      counts[k] = draw;
      remaining -= draw;
      sum += static_cast<std::uint64_t>(k) * draw;
      if (sum > n - 1) break;
    }
    if (remaining == 0 && sum == n - 1) break;
  }

  std::vector<Rank> degs;
  degs.reserve(n);
  for (std::size_t k = 0; k < kmax; ++k) degs.insert(degs.end(), counts[k], static_cast<Rank>(k));
  std::shuffle(degs.begin(), degs.end(), eng);
  return from_lukasiewicz(DegreeSequence{cycle_lemma_rotate(degs)});
}

/// Uniform labelled tree on {1..n} (uniform Pruefer sequence) with a
/// uniformly chosen root.
inline RootedTree sample_cayley_uniform(std::size_t n, const SeededRng& rng) {
  if (n == 0) throw Error(ErrorCode::EmptyTree, "tree order must be positive");
  if (n == 1) return RootedTree::from_parent_array({0});
  auto eng = rng.engine();
  std::uniform_int_distribution<std::int64_t> label(1, static_cast<std::int64_t>(n));
  std::vector<std::int64_t> seq(n - 2);
  for (auto& x : seq) x = label(eng);
  const auto root = label(eng);
  return from_pruefer(seq, root);
}

/**
 * Unconditioned Galton-Watson tree grown breadth first, so ranks come out
 * BFS ordered. Returns nullopt once the tree would exceed `size_cap`
 * vertices.
 */
inline std::optional<RootedTree> sample_unconditioned(const OffspringDistribution& dist,
                                                      std::mt19937_64& eng,
                                                      std::size_t size_cap) {
  std::discrete_distribution<std::size_t> xi(dist.pmf().begin(), dist.pmf().end());
  std::vector<Rank> parent{kDummy, kDummy};
  for (std::size_t v = 1; v < parent.size(); ++v) {
    const auto kids = xi(eng);
    if (parent.size() - 1 + kids > size_cap) return std::nullopt;
    parent.insert(parent.end(), kids, static_cast<Rank>(v));
  }
  return RootedTree::from_parents(std::move(parent));
}

}  // namespace pdtree
