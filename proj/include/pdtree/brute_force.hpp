#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/rooted_tree.hpp"

namespace pdtree {

inline constexpr std::size_t kBruteForceMaxOrder = 18;

namespace detail {

/// Perfect matching test for the subgraph of a forest induced by `set`:
/// a vertex of degree one must be matched to its only neighbour, a vertex
/// of degree zero cannot be matched at all.
inline bool forest_has_perfect_matching(std::uint32_t set,
                                        const std::vector<std::uint32_t>& nb) {
  std::uint32_t rest = set;
  while (rest != 0) {
    bool progressed = false;
    for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
      const int v = std::countr_zero(scan);
      if (!(rest >> v & 1u)) continue;
      const std::uint32_t around = nb[v] & rest;
      const int deg = std::popcount(around);
      if (deg == 0) return false;
      if (deg == 1) {
        rest &= ~(1u << v);
        rest &= ~around;
        progressed = true;
      }
    }
    if (!progressed) return false;  // no leaf: cannot happen in a forest
  }
  return true;
}

inline bool dominates(std::uint32_t set, const std::vector<std::uint32_t>& nb) {
  for (std::size_t v = 0; v < nb.size(); ++v)
    if (!(set >> v & 1u) && (nb[v] & set) == 0) return false;
  return true;
}

}  // namespace detail

/**
 * Exact paired domination number by exhaustive search, for 2 <= n <= 18.
 *
 * Sizes are tried in increasing even order and the first size admitting a
 * dominating set with a perfect matching wins. Every such set must contain
 * the neighbour of each leaf, so those vertices are fixed and only the rest
 * are enumerated.
 */
inline std::size_t gamma_pr_bruteforce(const RootedTree& tree) {
  const std::size_t n = tree.size();
  if (n < 2) throw Error(ErrorCode::SingleVertex, "paired domination needs n >= 2");
  if (n > kBruteForceMaxOrder)
    throw Error(ErrorCode::TooLarge, "exhaustive search limited to n <= 18");

  std::vector<std::uint32_t> nb(n, 0);
  for (std::size_t v = 2; v <= n; ++v) {
    const auto a = v - 1;
    const auto b = tree.parent(static_cast<Rank>(v)) - 1;
    nb[a] |= 1u << b;
    nb[b] |= 1u << a;
  }
  std::uint32_t forced = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (std::popcount(nb[v]) == 1) forced |= nb[v];
  std::vector<int> free_pos;
  for (std::size_t v = 0; v < n; ++v)
    if (!(forced >> v & 1u)) free_pos.push_back(static_cast<int>(v));

  const auto fixed = static_cast<std::size_t>(std::popcount(forced));
  const std::size_t m = free_pos.size();
  for (std::size_t size = 2; size <= n; size += 2) {
    if (size < fixed) continue;
    const std::size_t extra = size - fixed;
    if (extra > m) break;
    if (extra == 0) {
      if (detail::dominates(forced, nb) && detail::forest_has_perfect_matching(forced, nb))
        return size;
      continue;
    }
    // Gosper's hack over m-bit masks with `extra` bits set.
    std::uint32_t pick = (1u << extra) - 1;
    const std::uint32_t limit = 1u << m;
    while (pick < limit) {
      std::uint32_t set = forced;
      for (std::uint32_t b = pick; b != 0; b &= b - 1)
        set |= 1u << free_pos[std::countr_zero(b)];
      if (detail::dominates(set, nb) && detail::forest_has_perfect_matching(set, nb))
        return size;
      const std::uint32_t low = pick & (~pick + 1);
      const std::uint32_t ripple = pick + low;
      pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
  }
  // A tree on n >= 2 vertices always has a paired dominating set.
  throw Error(ErrorCode::DomainError, "no paired dominating set found");
}

}  // namespace pdtree
