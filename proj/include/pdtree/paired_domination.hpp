#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/rooted_tree.hpp"

namespace pdtree {

/**
 * Vertex state after the bottom-up pass.
 *
 *   B  not in the set, not dominated by a child
 *   F  not in the set, dominated by a child
 *   R  in the set, no R child
 *   P  in the set, at least one R child
 */
enum class VertexLabel : std::uint8_t { B, F, R, P };

constexpr char to_char(VertexLabel label) noexcept {
  switch (label) {
    case VertexLabel::B: return 'B';
    case VertexLabel::F: return 'F';
    case VertexLabel::R: return 'R';
    case VertexLabel::P: return 'P';
  }
  return '?';
}

/// Per-vertex vectors are indexed by rank and have length n+1; slot 0 is the
/// dummy vertex.
struct PDResult {
  std::vector<std::uint8_t> in_pd_set;
  std::vector<std::uint8_t> dom_by_child;
  std::vector<Rank> partner;  // 0 = unpaired
  std::vector<VertexLabel> labels;
  std::size_t phi = 0;
  std::size_t gamma_pr = 0;

  std::size_t size() const noexcept { return labels.empty() ? 0 : labels.size() - 1; }

  std::vector<Rank> members() const {
    std::vector<Rank> out;
    out.reserve(gamma_pr);
    for (std::size_t v = 1; v < in_pd_set.size(); ++v)
      if (in_pd_set[v]) out.push_back(static_cast<Rank>(v));
    return out;
  }

  /// Each matched pair once, smaller rank first, sorted.
  std::vector<std::pair<Rank, Rank>> pairs() const {
    std::vector<std::pair<Rank, Rank>> out;
    for (std::size_t v = 1; v < partner.size(); ++v)
      if (partner[v] > v) out.emplace_back(static_cast<Rank>(v), partner[v]);
    return out;
  }

  VertexLabel root_label() const noexcept { return labels[1]; }
};

namespace detail {

inline VertexLabel label_from_state(bool in_set, bool dominated, bool has_r_child) noexcept {
  if (!in_set) return dominated ? VertexLabel::F : VertexLabel::B;
  return has_r_child ? VertexLabel::P : VertexLabel::R;
}

}  // namespace detail

/**
 * Minimum paired dominating set of a tree in O(n).
 *
 * Vertices are visited from rank n down to 2. A vertex that is neither
 * dominated by a child nor adjacent to a chosen parent forces its parent
 * into the set, paired either with the grandparent (when the grandparent is
 * free and the parent is not the root) or with the parent's highest-ranked
 * child not yet in the set. The root is fixed up last by pairing it with
 * vertex 2 if nothing below dominates it.
 *
 * Each vertex is labelled B/F/R/P from its state at the moment it is
 * visited; the root is labelled after the loop and before the root fix-up.
 *
 * Requires n >= 2 and depth nondecreasing in rank.
 */
inline PDResult gamma_pr_linear(const RootedTree& tree) {
  const std::size_t n = tree.size();
  if (n < 2) throw Error(ErrorCode::SingleVertex, "paired domination needs n >= 2");
  if (!tree.bfs_monotone())
    throw Error(ErrorCode::NotCanonical, "ranks must be nondecreasing in depth");

  PDResult res;
  auto& in = res.in_pd_set;
  auto& dom = res.dom_by_child;
  auto& partner = res.partner;
  auto& label = res.labels;
  in.assign(n + 1, 0);
  dom.assign(n + 1, 0);
  partner.assign(n + 1, kDummy);
  label.assign(n + 1, VertexLabel::B);
  std::vector<std::uint8_t> has_r_child(n + 1, 0);
  const auto parent = tree.parents();

  auto pair_up = [&](Rank a, Rank b) {
    in[a] = in[b] = 1;
    partner[a] = b;
    partner[b] = a;
  };

  for (Rank i = static_cast<Rank>(n); i >= 2; --i) {
    label[i] = detail::label_from_state(in[i], dom[i], has_r_child[i]);
    if (label[i] == VertexLabel::R) has_r_child[parent[i]] = 1;

    const Rank p = parent[i];
    const Rank g = parent[p];
    if (dom[i] || in[p]) continue;
    if (p != 1 && !in[g]) {
      pair_up(p, g);
      dom[g] = 1;
      dom[parent[g]] = 1;  // slot 0 when g is the root; harmless
    } else {
      // p is the root or the grandparent is already chosen.
      Rank i1 = kDummy;
      auto kids = tree.children(p);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
        if (!in[*it]) {
          i1 = *it;
          break;
        }
      }
      // i itself is never in the set here (dom[i] is false), so i1 exists.
      if (i1 == kDummy) throw std::logic_error("no free child to pair with");
      pair_up(p, i1);
      dom[p] = 1;
    }
  }

  label[1] = detail::label_from_state(in[1], dom[1], has_r_child[1]);
  if (!dom[1]) {
    pair_up(1, 2);
    dom[1] = 1;
  }
  dom[0] = 0;

  for (std::size_t v = 1; v <= n; ++v) {
    res.gamma_pr += in[v];
    res.phi += label[v] == VertexLabel::R;
  }
  return res;
}

/**
 * Labels computed bottom-up purely from children's labels:
 *   P if some child is R; else R if some child is B; else F if some child is
 *   P; else B (leaf, or all children F).
 * Accepts any tree, including a single vertex (labelled B). Result has
 * length n+1 with slot 0 unused.
 */
inline std::vector<VertexLabel> label_recursive(const RootedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<VertexLabel> label(n + 1, VertexLabel::B);
  std::vector<Rank> order{1};
  order.reserve(n);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Rank c : tree.children(order[head])) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    bool any_r = false, any_b = false, any_p = false;
    for (Rank c : tree.children(*it)) {
      any_r |= label[c] == VertexLabel::R;
      any_b |= label[c] == VertexLabel::B;
      any_p |= label[c] == VertexLabel::P;
    }
    label[*it] = any_r   ? VertexLabel::P
                 : any_b ? VertexLabel::R
                 : any_p ? VertexLabel::F
                         : VertexLabel::B;
  }
  return label;
}

/// Number of R labels among ranks 1..n (labels has length n+1).
inline std::size_t phi_from_labels(std::span<const VertexLabel> labels) {
  std::size_t phi = 0;
  for (std::size_t v = 1; v < labels.size(); ++v) phi += labels[v] == VertexLabel::R;
  return phi;
}

struct LabelArithmetic {
  std::size_t phi = 0;
  std::size_t gamma_pr = 0;
  /// Set for a single vertex, where the formula is applied but the paired
  /// domination number itself is undefined.
  bool vacuous = false;
};

/// gamma_pr = 2 * phi, plus 2 when the root is B.
inline LabelArithmetic gamma_from_labels(std::span<const VertexLabel> labels) {
  LabelArithmetic out;
  out.phi = phi_from_labels(labels);
  out.gamma_pr = 2 * out.phi + (labels.size() > 1 && labels[1] == VertexLabel::B ? 2 : 0);
  out.vacuous = labels.size() <= 2;
  return out;
}

enum class PdSetDefect { None, NotDominating, PairNotAdjacent, NotInvolution, OddMember };

constexpr std::string_view to_string(PdSetDefect d) noexcept {
  switch (d) {
    case PdSetDefect::None: return "None";
    case PdSetDefect::NotDominating: return "NotDominating";
    case PdSetDefect::PairNotAdjacent: return "PairNotAdjacent";
    case PdSetDefect::NotInvolution: return "NotInvolution";
    case PdSetDefect::OddMember: return "OddMember";
  }
  return "?";
}

struct PdSetCheck {
  bool ok = false;
  PdSetDefect reason = PdSetDefect::None;
  Rank witness = kDummy;  // offending vertex, when there is one

  explicit operator bool() const noexcept { return ok; }
};

/**
 * Checks that `members` dominates the tree and that `partner` (length n+1,
 * 0 for unpaired) is a perfect matching of the induced subgraph.
 */
inline PdSetCheck verify_pd_set(const RootedTree& tree, std::span<const Rank> members,
                                std::span<const Rank> partner) {
  const std::size_t n = tree.size();
  auto fail = [](PdSetDefect d, Rank w) { return PdSetCheck{false, d, w}; };
  std::vector<std::uint8_t> in(n + 1, 0);
  for (Rank m : members) {
    if (m < 1 || m > n || in[m]) return fail(PdSetDefect::NotInvolution, m);
    in[m] = 1;
  }
  if (members.size() % 2 != 0) return fail(PdSetDefect::OddMember, kDummy);
  if (partner.size() != n + 1) return fail(PdSetDefect::NotInvolution, kDummy);
  for (std::size_t v = 1; v <= n; ++v) {
    const Rank p = partner[v];
    if (!in[v]) {
      if (p != kDummy) return fail(PdSetDefect::NotInvolution, static_cast<Rank>(v));
      continue;
    }
    if (p == kDummy) return fail(PdSetDefect::OddMember, static_cast<Rank>(v));
    if (p > n || p == v || !in[p] || partner[p] != v)
      return fail(PdSetDefect::NotInvolution, static_cast<Rank>(v));
    if (tree.parent(p) != v && tree.parent(static_cast<Rank>(v)) != p)
      return fail(PdSetDefect::PairNotAdjacent, static_cast<Rank>(v));
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (in[v]) continue;
    bool covered = in[tree.parent(static_cast<Rank>(v))] != 0;
    for (Rank c : tree.children(static_cast<Rank>(v))) covered = covered || in[c];
    if (!covered) return fail(PdSetDefect::NotDominating, static_cast<Rank>(v));
  }
  return {true, PdSetDefect::None, kDummy};
}

inline PdSetCheck verify_pd_set(const RootedTree& tree, const PDResult& result) {
  const auto members = result.members();
  return verify_pd_set(tree, members, result.partner);
}

}  // namespace pdtree
