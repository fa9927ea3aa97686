#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "pdtree/rooted_tree.hpp"
#include "pdtree/tree_io.hpp"
#include "test_support.hpp"

using namespace pdtree;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected pdtree::Error";
  return ErrorCode::DomainError;
}

std::map<std::uint32_t, std::size_t> depth_profile(const RootedTree& t) {
  std::map<std::uint32_t, std::size_t> out;
  for (Rank v = 1; v <= t.size(); ++v) ++out[t.depth(v)];
  return out;
}

std::vector<std::uint32_t> sorted_subtree_sizes(const RootedTree& t) {
  auto s = subtree_sizes(t);
  s.erase(s.begin());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(RootedTree, Example15ParentArray) {
  const auto t = RootedTree::from_parent_array({0, 1, 1, 1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 12, 12});
  EXPECT_EQ(t.size(), 15u);
  EXPECT_TRUE(t.bfs_monotone());
  EXPECT_EQ(t.parent(1), 0u);
  EXPECT_EQ(t.height(), 4u);
  const auto kids = t.children(3);
  EXPECT_EQ(std::vector<Rank>(kids.begin(), kids.end()), (std::vector<Rank>{6, 7, 8}));
  EXPECT_TRUE(t.is_leaf(15));
}

TEST(RootedTree, SingleVertex) {
  const auto t = RootedTree::from_parent_array({0});
  EXPECT_EQ(t.size(), 1u);
  EXPECT_TRUE(t.bfs_monotone());
  EXPECT_TRUE(t.children(1).empty());
}

TEST(RootedTree, ValidButNotMonotone) {
  const auto t = RootedTree::from_parent_array({0, 1, 2, 1});
  EXPECT_FALSE(t.bfs_monotone());
  EXPECT_EQ(t.depth(3), 2u);
  EXPECT_EQ(t.depth(4), 1u);
}

TEST(RootedTree, RejectsBadArrays) {
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({0, 3, 2}); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({0, 2}); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({0, 0, 1}); }), ErrorCode::MultipleRoots);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({0, 4}); }), ErrorCode::DanglingParentRank);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({0, -1}); }), ErrorCode::DanglingParentRank);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({2, 0}); }), ErrorCode::RootNotFirst);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array({2, 1}); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { RootedTree::from_parent_array(std::vector<std::int64_t>{}); }),
            ErrorCode::EmptyTree);
}

TEST(Canonicalize, Example15IsFixed) {
  const auto t = pdtree::example15_tree();
  const auto c = bfs_canonicalize(t);
  EXPECT_EQ(c.tree, t);
  for (Rank v = 0; v <= t.size(); ++v) EXPECT_EQ(c.new_rank[v], v);
}

TEST(Canonicalize, RelabelsDeepVertexLast) {
  const auto t = RootedTree::from_parent_array({0, 1, 2, 1});
  const auto c = bfs_canonicalize(t);
  EXPECT_TRUE(c.tree.bfs_monotone());
  EXPECT_EQ(c.tree.parent_array(), (std::vector<Rank>{0, 1, 1, 2}));
  EXPECT_EQ(c.new_rank[2], 2u);
  EXPECT_EQ(c.new_rank[4], 3u);
  EXPECT_EQ(c.new_rank[3], 4u);
  EXPECT_EQ(c.tree.original_label(4), 3u);
}

TEST(Canonicalize, PropertiesOnRandomTrees) {
  std::mt19937_64 eng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + eng() % 60;
    const auto t = testkit::random_shuffled_tree(n, eng);
    const auto c = bfs_canonicalize(t);
    ASSERT_TRUE(c.tree.bfs_monotone());
    EXPECT_EQ(bfs_canonicalize(c.tree).tree, c.tree);
    EXPECT_EQ(depth_profile(c.tree), depth_profile(t));
    EXPECT_EQ(sorted_subtree_sizes(c.tree), sorted_subtree_sizes(t));
    EXPECT_EQ(dfs_outdegrees(c.tree), dfs_outdegrees(t));
    // Children of lower ranks come first.
    Rank last_parent = 0;
    for (Rank v = 2; v <= n; ++v) {
      EXPECT_GE(c.tree.parent(v), last_parent);
      last_parent = c.tree.parent(v);
    }
    // new_rank is a bijection consistent with the parent relation.
    for (Rank v = 2; v <= n; ++v)
      EXPECT_EQ(c.tree.parent(c.new_rank[v]), c.new_rank[t.parent(v)]);
  }
}

TEST(TreeText, SerializeExample15) {
  EXPECT_EQ(serialize(pdtree::example15_tree()), "15\n0 1 1 1 2 3 3 3 4 5 6 7 8 12 12");
}

TEST(TreeText, ParseSingleVertex) {
  const auto t = parse("1\n0");
  EXPECT_EQ(t.size(), 1u);
}

TEST(TreeText, ParseToleratesTrailingWhitespace) {
  EXPECT_EQ(parse("3\n0 1 1\n\n"), RootedTree::from_parent_array({0, 1, 1}));
  EXPECT_EQ(parse("3\n0 1\n 1 "), RootedTree::from_parent_array({0, 1, 1}));
}

TEST(TreeText, ParseErrors) {
  EXPECT_EQ(code_of([] { parse(""); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse("x\n0"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse("0\n"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse("2 3\n0 1"); }), ErrorCode::MalformedHeader);
  EXPECT_EQ(code_of([] { parse("3\n0 1"); }), ErrorCode::TokenCount);
  EXPECT_EQ(code_of([] { parse("2\n0 1 1"); }), ErrorCode::TokenCount);
  EXPECT_EQ(code_of([] { parse("2\n0 a"); }), ErrorCode::TokenCount);
  EXPECT_EQ(code_of([] { parse("2\n0 5"); }), ErrorCode::DanglingParentRank);
}

TEST(TreeText, RoundTripRandomCayleyTrees) {
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const std::size_t n = 1 + k % 97;
    const auto t = sample_cayley_uniform(n, SeededRng{2024, k});
    const auto back = parse(serialize(t));
    ASSERT_EQ(back, t);
    ASSERT_EQ(back.parent_array(), t.parent_array());
  }
}
