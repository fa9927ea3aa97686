#include <gtest/gtest.h>

#include <map>

#include "pdtree/gw_sampler.hpp"
#include "pdtree/simulation.hpp"
#include "test_support.hpp"

using namespace pdtree;

namespace {

// Chi-square of sampled ordered shapes against the exact conditioned law.
stats::ChiSquare shape_fit(const OffspringDistribution& dist, std::size_t n, std::size_t draws,
                           std::uint64_t seed, SamplerRoute route) {
  const auto law = testkit::conditioned_gw_law(dist, n);
  std::map<std::vector<Rank>, double> counts;
  for (std::size_t k = 0; k < draws; ++k)
    ++counts[degree_sequence(sample_tree(dist, n, seed, k, route)).degs];
  std::vector<double> observed, probs;
  for (auto& [word, p] : law) {
    observed.push_back(counts.count(word) ? counts[word] : 0.0);
    probs.push_back(p);
    counts.erase(word);
  }
  // Shapes the law forbids.
  double stray = 0;
  for (auto& [word, c] : counts) stray += c;
  observed.push_back(stray);
  probs.push_back(0.0);
  return stats::chi_square_gof(observed, probs);
}

}  // namespace

TEST(CycleLemma, RotatesToValidWord) {
  EXPECT_EQ(cycle_lemma_rotate({0, 2, 0}), (std::vector<Rank>{2, 0, 0}));
  EXPECT_EQ(cycle_lemma_rotate({0, 0, 2}), (std::vector<Rank>{2, 0, 0}));
  EXPECT_EQ(cycle_lemma_rotate({2, 0, 0}), (std::vector<Rank>{2, 0, 0}));
  EXPECT_EQ(cycle_lemma_rotate({0, 1, 0, 2}), (std::vector<Rank>{2, 0, 1, 0}));
  EXPECT_EQ(cycle_lemma_rotate({0}), (std::vector<Rank>{0}));
}

TEST(CycleLemma, ExactlyOneRotationIsValid) {
  std::mt19937_64 eng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + eng() % 30;
    std::vector<Rank> degs(n, 0);
    for (std::size_t k = 0; k + 1 < n; ++k) ++degs[eng() % n];
    const auto rot = cycle_lemma_rotate(degs);
    EXPECT_NO_THROW(validate_lukasiewicz(rot));
    std::size_t valid = 0;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Rank> r(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = degs[(s + k) % n];
      try {
        validate_lukasiewicz(r);
        ++valid;
      } catch (const Error&) {
      }
    }
    EXPECT_EQ(valid, 1u);
  }
}

TEST(Sampler, TrivialOrders) {
  for (const char* m : {"binary", "plane", "labelled"}) {
    const auto d = OffspringDistribution::builtin(m);
    EXPECT_EQ(sample_conditioned(d, 1, SeededRng{1, 0}).size(), 1u);
    EXPECT_EQ(sample_conditioned(d, 2, SeededRng{1, 0}).parent_array(),
              (std::vector<Rank>{0, 1}));
  }
  EXPECT_EQ(sample_cayley_uniform(2, SeededRng{5, 0}).parent_array(), (std::vector<Rank>{0, 1}));
  EXPECT_THROW(sample_conditioned(OffspringDistribution::plane(), 0, SeededRng{1, 0}), Error);
}

TEST(Sampler, PlaneOrderThreeIsFair) {
  // Two plane trees of order 3, equally likely.
  const auto d = OffspringDistribution::plane();
  std::size_t cherries = 0;
  const std::size_t draws = 20000;
  for (std::size_t k = 0; k < draws; ++k)
    cherries += sample_conditioned(d, 3, SeededRng{77, k}).outdegree(1) == 2;
  EXPECT_NEAR(static_cast<double>(cherries) / draws, 0.5, 0.02);
}

TEST(Sampler, CayleyOrderThree) {
  // Rooted labelled trees on 3 vertices: 9, of which 3 are cherries.
  std::size_t cherries = 0;
  const std::size_t draws = 30000;
  for (std::size_t k = 0; k < draws; ++k)
    cherries += sample_cayley_uniform(3, SeededRng{78, k}).outdegree(1) == 2;
  EXPECT_NEAR(static_cast<double>(cherries) / draws, 1.0 / 3.0, 0.015);
}

TEST(Sampler, ExactShapeLawSmallOrders) {
  for (const char* m : {"binary", "plane", "labelled"}) {
    const auto d = OffspringDistribution::builtin(m);
    for (std::size_t n = 3; n <= 6; ++n) {
      const auto r = shape_fit(d, n, 20000, 1000 + n, SamplerRoute::ConditionedGw);
      EXPECT_GT(r.p_value, 1e-3) << m << " n=" << n << " chi2=" << r.statistic;
    }
  }
  const auto pois = OffspringDistribution::labelled();
  for (std::size_t n = 3; n <= 6; ++n)
    EXPECT_GT(shape_fit(pois, n, 20000, 2000 + n, SamplerRoute::Pruefer).p_value, 1e-3) << n;
}

TEST(Sampler, CustomLawWithGaps) {
  // Support {0, 3, 4}: order 3 is impossible, order 8 needs degrees 3 and 4.
  const auto d = OffspringDistribution::custom({5.0 / 7, 0.0, 0.0, 1.0 / 7, 1.0 / 7});
  const auto t = sample_conditioned(d, 8, SeededRng{3, 0});
  for (Rank v = 1; v <= t.size(); ++v) EXPECT_NE(t.outdegree(v), 1u);
  EXPECT_GT(shape_fit(d, 8, 5000, 9, SamplerRoute::ConditionedGw).p_value, 1e-3);
  EXPECT_THROW(OffspringDistribution::custom({2.0 / 3, 0.0, 0.0, 1.0 / 3}), Error);  // periodic
  try {
    sample_conditioned(d, 3, SeededRng{3, 0}, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RejectionTimeout);
  }
}

TEST(Sampler, Deterministic) {
  const auto d = OffspringDistribution::labelled();
  EXPECT_EQ(sample_conditioned(d, 500, SeededRng{42, 3}), sample_conditioned(d, 500, SeededRng{42, 3}));
  EXPECT_NE(sample_conditioned(d, 500, SeededRng{42, 3}), sample_conditioned(d, 500, SeededRng{42, 4}));
  EXPECT_EQ(sample_cayley_uniform(500, SeededRng{1, 1}), sample_cayley_uniform(500, SeededRng{1, 1}));
}

TEST(Sampler, OutputIsCanonical) {
  for (std::uint64_t k = 0; k < 200; ++k) {
    for (const char* m : {"binary", "plane", "labelled"}) {
      const auto t = sample_conditioned(OffspringDistribution::builtin(m), 1 + k, SeededRng{6, k});
      ASSERT_EQ(t.size(), 1 + k);
      ASSERT_TRUE(t.bfs_monotone());
    }
  }
}

TEST(Sampler, RoutesAgreeOnGammaLaw) {
  const auto d = OffspringDistribution::labelled();
  for (std::size_t n = 4; n <= 8; ++n) {
    std::map<std::size_t, double> gw, pr;
    for (std::uint64_t k = 0; k < 5000; ++k) {
      ++gw[gamma_pr_linear(sample_tree(d, n, 31, k, SamplerRoute::ConditionedGw)).gamma_pr];
      ++pr[gamma_pr_linear(sample_tree(d, n, 32, k, SamplerRoute::Pruefer)).gamma_pr];
    }
    EXPECT_GT(stats::chi_square_homogeneity(gw, pr).p_value, 1e-3) << n;
  }
}

TEST(Sampler, UnconditionedRespectsCap) {
  const auto d = OffspringDistribution::plane();
  std::mt19937_64 eng(10);
  std::size_t capped = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto t = sample_unconditioned(d, eng, 50);
    if (!t) {
      ++capped;
      continue;
    }
    EXPECT_LE(t->size(), 50u);
    EXPECT_TRUE(t->bfs_monotone());
  }
  EXPECT_GT(capped, 0u);
}
