#include <gtest/gtest.h>

#include <cmath>

#include "pdtree/offspring.hpp"

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

}  // namespace

TEST(Offspring, BuiltinsAreCritical) {
  for (const char* name : {"binary", "plane", "labelled"}) {
    const auto d = OffspringDistribution::builtin(name);
    EXPECT_NEAR(d.mean(), 1.0, 1e-12) << name;
    EXPECT_NEAR(d.pgf(1.0), 1.0, 1e-15) << name;
    EXPECT_NEAR(d.pgf_series(1.0), 1.0, 1e-12) << name;
    EXPECT_GT(d.variance(), 0.0);
  }
  EXPECT_NEAR(OffspringDistribution::binary().variance(), 0.5, 1e-15);
  EXPECT_NEAR(OffspringDistribution::plane().variance(), 2.0, 1e-9);
  EXPECT_NEAR(OffspringDistribution::labelled().variance(), 1.0, 1e-9);
}

TEST(Offspring, PgfClosedForms) {
  EXPECT_DOUBLE_EQ(OffspringDistribution::binary().pgf(0.5), 0.5625);
  EXPECT_DOUBLE_EQ(OffspringDistribution::plane().pgf(0.5), 2.0 / 3.0);
  EXPECT_NEAR(OffspringDistribution::labelled().pgf(0.5), std::exp(-0.5), 1e-15);
  EXPECT_DOUBLE_EQ(OffspringDistribution::plane().pgf(0.0), 0.5);
}

TEST(Offspring, TruncatedSeriesMatchesClosedForm) {
  for (const char* name : {"binary", "plane", "labelled"}) {
    const auto d = OffspringDistribution::builtin(name);
    for (double x = 0.0; x <= 1.0; x += 0.05) EXPECT_NEAR(d.pgf_series(x), d.pgf(x), 1e-12);
  }
  EXPECT_NEAR(OffspringDistribution::labelled().pgf_series(0.5), std::exp(-0.5), 1e-12);
}

TEST(Offspring, PgfDomain) {
  EXPECT_EQ(code_of([] { OffspringDistribution::plane().pgf(1.5); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([] { OffspringDistribution::plane().pgf(-0.1); }), ErrorCode::DomainError);
}

TEST(Offspring, MinimalBranchingDegree) {
  EXPECT_EQ(OffspringDistribution::binary().d0(), 2u);
  EXPECT_EQ(OffspringDistribution::plane().d0(), 2u);
  EXPECT_EQ(OffspringDistribution::custom({9.0 / 11, 0, 0, 0, 0, 1.0 / 11, 1.0 / 11}).d0(), 5u);
  EXPECT_EQ(OffspringDistribution::custom({0.4, 0.3, 0.2, 0.1}).d0(), 2u);
}

TEST(Offspring, CustomValidation) {
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({0.5, 0.5}); }),
            ErrorCode::InvalidDistribution);  // variance 0 and not critical
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({0.3, 0.3, 0.4}); }),
            ErrorCode::InvalidDistribution);  // mean 1.1
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({0.0, 1.0}); }),
            ErrorCode::InvalidDistribution);  // no leaves
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({0.5, 0.0, 0.6}); }),
            ErrorCode::InvalidDistribution);  // sum != 1
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({0.5, 0.0, 0.5 + 1e-9}); }),
            ErrorCode::InvalidDistribution);
  EXPECT_EQ(code_of([] { OffspringDistribution::custom({-0.1, 1.2, -0.1}); }),
            ErrorCode::InvalidDistribution);
  EXPECT_EQ(code_of([] { OffspringDistribution::builtin("poisson"); }),
            ErrorCode::InvalidDistribution);
}

TEST(Offspring, PmfText) {
  const auto d = OffspringDistribution::from_pmf_text("# binary\n0 0.25\n1 0.5\n\n2 0.25\n");
  EXPECT_EQ(d.pmf(), (std::vector<double>{0.25, 0.5, 0.25}));
  EXPECT_EQ(d.kind(), OffspringKind::Custom);
  const auto sparse = OffspringDistribution::from_pmf_text("3 0.25\n0 0.625\n2 0.125\n");
  EXPECT_DOUBLE_EQ(sparse.pmf(1), 0.0);
  EXPECT_EQ(sparse.max_degree(), 3u);
  EXPECT_EQ(code_of([] { OffspringDistribution::from_pmf_text("0 0.5 1\n"); }),
            ErrorCode::InvalidDistribution);
  EXPECT_EQ(code_of([] { OffspringDistribution::from_pmf_text("0 0.5\n0 0.5\n"); }),
            ErrorCode::InvalidDistribution);
  EXPECT_EQ(code_of([] { OffspringDistribution::from_pmf_text(""); }),
            ErrorCode::InvalidDistribution);
}

TEST(Offspring, PmfFile) {
  const auto d = OffspringDistribution::from_pmf_file(PDTREE_TEST_DATA "/binary.pmf");
  EXPECT_EQ(d.pmf(), OffspringDistribution::binary().pmf());
}
