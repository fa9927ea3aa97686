#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/format.hpp"
#include "pdtree/gw_sampler.hpp"
#include "pdtree/offspring.hpp"
#include "pdtree/paired_domination.hpp"
#include "pdtree/rng.hpp"
#include "pdtree/statistics.hpp"

namespace pdtree {

enum class SamplerRoute { ConditionedGw, Pruefer };

struct SimConfig {
  OffspringDistribution dist = OffspringDistribution::labelled();
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  SamplerRoute route = SamplerRoute::ConditionedGw;
};

struct SimSummary {
  std::string model;
  std::size_t n = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  double mean_gamma = 0.0;
  double var_gamma = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  std::map<std::size_t, std::uint64_t> histogram;
  double mu_hat = 0.0;
  double sigma_hat = 0.0;

  friend bool operator==(const SimSummary&, const SimSummary&) = default;
};

/// Draw `stream` of a simulation: a tree of order n from the chosen route.
inline RootedTree sample_tree(const OffspringDistribution& dist, std::size_t n,
                              std::uint64_t seed, std::uint64_t stream, SamplerRoute route) {
  const SeededRng rng{seed, stream};
  if (route == SamplerRoute::Pruefer) {
    if (dist.kind() != OffspringKind::Labelled)
      throw Error(ErrorCode::InvalidDistribution, "Pruefer route only samples labelled trees");
    return sample_cayley_uniform(n, rng);
  }
  return sample_conditioned(dist, n, rng);
}

namespace detail {

inline constexpr std::size_t kSimBlock = 64;

struct SimBlock {
  stats::Moments moments;
  std::map<std::size_t, std::uint64_t> histogram;
};

}  // namespace detail

/**
 * Samples `reps` trees (draw k uses stream k), computes each paired
 * domination number and aggregates moments and the exact-value histogram.
 *
 * Work is split into fixed blocks of draws; each block's moments are merged
 * in block order after all workers finish, so the summary is bit-identical
 * for any worker count.
 */
inline SimSummary run_simulation(const SimConfig& cfg) {
  if (cfg.n < 2) throw Error(ErrorCode::DomainError, "simulation needs n >= 2");
  if (cfg.reps < 1) throw Error(ErrorCode::DomainError, "simulation needs reps >= 1");

  const std::size_t blocks = (cfg.reps + detail::kSimBlock - 1) / detail::kSimBlock;
  std::vector<detail::SimBlock> results(blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto work = [&] {
    try {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= blocks || failed.load()) return;
        auto& out = results[b];
        const std::size_t lo = b * detail::kSimBlock;
        const std::size_t hi = std::min(cfg.reps, lo + detail::kSimBlock);
        for (std::size_t k = lo; k < hi; ++k) {
          const auto tree = sample_tree(cfg.dist, cfg.n, cfg.seed, k, cfg.route);
          const auto gamma = gamma_pr_linear(tree).gamma_pr;
          out.moments.add(static_cast<double>(gamma));
          ++out.histogram[gamma];
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, cfg.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  stats::Moments total;
  SimSummary s;
  for (const auto& block : results) {
    total.merge(block.moments);
    for (auto [g, c] : block.histogram) s.histogram[g] += c;
  }
  s.model = cfg.dist.name();
  s.n = cfg.n;
  s.reps = cfg.reps;
  s.seed = cfg.seed;
  s.mean_gamma = total.mean();
  s.var_gamma = total.variance();
  s.skewness = total.skewness();
  s.excess_kurtosis = total.excess_kurtosis();
  s.mu_hat = s.mean_gamma / static_cast<double>(cfg.n);
  s.sigma_hat = std::sqrt(s.var_gamma / static_cast<double>(cfg.n));
  return s;
}

struct NormalityThresholds {
  double max_abs_skewness = 0.15;
  double max_abs_excess_kurtosis = 0.3;
  double min_p_value = 0.001;
};

struct NormalityReport {
  double abs_skewness = 0.0;
  double abs_excess_kurtosis = 0.0;
  bool degenerate = false;
  std::optional<stats::ChiSquare> deciles;
  bool skewness_ok = false;
  bool kurtosis_ok = false;
  bool chi_square_ok = false;

  bool pass() const noexcept { return !degenerate && skewness_ok && kurtosis_ok && chi_square_ok; }
};

inline constexpr std::size_t kMinDiagnosticReps = 500;

/**
 * Compares the standardized sample to N(0,1) deciles. Each observed value g
 * stands for the lattice cell [g-1, g+1] and its count is spread uniformly
 * over that cell before binning. Mean and variance are estimated, so the
 * test has 10 - 1 - 2 = 7 degrees of freedom.
 */
inline NormalityReport normality_diagnostics(const SimSummary& s,
                                             const NormalityThresholds& th = {}) {
  if (s.reps < kMinDiagnosticReps)
    throw Error(ErrorCode::InsufficientReps,
                "need at least " + std::to_string(kMinDiagnosticReps) + " samples");
  NormalityReport r;
  r.abs_skewness = std::abs(s.skewness);
  r.abs_excess_kurtosis = std::abs(s.excess_kurtosis);
  if (!(s.var_gamma > 0.0)) {
    r.degenerate = true;
    return r;
  }
  r.skewness_ok = r.abs_skewness < th.max_abs_skewness;
  r.kurtosis_ok = r.abs_excess_kurtosis < th.max_abs_excess_kurtosis;

  constexpr int kBins = 10;
  std::array<double, kBins + 1> edge{};
  edge[0] = -INFINITY;
  edge[kBins] = INFINITY;
  for (int k = 1; k < kBins; ++k) edge[k] = stats::normal_quantile(k / 10.0);
  const double sd = std::sqrt(s.var_gamma);
  std::array<double, kBins> observed{};
  for (auto [g, count] : s.histogram) {
    const double lo = (static_cast<double>(g) - 1.0 - s.mean_gamma) / sd;
    const double hi = (static_cast<double>(g) + 1.0 - s.mean_gamma) / sd;
    for (int k = 0; k < kBins; ++k) {
      const double overlap = std::min(hi, edge[k + 1]) - std::max(lo, edge[k]);
      if (overlap > 0.0) observed[k] += static_cast<double>(count) * overlap / (hi - lo);
    }
  }
  std::array<double, kBins> prob{};
  prob.fill(0.1);
  r.deciles = stats::chi_square_gof(observed, prob, 2, 0.0);
  r.chi_square_ok = r.deciles->p_value > th.min_p_value;
  return r;
}

/// key=value lines for every scalar of the summary, fixed order.
inline std::string summary_key_values(const SimSummary& s) {
  std::ostringstream out;
  out << "model=" << s.model << '\n'
      << "n=" << s.n << '\n'
      << "reps=" << s.reps << '\n'
      << "seed=" << s.seed << '\n'
      << "mean_gamma=" << format_double(s.mean_gamma) << '\n'
      << "var_gamma=" << format_double(s.var_gamma) << '\n'
      << "skewness=" << format_double(s.skewness) << '\n'
      << "excess_kurtosis=" << format_double(s.excess_kurtosis) << '\n'
      << "mu_hat=" << format_double(s.mu_hat) << '\n'
      << "sigma_hat=" << format_double(s.sigma_hat) << '\n';
  return out.str();
}

/// Summary fields as '#' comment lines, then "gamma_pr,count" rows.
inline std::string histogram_csv(const SimSummary& s) {
  std::ostringstream out;
  std::istringstream kv(summary_key_values(s));
  for (std::string line; std::getline(kv, line);) out << "# " << line << '\n';
  out << "gamma_pr,count\n";
  for (auto [g, c] : s.histogram) out << g << ',' << c << '\n';
  return out.str();
}

struct RootLabelFrequencies {
  std::array<std::uint64_t, 4> counts{};  // B, F, R, P
  std::uint64_t draws = 0;
  std::uint64_t cap_hits = 0;

  double frequency(VertexLabel label) const noexcept {
    return draws == 0 ? 0.0
                      : static_cast<double>(counts[static_cast<std::size_t>(label)]) /
                            static_cast<double>(draws);
  }
};

/**
 * Root labels of `draws` unconditioned GW trees. A tree that outgrows
 * `size_cap` is thrown away and redrawn from the same stream; the number of
 * such redraws is reported.
 */
inline RootLabelFrequencies root_label_frequencies(const OffspringDistribution& dist,
                                                   std::size_t draws, std::uint64_t seed,
                                                   std::size_t size_cap = 1'000'000) {
  RootLabelFrequencies out;
  for (std::size_t k = 0; k < draws; ++k) {
    auto eng = SeededRng{seed, k}.engine();
    for (;;) {
      auto tree = sample_unconditioned(dist, eng, size_cap);
      if (!tree) {
        ++out.cap_hits;
        continue;
      }
      const auto labels = label_recursive(*tree);
      ++out.counts[static_cast<std::size_t>(labels[1])];
      break;
    }
    ++out.draws;
  }
  return out;
}

}  // namespace pdtree
