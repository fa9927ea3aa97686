#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pdtree/error.hpp"
#include "pdtree/offspring.hpp"

namespace pdtree {

/// Probabilities that an unconditioned GW tree has root label B, F, R, P.
struct LabelProbabilities {
  double b = 0.25, f = 0.25, r = 0.25, p = 0.25;

  std::array<double, 4> as_array() const noexcept { return {b, f, r, p}; }
};

struct LimitConstants {
  double x_b = 0.0, x_f = 0.0, x_r = 0.0, x_p = 0.0;
  /// Mean paired domination number per vertex, 2 * x_R.
  double mu_pr = 0.0;
  /// Sup-norm of map(x) - x at the returned point.
  double residual = 0.0;
  std::size_t iterations = 0;

  LabelProbabilities point() const noexcept { return {x_b, x_f, x_r, x_p}; }
};

inline double evaluate_pgf(const OffspringDistribution& dist, double x) { return dist.pgf(x); }

/**
 * The root-label recursion: each coordinate is the probability that a root
 * with xi children gets that label, given i.i.d. child labels from `x`.
 *   B <- g(F)
 *   F <- g(F+P) - g(F)
 *   R <- g(B+F+P) - g(F+P)
 *   P <- 1 - g(B+F+P)
 * Arguments are clamped into [0,1] to absorb rounding at the simplex edge.
 */
inline LabelProbabilities label_map(const OffspringDistribution& dist,
                                    const LabelProbabilities& x) {
  auto g = [&](double t) { return dist.pgf(std::clamp(t, 0.0, 1.0)); };
  const double g_f = g(x.f);
  const double g_fp = g(x.f + x.p);
  const double g_bfp = g(x.b + x.f + x.p);
  return {g_f, g_fp - g_f, g_bfp - g_fp, 1.0 - g_bfp};
}

inline double sup_distance(const LabelProbabilities& a, const LabelProbabilities& b) {
  return std::max({std::abs(a.b - b.b), std::abs(a.f - b.f), std::abs(a.r - b.r),
                   std::abs(a.p - b.p)});
}

/**
 * Damped fixed-point iteration x <- (x + map(x)) / 2 from `start`, stopping
 * once sup|map(x) - x| <= tol. `trace`, if given, receives the residual of
 * every iterate (entry 0 is the start).
 */
inline LimitConstants solve_system_from(const OffspringDistribution& dist,
                                        LabelProbabilities start, double tol,
                                        std::size_t max_iter,
                                        std::vector<double>* trace = nullptr) {
  if (!(tol > 0.0)) throw Error(ErrorCode::DomainError, "tolerance must be positive");
  LabelProbabilities x = start;
  for (std::size_t it = 0;; ++it) {
    const LabelProbabilities fx = label_map(dist, x);
    const double residual = sup_distance(fx, x);
    if (trace) trace->push_back(residual);
    if (residual <= tol) {
      return {x.b, x.f, x.r, x.p, 2.0 * x.r, residual, it};
    }
    if (it >= max_iter)
      throw Error(ErrorCode::NoConvergence, "residual " + std::to_string(residual) +
                                                " after " + std::to_string(it) +
                                                " iterations");
    x = {0.5 * (x.b + fx.b), 0.5 * (x.f + fx.f), 0.5 * (x.r + fx.r), 0.5 * (x.p + fx.p)};
  }
}

inline LimitConstants solve_system(const OffspringDistribution& dist, double tol = 1e-12,
                                   std::size_t max_iter = 1'000'000) {
  return solve_system_from(dist, LabelProbabilities{}, tol, max_iter);
}

}  // namespace pdtree
