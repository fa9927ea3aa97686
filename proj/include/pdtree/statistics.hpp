#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace pdtree::stats {

/**
 * Running central moments up to order four. Two accumulators merge exactly
 * (Pebay's pairwise update), so blocks can be summed in any fixed order.
 */
class Moments {
 public:
  void add(double x) noexcept {
    Moments one;
    one.n_ = 1;
    one.mean_ = x;
    merge(one);
  }

  void merge(const Moments& o) noexcept {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n_);
    const double nb = static_cast<double>(o.n_);
    const double n = na + nb;
    const double delta = o.mean_ - mean_;
    const double d2 = delta * delta;
    const double m2 = m2_ + o.m2_ + d2 * na * nb / n;
    const double m3 = m3_ + o.m3_ + d2 * delta * na * nb * (na - nb) / (n * n) +
                      3.0 * delta * (na * o.m2_ - nb * m2_) / n;
    const double m4 = m4_ + o.m4_ +
                      d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                      6.0 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                      4.0 * delta * (na * o.m3_ - nb * m3_) / n;
    mean_ += delta * nb / n;
    m2_ = m2;
    m3_ = m3;
    m4_ = m4;
    n_ += o.n_;
  }

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }

  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const noexcept {
    return n_ < 2 ? 0.0 : m2_ / static_cast<double>(n_ - 1);
  }

  /// g1 = sqrt(n) M3 / M2^1.5; 0 when degenerate.
  double skewness() const noexcept {
    if (n_ < 2 || m2_ <= 0.0) return 0.0;
    return std::sqrt(static_cast<double>(n_)) * m3_ / std::pow(m2_, 1.5);
  }

  /// g2 = n M4 / M2^2 - 3; 0 when degenerate.
  double excess_kurtosis() const noexcept {
    if (n_ < 2 || m2_ <= 0.0) return 0.0;
    return static_cast<double>(n_) * m4_ / (m2_ * m2_) - 3.0;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0, m2_ = 0.0, m3_ = 0.0, m4_ = 0.0;
};

/// Upper tail Pr(X >= stat) of a chi-square law with `df` degrees of freedom.
inline double chi_square_sf(double stat, double df) {
  if (stat <= 0.0) return 1.0;
  return boost::math::gamma_q(df / 2.0, stat / 2.0);
}

struct ChiSquare {
  double statistic = 0.0;
  std::size_t df = 0;
  double p_value = 1.0;
};

/**
 * Goodness of fit of observed counts to expected probabilities. Cells with
 * expected count below `min_expected` are pooled into one cell (dropped if
 * the pool itself stays below the threshold). `fitted` parameters are
 * subtracted from the degrees of freedom.
 */
inline ChiSquare chi_square_gof(std::span<const double> observed,
                                std::span<const double> probabilities,
                                std::size_t fitted = 0, double min_expected = 5.0) {
  double total = 0.0;
  for (double o : observed) total += o;
  ChiSquare out;
  std::size_t cells = 0;
  double pool_o = 0.0, pool_e = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = total * probabilities[i];
    if (e < min_expected) {
      pool_o += observed[i];
      pool_e += e;
      continue;
    }
    out.statistic += (observed[i] - e) * (observed[i] - e) / e;
    ++cells;
  }
  if (pool_e > 0.0 && pool_e >= min_expected) {
    out.statistic += (pool_o - pool_e) * (pool_o - pool_e) / pool_e;
    ++cells;
  } else if (pool_o > 0.0 && pool_e == 0.0) {
    // Observations where the model puts no mass at all.
    out.statistic = INFINITY;
  }
  out.df = cells > 1 + fitted ? cells - 1 - fitted : 0;
  out.p_value = out.df == 0 ? (std::isinf(out.statistic) ? 0.0 : 1.0)
                            : chi_square_sf(out.statistic, static_cast<double>(out.df));
  return out;
}

/**
 * Two-sample chi-square homogeneity test on a pair of count tables sharing
 * keys. Keys whose pooled expected count is small are merged into one cell.
 */
template <class Key>
ChiSquare chi_square_homogeneity(const std::map<Key, double>& a, const std::map<Key, double>& b,
                                 double min_expected = 5.0) {
  std::map<Key, std::pair<double, double>> table;
  for (auto& [k, v] : a) table[k].first += v;
  for (auto& [k, v] : b) table[k].second += v;
  double na = 0.0, nb = 0.0;
  for (auto& [k, v] : table) {
    na += v.first;
    nb += v.second;
  }
  const double n = na + nb;
  std::vector<std::pair<double, double>> cells;
  std::pair<double, double> pool{0.0, 0.0};
  for (auto& [k, v] : table) {
    const double row = v.first + v.second;
    if (std::min(row * na / n, row * nb / n) < min_expected) {
      pool.first += v.first;
      pool.second += v.second;
    } else {
      cells.push_back(v);
    }
  }
  const double pool_row = pool.first + pool.second;
  if (pool_row > 0.0) {
    if (std::min(pool_row * na / n, pool_row * nb / n) >= min_expected || cells.empty())
      cells.push_back(pool);
    else if (!cells.empty()) {
      cells.back().first += pool.first;
      cells.back().second += pool.second;
    }
  }
  ChiSquare out;
  for (auto [oa, ob] : cells) {
    const double row = oa + ob;
    const double ea = row * na / n, eb = row * nb / n;
    if (ea > 0.0) out.statistic += (oa - ea) * (oa - ea) / ea;
    if (eb > 0.0) out.statistic += (ob - eb) * (ob - eb) / eb;
  }
  out.df = cells.size() > 1 ? cells.size() - 1 : 0;
  out.p_value = out.df == 0 ? 1.0 : chi_square_sf(out.statistic, static_cast<double>(out.df));
  return out;
}

inline double normal_quantile(double p) {
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

}  // namespace pdtree::stats
