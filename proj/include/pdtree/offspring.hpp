#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdtree/error.hpp"

namespace pdtree {

enum class OffspringKind { Binary, Plane, Labelled, Custom };

/// Tail mass below which infinite-support laws are cut off.
inline constexpr double kTailCutoff = 1e-15;
/// Tolerance for the sum-to-one and mean-one checks.
inline constexpr double kCriticalTolerance = 1e-12;

/**
 * A critical offspring law: finite (possibly truncated) pmf over outdegrees,
 * its generating function, mean and variance.
 *
 * Built-ins:
 *   binary    Bin(2, 1/2)  g(x) = (1+x)^2/4
 *   plane     Geo(1/2)     g(x) = 1/(2-x)
 *   labelled  Pois(1)      g(x) = exp(x-1)
 */
class OffspringDistribution {
 public:
  static OffspringDistribution binary() {
    return OffspringDistribution(OffspringKind::Binary, "binary", {0.25, 0.5, 0.25});
  }

  static OffspringDistribution plane() {
    std::vector<double> p{0.5};
    double tail = 0.5;
    while (tail >= kTailCutoff) {
      p.push_back(p.back() * 0.5);
      tail -= p.back();
    }
    return OffspringDistribution(OffspringKind::Plane, "plane", std::move(p));
  }

  static OffspringDistribution labelled() {
    std::vector<double> p{std::exp(-1.0)};
    double tail = 1.0 - p[0];
    while (tail >= kTailCutoff) {
      p.push_back(p.back() / static_cast<double>(p.size()));
      tail -= p.back();
    }
    return OffspringDistribution(OffspringKind::Labelled, "labelled", std::move(p));
  }

  /// pmf[k] = Pr(xi = k). Trailing mass below the cutoff is dropped and the
  /// rest renormalized; the law must already be critical.
  static OffspringDistribution custom(std::vector<double> pmf) {
    for (double p : pmf)
      if (!(p >= 0.0) || !std::isfinite(p))
        throw Error(ErrorCode::InvalidDistribution, "probabilities must be finite and >= 0");
    const double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    if (std::abs(total - 1.0) > kCriticalTolerance)
      throw Error(ErrorCode::InvalidDistribution,
                  "probabilities sum to " + std::to_string(total));
    double tail = 0.0;
    while (!pmf.empty() && tail + pmf.back() < kTailCutoff) {
      tail += pmf.back();
      pmf.pop_back();
    }
    return OffspringDistribution(OffspringKind::Custom, "custom", std::move(pmf));
  }

  /// Parses lines "k p_k"; blank lines and '#' comments are ignored.
  static OffspringDistribution from_pmf_text(std::string_view text) {
    std::map<std::size_t, double> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      long long k = 0;
      double p = 0.0;
      if (!(fields >> k)) continue;
      std::string extra;
      if (!(fields >> p) || (fields >> extra) || k < 0)
        throw Error(ErrorCode::InvalidDistribution,
                    "pmf line " + std::to_string(lineno) + ": expected 'k p_k'");
      if (!entries.emplace(static_cast<std::size_t>(k), p).second)
        throw Error(ErrorCode::InvalidDistribution,
                    "pmf line " + std::to_string(lineno) + ": duplicate k");
    }
    if (entries.empty()) throw Error(ErrorCode::InvalidDistribution, "pmf file is empty");
    std::vector<double> pmf(entries.rbegin()->first + 1, 0.0);
    for (auto [k, p] : entries) pmf[k] = p;
    return custom(std::move(pmf));
  }

  static OffspringDistribution from_pmf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidDistribution, "cannot open pmf file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_pmf_text(buf.str());
  }

  /// "binary", "plane" or "labelled".
  static OffspringDistribution builtin(std::string_view name) {
    if (name == "binary") return binary();
    if (name == "plane") return plane();
    if (name == "labelled" || name == "labeled") return labelled();
    throw Error(ErrorCode::InvalidDistribution, "unknown model '" + std::string(name) + "'");
  }

  OffspringKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  /// Truncated pmf, indexed by outdegree.
  const std::vector<double>& pmf() const noexcept { return pmf_; }
  double pmf(std::size_t k) const noexcept { return k < pmf_.size() ? pmf_[k] : 0.0; }
  std::size_t max_degree() const noexcept { return pmf_.size() - 1; }

  double mean() const noexcept { return mean_; }
  double variance() const noexcept { return variance_; }

  /// Smallest d >= 2 with Pr(xi = d) > 0.
  std::size_t d0() const noexcept { return d0_; }

  /// g(x) by closed form for the built-ins, by the truncated series otherwise.
  double pgf(double x) const {
    check_domain(x);
    switch (kind_) {
      case OffspringKind::Binary: return (1.0 + x) * (1.0 + x) / 4.0;
      case OffspringKind::Plane: return 1.0 / (2.0 - x);
      case OffspringKind::Labelled: return std::exp(x - 1.0);
      case OffspringKind::Custom: break;
    }
    return pgf_series(x);
  }

  /// Horner evaluation of the truncated pmf, whatever the kind.
  double pgf_series(double x) const {
    check_domain(x);
    double acc = 0.0;
    for (auto it = pmf_.rbegin(); it != pmf_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  OffspringDistribution(OffspringKind kind, std::string name, std::vector<double> pmf)
      : kind_(kind), name_(std::move(name)), pmf_(std::move(pmf)) {
    if (pmf_.empty()) throw Error(ErrorCode::InvalidDistribution, "empty pmf");
    const double total = std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
    for (double& p : pmf_) p /= total;
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k) {
      m1 += static_cast<double>(k) * pmf_[k];
      m2 += static_cast<double>(k * k) * pmf_[k];
    }
    mean_ = m1;
    variance_ = m2 - m1 * m1;
    if (std::abs(mean_ - 1.0) > kCriticalTolerance)
      throw Error(ErrorCode::InvalidDistribution,
                  "offspring mean is " + std::to_string(mean_) + ", must be 1");
    if (!(pmf_[0] > 0.0))
      throw Error(ErrorCode::InvalidDistribution, "Pr(xi = 0) must be positive");
    std::size_t g = 0;
    for (std::size_t k = 1; k < pmf_.size(); ++k)
      if (pmf_[k] > 0.0) g = std::gcd(g, k);
    if (g != 1) throw Error(ErrorCode::InvalidDistribution, "support gcd must be 1");
    if (!(variance_ > 0.0))
      throw Error(ErrorCode::InvalidDistribution, "variance must be positive");
    d0_ = 0;
    for (std::size_t k = 2; k < pmf_.size(); ++k)
      if (pmf_[k] > 0.0) {
        d0_ = k;
        break;
      }
  }

  static void check_domain(double x) {
    if (!(x >= 0.0 && x <= 1.0))
      throw Error(ErrorCode::DomainError, "pgf argument must lie in [0,1]");
  }

  OffspringKind kind_;
  std::string name_;
  std::vector<double> pmf_;
  double mean_ = 0.0;
  double variance_ = 0.0;
  std::size_t d0_ = 0;
};

}  // namespace pdtree
