#pragma once

#include <algorithm>
#include <cmath>

#include "lowcross/params.hpp"

// Closed-form guarantees the algorithms are checked against. log is base 2,
// ln is natural.

namespace lowcross::bounds {

/// Expected crossing number of build_matching:
/// (3a/gamma) n^gamma + (3b/2) log n + 18 ln(mn) log n.
inline double matching_crossing(double n, double m, const AssumptionParams& p) {
  const double lg = std::log2(n);
  return 3.0 * p.a / p.gamma * std::pow(n, p.gamma) + 1.5 * p.b * lg + 18.0 * std::log(m * n) * lg;
}

/// Expected incidence calls of build_matching:
/// min{24 n^{3-gamma} ln n / a + 18 m n^{1-gamma} ln(mn) min{2/(1-gamma), log n} / a, n^3/7 + mn/2}.
inline double matching_oracle_calls(double n, double m, const AssumptionParams& p) {
  const double lg = std::log2(n);
  const double factor = p.gamma < 1.0 ? std::min(2.0 / (1.0 - p.gamma), lg) : lg;
  const double first = 24.0 * std::pow(n, 3.0 - p.gamma) * std::log(n) / p.a +
                       18.0 * m * std::pow(n, 1.0 - p.gamma) * std::log(m * n) * factor / p.a;
  return std::min(first, n * n * n / 7.0 + m * n / 2.0);
}

/// Expected crossing number of one partial matching of n/4 edges:
/// a (n/2)^gamma + b + max{(a (n/2)^gamma + b)/2, 18 ln(mn/4)}.
inline double partial_matching_crossing(double n, double m, const AssumptionParams& p) {
  const double base = p.a * std::pow(n / 2.0, p.gamma) + p.b;
  return base + std::max(base / 2.0, 18.0 * std::log(m * n / 4.0));
}

/// Expected discrepancy of low_disc_color:
/// 3 sqrt((a/gamma) n^gamma ln m + (b/2) ln m log n + 12 ln^2 m log n).
inline double discrepancy(double n, double m, const AssumptionParams& p) {
  const double lm = std::log(m);
  const double lg = std::log2(n);
  return 3.0 * std::sqrt(p.a / p.gamma * std::pow(n, p.gamma) * lm + p.b / 2.0 * lm * lg + 12.0 * lm * lm * lg);
}

/// Expected discrepancy under a dual shatter bound c k^d:
/// 3 sqrt((9 c^{1/d} / 2) n^{1-1/d} ln m + 19 ln^2 m ln n).
inline double dual_shatter_discrepancy(double n, double m, double c, double d) {
  const double lm = std::log(m);
  return 3.0 * std::sqrt(4.5 * std::pow(c, 1.0 / d) * std::pow(n, 1.0 - 1.0 / d) * lm + 19.0 * lm * lm * std::log(n));
}

/// Expected oracle calls under a dual shatter bound c k^d:
/// 34 n^{2+1/d} ln n / c^{1/d} + 25 m n^{1/d} ln(mn) log n / c^{1/d}.
inline double dual_shatter_oracle_calls(double n, double m, double c, double d) {
  const double cd = std::pow(c, 1.0 / d);
  return 34.0 * std::pow(n, 2.0 + 1.0 / d) * std::log(n) / cd +
         25.0 * m * std::pow(n, 1.0 / d) * std::log(m * n) * std::log2(n) / cd;
}

/// Expected discrepancy of the coloring drawn from a matching with crossing
/// number kappa on m ranges: sqrt(3 kappa ln m).
inline double matching_to_discrepancy(double kappa, double m) { return std::sqrt(3.0 * kappa * std::log(m)); }

/// Crossing number of the relaxed MWU after t steps:
/// (ln m + (10 c1)^{1/d} t^{1-alpha/d} / (1 - alpha/d)) / ln 2.
inline double relaxed_mwu_crossing(double t, double m, double c1, double d, double alpha) {
  const double g = 1.0 - alpha / d;
  return (std::log(m) + std::pow(10.0 * c1, 1.0 / d) * std::pow(t, g) / g) / std::log(2.0);
}

/// Dual shatter constant of the axis-threshold grid ranges in dimension d:
/// k thresholds split the grid into at most (k/d + 1)^d <= ((d+1)/d)^d k^d cells.
inline double grid_dual_shatter_constant(double d) { return std::pow((d + 1.0) / d, d); }

}  // namespace lowcross::bounds
