#pragma once

#include <cmath>
#include <numeric>
#include <vector>

#include "lowcross/lowcross.hpp"

namespace lowcross::testing {

/// Explicit system on n elements with m ranges, each element in each range
/// with probability density.
inline SetSystem random_explicit_system(Index n, RangeId m, Rng& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<Index>> ranges(m);
  for (auto& r : ranges)
    for (Index x = 0; x < n; ++x)
      if (coin(rng)) r.push_back(x);
  return SetSystem::from_ranges(n, std::move(ranges));
}

/// Uniform points in the unit square/cube with the half-space test set for
/// t = ceil(n^{1/d}).
inline SetSystem halfspace_instance(Index n, int d, Rng& rng) {
  PointSet pts = gen_points(n, d, PointDistribution::kUniformBox, rng);
  const std::size_t t = integer_root_ceil(n, d);
  auto ranges = build_halfspace_testset(pts, t, rng);
  return SetSystem::from_halfspaces(std::move(pts), std::move(ranges));
}

/// Index of grid point (x_1, .., x_d), coordinates starting at 1.
inline Index grid_index(const std::vector<Index>& coords, Index side) {
  Index idx = 0;
  for (Index c : coords) idx = idx * side + (c - 1);
  return idx;
}

inline double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

inline double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = mean(v);
  double acc = 0.0;
  for (double x : v) acc += (x - mu) * (x - mu);
  return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace lowcross::testing
