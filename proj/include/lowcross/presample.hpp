#pragma once

#include <cstdint>
#include <vector>

#include "lowcross/discrepancy.hpp"
#include "lowcross/matching.hpp"
#include "lowcross/set_system.hpp"

namespace lowcross {

/// min{2 ln n / n^{1-alpha} + 4 ln(2/delta) / n^{2-alpha}, 1}.
double presample_probability(double n, double alpha, double delta);

/// Dual shatter bound pi*(k) <= c k^d and the trade-off exponent alpha.
struct PresampleConfig {
  double alpha = 1.0;
  double c = 1.0;
  double d = 2.0;
  /// Multiplier on the per-round edge sampling probability.
  double rate_multiplier = 1.0;
  MwuConfig mwu;

  /// Throws ParameterError unless 0 < alpha <= 1, c > 0 and d > alpha.
  void validate() const;
};

struct PresampleStats {
  int rounds = 0;
  /// Rounds whose first edge sample was infeasible and that were re-sampled.
  int retries = 0;
  /// Rounds that ran on the complete edge set after two infeasible samples.
  int fallbacks = 0;
  std::uint64_t sampled_edges = 0;
};

/// Each pair {u, v} with u < v < n included independently with probability p,
/// in increasing (u, v) order.
std::vector<Edge> sample_edges(Index n, double p, Rng& rng);

/// While more than 16 elements are unmatched, samples candidate edges with
/// probability presample_probability(|X|, alpha, 1/|X|) and adds ceil(|X|/16)
/// edges from a partial matching with parameters ((2c)^{1/d}, ln m, 1 - alpha/d).
/// The survivors are matched at random.
Matching matching_presampled(const SetSystem& sys, const PresampleConfig& config, Rng& rng,
                             PresampleStats* stats = nullptr);

Coloring low_disc_color_presampled(const SetSystem& sys, const PresampleConfig& config, Rng& rng,
                                   Matching* matching = nullptr, PresampleStats* stats = nullptr);

struct RelaxedMwuResult {
  std::vector<Edge> edges;
  /// Number of edges drawn before halting (floor(n/2) if it never halted).
  std::size_t halted_at = 0;
  /// Number of chosen edges crossing each range; range S has weight 2^{count}.
  std::vector<std::uint32_t> range_exponents;
};

/// At step i ranks all pairs of unmatched elements by the total weight of the
/// ranges crossing them (ties by pair index), keeps the ceil(|X_i|^{2-alpha})
/// lightest, and halts if none of them is in `candidates`. Otherwise picks one
/// of the kept candidates uniformly, doubles every range crossing it and
/// removes its endpoints. Candidate edges are pairs u < v.
RelaxedMwuResult relaxed_mwu(const SetSystem& sys, double alpha, const std::vector<Edge>& candidates, Rng& rng);

/// n^{alpha-1} / log2(n)^2.
double subthreshold_probability(double n, double alpha);

struct GridLowerBoundReport {
  bool applicable = false;
  Index n = 0;
  RangeId m = 0;
  double p = 0.0;
  /// (1 / (16 p))^{1/d}.
  double k = 0.0;
  std::size_t sampled_edges = 0;
  /// Sampled edges crossed by at most k ranges.
  std::size_t good_edges = 0;
  bool passed = false;
  /// If passed: some range crosses at least this many edges of every
  /// n/4-edge matching inside the sample.
  std::size_t crossing_lower_bound = 0;
};

/// Samples edges of the grid instance with probability p and counts the edges
/// crossed by at most k_p ranges. Passes when that count is at most n/8. Not
/// applicable when p n^{1-alpha} >= 1.
GridLowerBoundReport grid_lowerbound_check(Index n0, int d, double alpha, double p, Rng& rng);

}  // namespace lowcross
