#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lowcross/discrepancy.hpp"
#include "lowcross/matching.hpp"
#include "lowcross/params.hpp"
#include "lowcross/set_system.hpp"

namespace lowcross {

struct ApproxResult {
  /// Increasing local indices of the input system.
  std::vector<Index> subset;
  double eps_measured = 0.0;
  int rounds = 0;
  /// True when no halving round was run and the subset is the whole ground set.
  bool noop = false;
  std::uint64_t incidence_calls = 0;
};

/// max_S | |S|/n - |A cap S|/|A| |. A must be non-empty with distinct
/// in-range indices.
double eps_error(std::span<const Index> subset, const SetSystem& sys);

/// Number of halving rounds for target error eps, clamped to [0, floor(log2 n)].
int halving_rounds(Index n, RangeId m, const AssumptionParams& params, double eps);

/// The ceil(n/2) lowest indices of the larger sign class (ties go to +1).
std::vector<Index> larger_color_class(const Coloring& chi);

/// Runs exactly `rounds` halving rounds, each keeping the larger class of a
/// low-discrepancy coloring of the survivors.
ApproxResult halve_repeatedly(const SetSystem& sys, const AssumptionParams& params, int rounds, Rng& rng,
                              const MwuConfig& config = {});

/// Halving with the round count chosen for target error eps in (0, 1).
ApproxResult approximate(const SetSystem& sys, const AssumptionParams& params, double eps, Rng& rng,
                         const MwuConfig& config = {});

/// Upper bound on the output size of approximate():
/// 2 max{(30 sqrt(a ln m / gamma) / eps)^{2/(2-gamma)}, 12 sqrt((b/2 + 12 ln m) ln m log n) / eps} + 1.
double approximation_size_bound(Index n, RangeId m, const AssumptionParams& params, double eps);

/// ceil(4 C d / eps^2), capped at n.
std::size_t vc_sample_size(Index n, double capx, int d_vc, double eps);

/// Uniform subset of the given size, returned in increasing order.
std::vector<Index> uniform_sample(Index n, std::size_t size, Rng& rng);

/// Uniform sample of vc_sample_size() elements followed by approximate() with
/// eps/2 on the sample. Indices of the result refer to sys.
ApproxResult vc_bootstrap_approximate(const SetSystem& sys, const AssumptionParams& params, double eps, int d_vc,
                                      Rng& rng, double capx = 0.5, const MwuConfig& config = {});

struct CapxCalibration {
  double capx = 0.0;
  double success_rate = 0.0;
};

/// Smallest candidate C for which a uniform sample of vc_sample_size(C) has
/// error at most eps/2 in at least `target_rate` of the trials on every
/// reference system. Candidates are tried in increasing order; if none passes
/// the largest one is returned with its measured rate.
CapxCalibration calibrate_capx(std::span<const SetSystem> references, int d_vc, double eps, int trials,
                               std::span<const double> candidates, Rng& rng, double target_rate = 0.9);

}  // namespace lowcross
