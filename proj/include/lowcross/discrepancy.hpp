#pragma once

#include <cstdint>
#include <vector>

#include "lowcross/matching.hpp"
#include "lowcross/params.hpp"
#include "lowcross/set_system.hpp"
#include "lowcross/types.hpp"

namespace lowcross {

/// Two-coloring of {0..n-1}; every entry is +1 or -1.
struct Coloring {
  std::vector<std::int8_t> signs;

  Index size() const { return static_cast<Index>(signs.size()); }
  bool is_valid() const;
};

/// Signed sum chi(S) of every range.
std::vector<long long> range_sums(const Coloring& chi, const SetSystem& sys);
/// max_S |chi(S)|; 0 for a system without ranges.
long long discrepancy(const Coloring& chi, const SetSystem& sys);
/// Same, with the whole ground set treated as one extra range.
long long discrepancy_with_ground(const Coloring& chi, const SetSystem& sys);

/// Gives the first endpoint of every edge a fair random sign and the second
/// endpoint the opposite sign. Requires a perfect matching.
Coloring color_from_matching(const Matching& m, Rng& rng);

/// build_matching followed by color_from_matching. If `matching` is given it
/// receives the intermediate matching.
Coloring low_disc_color(const SetSystem& sys, const AssumptionParams& params, Rng& rng, const MwuConfig& config = {},
                        Matching* matching = nullptr);

/// Independent fair signs.
Coloring random_coloring(Index n, Rng& rng);

}  // namespace lowcross
