#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace lowcross {

/// Index of a ground-set element.
using Index = std::uint32_t;
/// Index of a range in a set system.
using RangeId = std::uint32_t;

/// All randomness in the library is drawn from this engine.
using Rng = std::mt19937_64;

/// Per-trial stream: trial k of a run seeded with `seed` uses seed + k.
inline Rng make_rng(std::uint64_t seed, std::uint64_t trial = 0) {
  return Rng(seed + trial);
}

/// Unordered pair {u, v} stored with u <= v. A loop has u == v.
struct Edge {
  Index u = 0;
  Index v = 0;

  static Edge make(Index a, Index b) {
    return a <= b ? Edge{a, b} : Edge{b, a};
  }
  static Edge loop(Index a) { return Edge{a, a}; }

  bool is_loop() const { return u == v; }
  bool touches(Index x) const { return u == x || v == x; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Oracle tally. One incidence evaluation costs one incidence call and two
/// membership calls (one for a loop).
struct OracleCounts {
  std::uint64_t membership = 0;
  std::uint64_t incidence = 0;
};

}  // namespace lowcross
