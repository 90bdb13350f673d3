#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lowcross/geometry.hpp"
#include "lowcross/types.hpp"

namespace lowcross {

/// Ground set {0..n-1} and m ranges behind a membership oracle.
///
/// A SetSystem is a cheap handle: the ground data is shared and immutable, so
/// copies and restrictions cost O(1) (plus the index map of a restriction).
/// Membership of geometric systems is evaluated once per (element, range)
/// pair at construction and kept as a bit table when that table fits in
/// 256 MiB; the counters still record every query made through the handle.
///
/// Oracle counters are also shared by a handle, its copies and the
/// restrictions derived from it; call fork() to start an independent tally
/// (one per trial). Counting methods are therefore not safe to call
/// concurrently on handles that share counters.
class SetSystem {
 public:
  /// Explicit ranges given as index lists. Each list must be strictly
  /// increasing with entries below n.
  static SetSystem from_ranges(Index n, std::vector<std::vector<Index>> ranges);
  /// Points with an arbitrary mix of geometric ranges.
  static SetSystem from_geometry(PointSet points, std::vector<GeometricRange> ranges);
  static SetSystem from_halfspaces(PointSet points, std::vector<HalfSpace> ranges);

  SetSystem();

  Index size() const { return size_; }
  RangeId range_count() const;

  /// Uncounted containment test, used by evaluators.
  bool contains(Index x, RangeId s) const;

  /// Counted membership query.
  bool membership(Index x, RangeId s) const;

  /// Counted crossing test: true iff exactly one endpoint of e lies in s.
  /// Loops never cross.
  bool incidence(Edge e, RangeId s) const {
    if (e.u >= size_ || e.v >= size_ || s >= m_) throw_out_of_range();
    ++counts_->incidence;
    if (e.is_loop()) {
      ++counts_->membership;
      return false;
    }
    counts_->membership += 2;
    const Index a = root_index(e.u);
    const Index b = root_index(e.v);
    if (table_) {
      const std::uint64_t* row = table_ + static_cast<std::size_t>(s) * words_;
      return ((row[a / 64] >> (a % 64)) ^ (row[b / 64] >> (b % 64))) & 1u;
    }
    return contains_root(a, s) != contains_root(b, s);
  }

  const OracleCounts& counts() const { return *counts_; }
  void reset_counts() const { *counts_ = {}; }

  /// Same ground data and restriction, fresh counters.
  SetSystem fork() const;

  /// Sub-system on the given local indices (strictly increasing). Local index
  /// i of the result maps to subset[i] of this system. Ranges are kept as is.
  SetSystem restrict(std::span<const Index> subset) const;

  /// Index in the unrestricted ground set.
  Index root_index(Index local) const { return map_data_ ? map_data_[local] : local; }

  /// Members of range s (uncounted), in increasing local index order.
  std::vector<Index> range_members(RangeId s) const;

  bool is_explicit() const;
  bool is_geometric() const { return !is_explicit(); }
  /// Dimension of the underlying points (0 for explicit systems).
  int dim() const;
  /// Root point set (geometric systems only).
  const PointSet* root_points() const;
  /// Root range descriptions (geometric systems only).
  const std::vector<GeometricRange>* root_ranges() const;

 private:
  struct Ground;
  SetSystem(std::shared_ptr<const Ground> ground, Index size);

  bool contains_root(Index x, RangeId s) const;
  static bool evaluate_geometric(const Ground& g, Index x, RangeId s);
  [[noreturn]] static void throw_out_of_range();

  std::shared_ptr<const Ground> ground_;
  std::shared_ptr<const std::vector<Index>> map_;
  std::shared_ptr<OracleCounts> counts_;
  Index size_ = 0;
  RangeId m_ = 0;
  // Cached from ground_ and map_ for the inline query path.
  const Index* map_data_ = nullptr;
  const std::uint64_t* table_ = nullptr;
  std::size_t words_ = 0;
};

}  // namespace lowcross
