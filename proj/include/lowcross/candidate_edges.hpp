#pragma once

#include <cstddef>
#include <vector>

#include "lowcross/types.hpp"
#include "lowcross/weighted_index.hpp"

namespace lowcross {

/// Candidate edge set over vertices 0..k-1: either all C(k, 2) pairs, indexed
/// row by row (u < v, u major), or an explicit list with a per-vertex
/// incidence index.
class CandidateEdges {
 public:
  static CandidateEdges complete(Index vertices);
  /// Edges must be non-loops with endpoints below `vertices`.
  static CandidateEdges from_list(Index vertices, std::vector<Edge> edges);

  Index vertex_count() const { return k_; }
  std::size_t size() const { return complete_ ? complete_size(k_) : edges_.size(); }
  bool empty() const { return size() == 0; }
  bool is_complete() const { return complete_; }

  Edge at(std::size_t i) const;

  /// Edge indices incident to v.
  template <class F>
  void for_each_incident(Index v, F&& f) const;

  static std::size_t complete_size(Index k) { return static_cast<std::size_t>(k) * (k - (k > 0)) / 2; }
  static std::size_t row_start(Index k, Index u) {
    return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(k) - u - 1) / 2;
  }
  static std::size_t complete_index(Index k, Index u, Index v) { return row_start(k, u) + (v - u - 1); }

 private:
  Index k_ = 0;
  bool complete_ = true;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adj_offsets_;
  std::vector<std::size_t> adj_;
};

/// Walks the complete edge set by non-decreasing index in amortised O(1).
class CompleteEdgeCursor {
 public:
  explicit CompleteEdgeCursor(Index k) : k_(k), row_end_(k > 0 ? k - 1 : 0) {}

  Edge seek(std::size_t i) {
    while (i >= row_end_) {
      ++u_;
      row_start_ = row_end_;
      row_end_ += k_ - u_ - 1;
    }
    return Edge{u_, static_cast<Index>(u_ + 1 + (i - row_start_))};
  }

 private:
  Index k_;
  Index u_ = 0;
  std::size_t row_start_ = 0;
  std::size_t row_end_;
};

/// Sets the weight of every candidate edge with endpoint `vertex` to zero.
void zero_incident(WeightedIndex& weights, const CandidateEdges& edges, Index vertex);

template <class F>
void CandidateEdges::for_each_incident(Index v, F&& f) const {
  if (complete_) {
    for (Index u = 0; u < v; ++u) f(complete_index(k_, u, v));
    const std::size_t start = row_start(k_, v);
    for (Index w = v + 1; w < k_; ++w) f(start + (w - v - 1));
  } else {
    for (std::size_t j = adj_offsets_[v]; j < adj_offsets_[v + 1]; ++j) f(adj_[j]);
  }
}

}  // namespace lowcross
