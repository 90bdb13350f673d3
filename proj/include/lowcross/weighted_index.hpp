#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lowcross/types.hpp"

namespace lowcross {

/// Weighted sampler over items 0..N-1 with O(log N) draws and updates.
///
/// Leaves are grouped in blocks of kBlock; a binary sum tree is kept over the
/// block sums. Every node is recomputed from its children (never patched by
/// deltas), so the total is the tree-ordered float sum of the leaves at all
/// times. Equal weights resolve in left-to-right prefix order.
///
/// Weights are rescaled by an exact power of two whenever the total leaves
/// [2^-600, 2^600]; ratios, and hence the sampling distribution, are kept.
class WeightedIndex {
 public:
  static constexpr std::size_t kBlock = 64;

  WeightedIndex() = default;
  explicit WeightedIndex(std::size_t size, double initial = 1.0);
  explicit WeightedIndex(std::vector<double> weights);

  std::size_t size() const { return leaves_.size(); }
  double weight(std::size_t i) const { return leaves_[i]; }
  const std::vector<double>& weights() const { return leaves_; }
  /// Sum of all weights. Requires no pending deferred updates.
  double total() const;

  /// Draws i with probability weight(i) / total(). Never returns a zero-weight
  /// item. Throws EmptyDistributionError when the total is zero.
  std::size_t sample(Rng& rng) const;

  void set(std::size_t i, double w);
  void scale(std::size_t i, double factor);

  /// Deferred variants: the leaf changes immediately, the sums on flush().
  void set_deferred(std::size_t i, double w);
  void scale_deferred(std::size_t i, double factor) { set_deferred(i, leaves_[i] * factor); }
  void flush();
  bool has_pending() const { return !dirty_blocks_.empty(); }

  /// Plain left-to-right sum of the leaves.
  double recomputed_total() const;
  /// weights / total.
  std::vector<double> normalized() const;
  /// Number of power-of-two rescalings applied so far.
  std::size_t rescale_count() const { return rescales_; }

 private:
  void init_tree();
  double block_sum(std::size_t b) const;
  void update_path(std::size_t b);
  void rebuild_internal();
  void maybe_rescale();
  void check_weight(double w) const;

  std::vector<double> leaves_;
  std::vector<double> tree_;  // heap order, tree_[cap_ + b] = sum of block b
  std::size_t cap_ = 1;
  std::size_t blocks_ = 0;
  std::vector<std::uint32_t> dirty_blocks_;
  std::vector<std::uint8_t> dirty_flag_;
  std::size_t rescales_ = 0;
};

}  // namespace lowcross
