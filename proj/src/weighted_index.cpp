#include "lowcross/weighted_index.hpp"

#include <cmath>
#include <numeric>

#include "lowcross/errors.hpp"

namespace lowcross {

namespace {
constexpr int kRescaleExponent = 600;
}

WeightedIndex::WeightedIndex(std::size_t size, double initial) : leaves_(size, initial) {
  check_weight(initial);
  init_tree();
}

WeightedIndex::WeightedIndex(std::vector<double> weights) : leaves_(std::move(weights)) {
  for (double w : leaves_) check_weight(w);
  init_tree();
}

void WeightedIndex::check_weight(double w) const {
  if (!(w >= 0.0) || !std::isfinite(w)) throw ContractViolation("weights must be finite and non-negative");
}

void WeightedIndex::init_tree() {
  blocks_ = (leaves_.size() + kBlock - 1) / kBlock;
  cap_ = 1;
  while (cap_ < blocks_) cap_ *= 2;
  tree_.assign(2 * cap_, 0.0);
  dirty_flag_.assign(blocks_, 0);
  dirty_blocks_.clear();
  for (std::size_t b = 0; b < blocks_; ++b) tree_[cap_ + b] = block_sum(b);
  rebuild_internal();
  maybe_rescale();
}

double WeightedIndex::block_sum(std::size_t b) const {
  const std::size_t lo = b * kBlock;
  const std::size_t hi = std::min(lo + kBlock, leaves_.size());
  double s = 0.0;
  for (std::size_t i = lo; i < hi; ++i) s += leaves_[i];
  return s;
}

void WeightedIndex::update_path(std::size_t b) {
  std::size_t node = cap_ + b;
  tree_[node] = block_sum(b);
  for (node /= 2; node >= 1; node /= 2) tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
}

void WeightedIndex::rebuild_internal() {
  for (std::size_t node = cap_ - 1; node >= 1; --node) tree_[node] = tree_[2 * node] + tree_[2 * node + 1];
}

double WeightedIndex::total() const {
  if (has_pending()) throw ContractViolation("WeightedIndex: total() with pending deferred updates");
  return leaves_.empty() ? 0.0 : tree_[1];
}

std::size_t WeightedIndex::sample(Rng& rng) const {
  const double tot = total();
  if (!(tot > 0.0)) throw EmptyDistributionError("cannot sample from an all-zero weight vector");
  double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * tot;
  std::size_t node = 1;
  while (node < cap_) {
    const double left = tree_[2 * node];
    if (r < left) {
      node = 2 * node;
    } else {
      r -= left;
      node = 2 * node + 1;
    }
  }
  const std::size_t lo = (node - cap_) * kBlock;
  const std::size_t hi = std::min(lo + kBlock, leaves_.size());
  double acc = 0.0;
  std::size_t last = hi;
  for (std::size_t i = lo; i < hi; ++i) {
    const double w = leaves_[i];
    if (w > 0.0) {
      acc += w;
      last = i;
      if (r < acc) return i;
    }
  }
  if (last == hi) throw ContractViolation("WeightedIndex: descended into an empty block");
  return last;  // rounding at the block boundary
}

void WeightedIndex::set(std::size_t i, double w) {
  if (i >= leaves_.size()) throw ContractViolation("WeightedIndex: index out of range");
  check_weight(w);
  if (has_pending()) flush();
  leaves_[i] = w;
  update_path(i / kBlock);
  maybe_rescale();
}

void WeightedIndex::scale(std::size_t i, double factor) {
  if (i >= leaves_.size()) throw ContractViolation("WeightedIndex: index out of range");
  set(i, leaves_[i] * factor);
}

void WeightedIndex::set_deferred(std::size_t i, double w) {
  leaves_[i] = w;
  const std::size_t b = i / kBlock;
  if (!dirty_flag_[b]) {
    dirty_flag_[b] = 1;
    dirty_blocks_.push_back(static_cast<std::uint32_t>(b));
  }
}

void WeightedIndex::flush() {
  if (dirty_blocks_.empty()) return;
  if (dirty_blocks_.size() * 8 > blocks_) {
    for (auto b : dirty_blocks_) {
      tree_[cap_ + b] = block_sum(b);
      dirty_flag_[b] = 0;
    }
    rebuild_internal();
  } else {
    for (auto b : dirty_blocks_) {
      update_path(b);
      dirty_flag_[b] = 0;
    }
  }
  dirty_blocks_.clear();
  maybe_rescale();
}

void WeightedIndex::maybe_rescale() {
  if (leaves_.empty()) return;
  const double tot = tree_[1];
  if (!(tot > 0.0)) return;
  const int e = std::ilogb(tot);
  if (e <= kRescaleExponent && e >= -kRescaleExponent) return;
  const int shift = -e;
  for (auto& w : leaves_) w = std::ldexp(w, shift);
  for (std::size_t b = 0; b < blocks_; ++b) tree_[cap_ + b] = block_sum(b);
  rebuild_internal();
  ++rescales_;
}

double WeightedIndex::recomputed_total() const { return std::accumulate(leaves_.begin(), leaves_.end(), 0.0); }

std::vector<double> WeightedIndex::normalized() const {
  const double tot = recomputed_total();
  std::vector<double> out(leaves_.size(), 0.0);
  if (tot > 0.0)
    for (std::size_t i = 0; i < leaves_.size(); ++i) out[i] = leaves_[i] / tot;
  return out;
}

}  // namespace lowcross
