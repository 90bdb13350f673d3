#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lowcross/types.hpp"

namespace lowcross {

/// Uniform integer in [0, bound) by multiply-shift with rejection (exactly
/// uniform, no division on the common path).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  u128 prod = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(prod);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      prod = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(prod);
    }
  }
  return static_cast<std::uint64_t>(prod >> 64);
}

/// Same for bounds below 2^32, consuming 32 random bits at a time; each
/// 64-bit engine output serves two draws.
class HalfWordSource {
 public:
  explicit HalfWordSource(Rng& rng) : rng_(rng) {}

  std::uint32_t below(std::uint32_t bound) {
    std::uint64_t prod = static_cast<std::uint64_t>(next()) * bound;
    auto low = static_cast<std::uint32_t>(prod);
    if (low < bound) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
      while (low < threshold) {
        prod = static_cast<std::uint64_t>(next()) * bound;
        low = static_cast<std::uint32_t>(prod);
      }
    }
    return static_cast<std::uint32_t>(prod >> 32);
  }

 private:
  std::uint32_t next() {
    if (!spare_) {
      pool_ = rng_();
      spare_ = true;
      return static_cast<std::uint32_t>(pool_);
    }
    spare_ = false;
    return static_cast<std::uint32_t>(pool_ >> 32);
  }

  Rng& rng_;
  std::uint64_t pool_ = 0;
  bool spare_ = false;
};

/// Draws subsets of {0..N-1} that contain every index independently with
/// probability p. The size is drawn from Binomial(N, p) and the members are
/// then chosen uniformly among all subsets of that size (Floyd's algorithm on
/// a bitmap; the complement is selected instead when the size exceeds N/2).
/// Cost is O(min(k, N - k) + N/64) random draws and word operations.
///
/// The scratch bitmap is reused across calls.
class BernoulliSubsetSampler {
 public:
  /// Calls visit(i) for each selected index, in increasing order.
  template <class Visit>
  void for_each(std::size_t n, double p, Rng& rng, Visit&& visit);

 private:
  std::vector<std::uint64_t> bits_;
};

/// Sorted list of the selected indices.
std::vector<std::size_t> binomial_subset(std::size_t n, double p, Rng& rng);

template <class Visit>
void BernoulliSubsetSampler::for_each(std::size_t n, double p, Rng& rng, Visit&& visit) {
  if (n == 0 || !(p > 0.0)) return;
  if (p >= 1.0) {
    for (std::size_t i = 0; i < n; ++i) visit(i);
    return;
  }
  const auto k = static_cast<std::size_t>(std::binomial_distribution<std::uint64_t>(n, p)(rng));
  if (k == 0) return;
  const bool complement = k > n / 2;
  const std::size_t pick = complement ? n - k : k;

  const std::size_t words = (n + 63) / 64;
  if (bits_.size() < words) bits_.resize(words, 0);
  std::uint64_t* bits = bits_.data();
  // Floyd: take t, or j if t is already taken (branch-free).
  auto place = [bits](std::size_t j, std::size_t t) {
    const std::size_t taken = (bits[t / 64] >> (t % 64)) & 1u;
    const std::size_t pos = t + taken * (j - t);
    bits[pos / 64] |= std::uint64_t{1} << (pos % 64);
  };
  if (n <= std::size_t{0xffffffffu}) {
    HalfWordSource source(rng);
    for (std::size_t j = n - pick; j < n; ++j) place(j, source.below(static_cast<std::uint32_t>(j + 1)));
  } else {
    for (std::size_t j = n - pick; j < n; ++j) place(j, uniform_below(rng, j + 1));
  }

  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = complement ? ~bits_[w] : bits_[w];
    if (w == words - 1 && n % 64 != 0) word &= (std::uint64_t{1} << (n % 64)) - 1;
    bits_[w] = 0;
    while (word) {
      const int bit = std::countr_zero(word);
      visit(w * 64 + static_cast<std::size_t>(bit));
      word &= word - 1;
    }
  }
}

}  // namespace lowcross
