#include "lowcross/testkit.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "lowcross/errors.hpp"

namespace lowcross {

namespace {

// inside[s * n + x] = x in S.
std::vector<std::uint8_t> membership_table(const SetSystem& sys) {
  const Index n = sys.size();
  std::vector<std::uint8_t> t(static_cast<std::size_t>(sys.range_count()) * n);
  for (RangeId s = 0; s < sys.range_count(); ++s)
    for (Index x = 0; x < n; ++x) t[static_cast<std::size_t>(s) * n + x] = sys.contains(x, s);
  return t;
}

struct MatchingSearch {
  Index n;
  RangeId m;
  const std::vector<std::uint8_t>& inside;
  std::vector<std::size_t> load;
  std::vector<std::uint8_t> used;
  std::vector<Edge> current;
  std::vector<Edge> best;
  std::size_t best_value = std::numeric_limits<std::size_t>::max();
  bool loop_used = false;

  bool crosses(Index u, Index v, RangeId s) const {
    return inside[static_cast<std::size_t>(s) * n + u] != inside[static_cast<std::size_t>(s) * n + v];
  }

  void run(std::size_t current_max) {
    if (current_max >= best_value) return;
    Index first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      best_value = current_max;
      best = current;
      return;
    }
    used[first] = 1;
    if (n % 2 == 1 && !loop_used) {
      loop_used = true;
      current.push_back(Edge::loop(first));
      run(current_max);
      current.pop_back();
      loop_used = false;
    }
    for (Index v = first + 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      std::size_t next_max = current_max;
      for (RangeId s = 0; s < m; ++s)
        if (crosses(first, v, s)) next_max = std::max(next_max, ++load[s]);
      current.push_back(Edge{first, v});
      run(next_max);
      current.pop_back();
      for (RangeId s = 0; s < m; ++s)
        if (crosses(first, v, s)) --load[s];
      used[v] = 0;
    }
    used[first] = 0;
  }
};

}  // namespace

MatchingOptimum brute_min_crossing_matching(const SetSystem& sys) {
  if (sys.size() > 12) throw RefusedError("brute_min_crossing_matching is limited to n <= 12");
  const auto inside = membership_table(sys);
  MatchingSearch search{sys.size(), sys.range_count(), inside, std::vector<std::size_t>(sys.range_count(), 0),
                        std::vector<std::uint8_t>(sys.size(), 0), {}, {}};
  search.run(0);
  MatchingOptimum out;
  out.matching.n = sys.size();
  out.matching.edges = std::move(search.best);
  out.crossing = sys.size() == 0 ? 0 : search.best_value;
  return out;
}

MatchingOptimum brute_min_crossing_by_permutation(const SetSystem& sys) {
  const Index n = sys.size();
  if (n > 8) throw RefusedError("brute_min_crossing_by_permutation is limited to n <= 8");
  const auto inside = membership_table(sys);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  MatchingOptimum best;
  best.matching.n = n;
  best.crossing = std::numeric_limits<std::size_t>::max();
  do {
    std::size_t worst = 0;
    for (RangeId s = 0; s < sys.range_count(); ++s) {
      std::size_t c = 0;
      for (Index i = 0; i + 1 < n; i += 2)
        c += inside[static_cast<std::size_t>(s) * n + perm[i]] != inside[static_cast<std::size_t>(s) * n + perm[i + 1]];
      worst = std::max(worst, c);
    }
    if (worst < best.crossing) {
      best.crossing = worst;
      best.matching.edges.clear();
      for (Index i = 0; i + 1 < n; i += 2) best.matching.edges.push_back(Edge::make(perm[i], perm[i + 1]));
      if (n % 2 == 1) best.matching.edges.push_back(Edge::loop(perm[n - 1]));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) best.crossing = 0;
  return best;
}

DiscrepancyOptimum brute_min_discrepancy(const SetSystem& sys) {
  const Index n = sys.size();
  if (n > 20) throw RefusedError("brute_min_discrepancy is limited to n <= 20");
  const RangeId m = sys.range_count();
  const auto inside = membership_table(sys);
  std::vector<std::vector<RangeId>> ranges_of(n);
  for (RangeId s = 0; s < m; ++s)
    for (Index x = 0; x < n; ++x)
      if (inside[static_cast<std::size_t>(s) * n + x]) ranges_of[x].push_back(s);

  // Start from all +1 and flip one element per step.
  std::vector<long long> sums(m, 0);
  for (RangeId s = 0; s < m; ++s)
    for (Index x = 0; x < n; ++x) sums[s] += inside[static_cast<std::size_t>(s) * n + x];
  std::vector<std::int8_t> signs(n, 1);
  auto current_disc = [&] {
    long long d = 0;
    for (long long v : sums) d = std::max(d, std::llabs(v));
    return d;
  };
  DiscrepancyOptimum best{Coloring{signs}, current_disc()};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int x = std::countr_zero(step);
    signs[x] = static_cast<std::int8_t>(-signs[x]);
    for (RangeId s : ranges_of[x]) sums[s] += 2 * signs[x];
    const long long d = current_disc();
    if (d < best.discrepancy) best = {Coloring{signs}, d};
  }
  return best;
}

double exact_expected_matching_discrepancy(const Matching& m, const SetSystem& sys) {
  if (m.edges.size() > 20) throw RefusedError("exact_expected_matching_discrepancy is limited to 20 edges");
  if (!m.is_perfect() || m.n != sys.size()) throw ContractViolation("expected discrepancy needs a perfect matching of the ground set");
  // terms[s]: (edge, coefficient) pairs with chi(S) = sum coefficient * sign(edge).
  std::vector<std::vector<std::pair<std::size_t, int>>> terms(sys.range_count());
  for (RangeId s = 0; s < sys.range_count(); ++s) {
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
      const Edge e = m.edges[i];
      const bool iu = sys.contains(e.u, s);
      if (e.is_loop()) {
        if (iu) terms[s].emplace_back(i, 1);
        continue;
      }
      const bool iv = sys.contains(e.v, s);
      if (iu != iv) terms[s].emplace_back(i, iu ? 1 : -1);
    }
  }
  const std::uint64_t total = std::uint64_t{1} << m.edges.size();
  double acc = 0.0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    long long worst = 0;
    for (const auto& ts : terms) {
      long long v = 0;
      for (const auto& [i, c] : ts) v += ((mask >> i) & 1u) ? c : -c;
      worst = std::max(worst, std::llabs(v));
    }
    acc += static_cast<double>(worst);
  }
  return acc / static_cast<double>(total);
}

WeightedEdge min_weighted_crossing_edge(const SetSystem& sys, std::span<const Index> y,
                                        std::span<const double> range_weights) {
  if (y.size() < 2) throw ContractViolation("min_weighted_crossing_edge needs at least two elements");
  if (range_weights.size() != sys.range_count()) throw ContractViolation("one weight per range is required");
  WeightedEdge best;
  best.total = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      double w = 0.0;
      for (RangeId s = 0; s < sys.range_count(); ++s)
        if (sys.contains(y[i], s) != sys.contains(y[j], s)) w += range_weights[s];
      if (w < best.total) best = {Edge::make(y[i], y[j]), w};
    }
  }
  return best;
}

}  // namespace lowcross
