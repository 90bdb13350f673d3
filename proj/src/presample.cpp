#include "lowcross/presample.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "lowcross/candidate_edges.hpp"
#include "lowcross/errors.hpp"
#include "lowcross/geometry.hpp"
#include "lowcross/subset_sampling.hpp"

namespace lowcross {

double presample_probability(double n, double alpha, double delta) {
  if (!(n >= 2.0)) throw ParameterError("presample_probability needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  const double p = 2.0 * std::log(n) / std::pow(n, 1.0 - alpha) + 4.0 * std::log(2.0 / delta) / std::pow(n, 2.0 - alpha);
  return std::min(p, 1.0);
}

void PresampleConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (!(c > 0.0)) throw ParameterError("dual shatter constant c must be positive");
  if (!(d > alpha)) throw ParameterError("dual shatter exponent d must exceed alpha");
  if (!(rate_multiplier > 0.0)) throw ParameterError("rate multiplier must be positive");
}

std::vector<Edge> sample_edges(Index n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("edge sampling probability must lie in [0, 1]");
  std::vector<Edge> out;
  CompleteEdgeCursor cursor(n);
  BernoulliSubsetSampler sampler;
  sampler.for_each(CandidateEdges::complete_size(n), p, rng, [&](std::size_t i) { out.push_back(cursor.seek(i)); });
  return out;
}

Matching matching_presampled(const SetSystem& sys, const PresampleConfig& config, Rng& rng, PresampleStats* stats) {
  config.validate();
  PresampleStats local;
  PresampleStats& st = stats ? *stats : local;
  st = {};

  const RangeId m = sys.range_count();
  AssumptionParams params;
  params.a = std::pow(2.0 * config.c, 1.0 / config.d);
  params.b = m > 1 ? std::log(static_cast<double>(m)) : 0.0;
  params.gamma = 1.0 - config.alpha / config.d;
  params.validate();

  Matching result;
  result.n = sys.size();
  std::vector<Index> alive(sys.size());
  for (Index x = 0; x < sys.size(); ++x) alive[x] = x;
  std::vector<std::uint8_t> matched(sys.size(), 0);

  while (alive.size() > 16) {
    const auto k = static_cast<Index>(alive.size());
    const SetSystem sub = sys.restrict(alive);
    const std::size_t t = (k + 15) / 16;
    const double delta = 1.0 / k;
    const double p = std::min(config.rate_multiplier * presample_probability(k, config.alpha, delta), 1.0);

    auto attempt = [&](double rate) -> std::optional<std::vector<Edge>> {
      if (rate >= 1.0) {
        st.sampled_edges += CandidateEdges::complete_size(k);
        return partial_matching(sub, CandidateEdges::complete(k), params, t, rng, config.mwu);
      }
      auto sample = sample_edges(k, rate, rng);
      st.sampled_edges += sample.size();
      if (sample.empty()) return std::nullopt;
      try {
        return partial_matching(sub, CandidateEdges::from_list(k, std::move(sample)), params, t, rng, config.mwu);
      } catch (const InfeasibleSampleError&) {
        return std::nullopt;
      }
    };

    auto part = attempt(p);
    if (!part) {
      ++st.retries;
      part = attempt(std::min(2.0 * p, 1.0));
    }
    if (!part) {
      ++st.fallbacks;
      part = attempt(1.0);
    }
    ++st.rounds;
    for (const auto& e : *part) {
      const Index u = alive[e.u];
      const Index v = alive[e.v];
      matched[u] = matched[v] = 1;
      result.edges.push_back(Edge::make(u, v));
    }
    std::erase_if(alive, [&](Index x) { return matched[x] != 0; });
  }
  match_randomly(std::move(alive), rng, result.edges);
  return result;
}

Coloring low_disc_color_presampled(const SetSystem& sys, const PresampleConfig& config, Rng& rng, Matching* matching,
                                   PresampleStats* stats) {
  Matching m = matching_presampled(sys, config, rng, stats);
  Coloring chi = color_from_matching(m, rng);
  if (matching) *matching = std::move(m);
  return chi;
}

RelaxedMwuResult relaxed_mwu(const SetSystem& sys, double alpha, const std::vector<Edge>& candidates, Rng& rng) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  const Index n = sys.size();
  const RangeId m = sys.range_count();
  const std::size_t pairs = CandidateEdges::complete_size(n);

  std::vector<std::uint8_t> in_e(pairs, 0);
  for (const auto& e : candidates) {
    if (e.is_loop() || e.u > e.v || e.v >= n) throw ContractViolation("relaxed_mwu: candidate edges must be pairs u < v < n");
    in_e[CandidateEdges::complete_index(n, e.u, e.v)] = 1;
  }

  RelaxedMwuResult res;
  res.range_exponents.assign(m, 0);

  // alive[j] lists the pair indices with both endpoints unmatched, and
  // weight[idx] is the total (scaled) weight of the ranges crossing pair idx.
  std::vector<std::size_t> alive(pairs);
  std::vector<Edge> pair_at(pairs);
  std::vector<double> weight(pairs, 0.0);
  {
    CompleteEdgeCursor cursor(n);
    for (std::size_t i = 0; i < pairs; ++i) {
      alive[i] = i;
      pair_at[i] = cursor.seek(i);
      double w = 0.0;
      for (RangeId s = 0; s < m; ++s) w += sys.incidence(pair_at[i], s) ? 1.0 : 0.0;
      weight[i] = w;
    }
  }
  int shift = 0;  // stored weights are true weights times 2^{-shift}

  std::vector<std::uint8_t> removed(n, 0);
  std::vector<std::pair<double, std::size_t>> ranked;
  std::vector<std::size_t> tier_candidates;
  const std::size_t steps = n / 2;
  Index unmatched = n;
  for (std::size_t i = 0; i < steps; ++i) {
    const double want = std::ceil(std::pow(static_cast<double>(unmatched), 2.0 - alpha));
    const std::size_t keep = want >= static_cast<double>(alive.size()) ? alive.size() : static_cast<std::size_t>(want);

    ranked.clear();
    for (std::size_t idx : alive) ranked.emplace_back(weight[idx], idx);
    if (keep < ranked.size()) std::nth_element(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(keep), ranked.end());
    tier_candidates.clear();
    for (std::size_t j = 0; j < keep; ++j)
      if (in_e[ranked[j].second]) tier_candidates.push_back(ranked[j].second);
    std::sort(tier_candidates.begin(), tier_candidates.end());
    if (tier_candidates.empty()) {
      res.halted_at = i;
      return res;
    }

    const std::size_t pick =
        tier_candidates[std::uniform_int_distribution<std::size_t>(0, tier_candidates.size() - 1)(rng)];
    const Edge e_i = pair_at[pick];
    res.edges.push_back(e_i);
    removed[e_i.u] = removed[e_i.v] = 1;
    unmatched -= 2;
    std::erase_if(alive, [&](std::size_t idx) { return removed[pair_at[idx].u] || removed[pair_at[idx].v]; });

    for (RangeId s = 0; s < m; ++s) {
      if (!sys.incidence(e_i, s)) continue;
      const double add = std::ldexp(1.0, static_cast<int>(res.range_exponents[s]) - shift);
      ++res.range_exponents[s];
      for (std::size_t idx : alive)
        if (sys.incidence(pair_at[idx], s)) weight[idx] += add;
    }
    const std::uint32_t top = *std::max_element(res.range_exponents.begin(), res.range_exponents.end());
    if (static_cast<int>(top) - shift > 900) {
      shift += 600;
      for (std::size_t idx : alive) weight[idx] = std::ldexp(weight[idx], -600);
    }
  }
  res.halted_at = steps;
  return res;
}

double subthreshold_probability(double n, double alpha) {
  const double l = std::log2(n);
  return std::pow(n, alpha - 1.0) / (l * l);
}

GridLowerBoundReport grid_lowerbound_check(Index n0, int d, double alpha, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw ParameterError("edge sampling probability must lie in (0, 1]");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  const GridInstance grid = grid_instance(n0, d);
  const SetSystem sys = SetSystem::from_halfspaces(grid.points, grid.ranges);

  GridLowerBoundReport rep;
  rep.n = sys.size();
  rep.m = sys.range_count();
  rep.p = p;
  rep.k = std::pow(1.0 / (16.0 * p), 1.0 / d);
  rep.applicable = p * std::pow(static_cast<double>(rep.n), 1.0 - alpha) < 1.0;
  if (!rep.applicable) return rep;

  const auto sample = sample_edges(rep.n, p, rng);
  rep.sampled_edges = sample.size();
  const auto k_floor = static_cast<std::size_t>(std::floor(rep.k));
  for (const auto& e : sample) {
    std::size_t crossings = 0;
    for (RangeId s = 0; s < rep.m; ++s) crossings += sys.contains(e.u, s) != sys.contains(e.v, s);
    rep.good_edges += crossings <= k_floor;
  }
  rep.passed = 8 * rep.good_edges <= rep.n;
  if (rep.passed && rep.m > 0) {
    const std::size_t quarter = rep.n / 4;
    const std::size_t bad = quarter > rep.good_edges ? quarter - rep.good_edges : 0;
    const std::size_t total = bad * (k_floor + 1);
    rep.crossing_lower_bound = (total + rep.m - 1) / rep.m;
  }
  return rep;
}

}  // namespace lowcross
