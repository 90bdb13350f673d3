#include "lowcross/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lowcross/errors.hpp"
#include "lowcross/subset_sampling.hpp"
#include "lowcross/weighted_index.hpp"

namespace lowcross {

bool Matching::is_valid() const {
  std::vector<std::uint8_t> seen(n, 0);
  int loops = 0;
  for (const auto& e : edges) {
    if (e.u > e.v || e.v >= n) return false;
    if (e.is_loop()) {
      if (++loops > 1 || seen[e.u]) return false;
      seen[e.u] = 1;
      continue;
    }
    if (seen[e.u] || seen[e.v]) return false;
    seen[e.u] = seen[e.v] = 1;
  }
  return true;
}

bool Matching::is_perfect() const {
  if (!is_valid()) return false;
  std::size_t covered = 0;
  bool loop = false;
  for (const auto& e : edges) {
    covered += e.is_loop() ? 1 : 2;
    loop = loop || e.is_loop();
  }
  return covered == n && loop == (n % 2 == 1);
}

double mwu_rate(double constant, double count, std::size_t t, std::size_t ground, const AssumptionParams& params) {
  const double denom = params.a * std::pow(static_cast<double>(ground), params.gamma) + params.b;
  const double arg = count * static_cast<double>(t);
  if (!(arg > 1.0)) return 0.0;
  return std::min(constant * std::log(arg) / denom, 1.0);
}

std::vector<Edge> partial_matching(const SetSystem& sys, const CandidateEdges& edges, const AssumptionParams& params,
                                   std::size_t t, Rng& rng, const MwuConfig& config, MwuTrace* trace) {
  params.validate();
  if (edges.vertex_count() != sys.size())
    throw ContractViolation("partial_matching: candidate edges are over a different vertex count");
  if (t == 0) return {};
  if (edges.empty()) throw ContractViolation("partial_matching: empty candidate edge set");
  if (2 * t > sys.size()) throw ContractViolation("partial_matching: more edges requested than vertices allow");
  const RangeId m = sys.range_count();

  const std::size_t n_edges = edges.size();
  const double p1 = mwu_rate(config.c_edge, static_cast<double>(n_edges), t, sys.size(), params);
  const double p2 = mwu_rate(config.c_range, static_cast<double>(m), t, sys.size(), params);
  if (trace) {
    *trace = {};
    trace->p_edge = p1;
    trace->p_range = p2;
  }

  WeightedIndex omega(n_edges, 1.0);
  WeightedIndex pi(m, 1.0);
  BernoulliSubsetSampler edge_sampler;
  BernoulliSubsetSampler range_sampler;
  std::vector<Edge> out;
  out.reserve(t);

  for (std::size_t i = 0; i < t; ++i) {
    if (!(omega.total() > 0.0))
      throw InfeasibleSampleError("candidate edges exhausted after " + std::to_string(out.size()) + " of " +
                                      std::to_string(t) + " edges",
                                  out);
    const std::size_t chosen = omega.sample(rng);
    const Edge e_i = edges.at(chosen);
    const auto s_i = m > 0 ? static_cast<RangeId>(pi.sample(rng)) : RangeId{0};
    MwuStep* step = nullptr;
    if (trace) {
      trace->steps.push_back({chosen, s_i, {}, {}});
      step = &trace->steps.back();
    }

    // Without ranges no edge is ever halved.
    if (m > 0 && edges.is_complete()) {
      CompleteEdgeCursor cursor(edges.vertex_count());
      edge_sampler.for_each(n_edges, p1, rng, [&](std::size_t j) {
        if (sys.incidence(cursor.seek(j), s_i)) {
          omega.scale_deferred(j, 0.5);
          if (step) step->halved.push_back(j);
        }
      });
    } else if (m > 0) {
      edge_sampler.for_each(n_edges, p1, rng, [&](std::size_t j) {
        if (sys.incidence(edges.at(j), s_i)) {
          omega.scale_deferred(j, 0.5);
          if (step) step->halved.push_back(j);
        }
      });
    }

    range_sampler.for_each(m, p2, rng, [&](std::size_t s) {
      if (sys.incidence(e_i, static_cast<RangeId>(s))) {
        pi.scale_deferred(s, 2.0);
        if (step) step->doubled.push_back(static_cast<RangeId>(s));
      }
    });
    pi.flush();

    omega.set_deferred(chosen, 0.0);
    edges.for_each_incident(e_i.u, [&](std::size_t j) { omega.set_deferred(j, 0.0); });
    edges.for_each_incident(e_i.v, [&](std::size_t j) { omega.set_deferred(j, 0.0); });
    omega.flush();

    out.push_back(e_i);
  }

  if (trace) {
    trace->final_edge_weights = omega.weights();
    trace->final_range_weights = pi.weights();
  }
  return out;
}

void match_randomly(std::vector<Index> vertices, Rng& rng, std::vector<Edge>& out) {
  std::shuffle(vertices.begin(), vertices.end(), rng);
  std::size_t i = 0;
  for (; i + 1 < vertices.size(); i += 2) out.push_back(Edge::make(vertices[i], vertices[i + 1]));
  if (i < vertices.size()) out.push_back(Edge::loop(vertices[i]));
}

Matching build_matching(const SetSystem& sys, const AssumptionParams& params, Rng& rng, const MwuConfig& config) {
  params.validate();
  Matching result;
  result.n = sys.size();
  std::vector<Index> alive(sys.size());
  for (Index x = 0; x < sys.size(); ++x) alive[x] = x;
  std::vector<std::uint8_t> matched(sys.size(), 0);

  while (alive.size() >= 4) {
    const SetSystem sub = sys.restrict(alive);
    const auto k = static_cast<Index>(alive.size());
    const std::size_t t = (k + 3) / 4;
    const auto part = partial_matching(sub, CandidateEdges::complete(k), params, t, rng, config);
    for (const auto& e : part) {
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

std::vector<std::size_t> crossing_counts(const Matching& m, const SetSystem& sys) {
  if (m.n != sys.size()) throw ContractViolation("matching and set system differ in ground size");
  std::vector<std::size_t> counts(sys.range_count(), 0);
  std::vector<std::uint8_t> inside(sys.size());
  for (RangeId s = 0; s < sys.range_count(); ++s) {
    for (Index x = 0; x < sys.size(); ++x) inside[x] = sys.contains(x, s);
    std::size_t c = 0;
    for (const auto& e : m.edges) c += !e.is_loop() && inside[e.u] != inside[e.v];
    counts[s] = c;
  }
  return counts;
}

std::size_t crossing_number(const Matching& m, const SetSystem& sys) {
  const auto counts = crossing_counts(m, sys);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

}  // namespace lowcross
