#include "lowcross/candidate_edges.hpp"

#include <cmath>

#include "lowcross/errors.hpp"
#include "lowcross/subset_sampling.hpp"

namespace lowcross {

CandidateEdges CandidateEdges::complete(Index vertices) {
  CandidateEdges e;
  e.k_ = vertices;
  e.complete_ = true;
  return e;
}

CandidateEdges CandidateEdges::from_list(Index vertices, std::vector<Edge> edges) {
  CandidateEdges e;
  e.k_ = vertices;
  e.complete_ = false;
  e.adj_offsets_.assign(static_cast<std::size_t>(vertices) + 1, 0);
  for (const auto& edge : edges) {
    if (edge.is_loop() || edge.u > edge.v || edge.v >= vertices)
      throw ContractViolation("candidate edges must be non-loop pairs u < v inside the vertex range");
    ++e.adj_offsets_[edge.u + 1];
    ++e.adj_offsets_[edge.v + 1];
  }
  for (std::size_t v = 0; v < vertices; ++v) e.adj_offsets_[v + 1] += e.adj_offsets_[v];
  e.adj_.resize(e.adj_offsets_.back());
  std::vector<std::size_t> fill(e.adj_offsets_.begin(), e.adj_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    e.adj_[fill[edges[i].u]++] = i;
    e.adj_[fill[edges[i].v]++] = i;
  }
  e.edges_ = std::move(edges);
  return e;
}

Edge CandidateEdges::at(std::size_t i) const {
  if (i >= size()) throw ContractViolation("candidate edge index out of range");
  if (!complete_) return edges_[i];
  // Row u is the largest u with row_start(u) <= i.
  const double kk = 2.0 * k_ - 1.0;
  auto u = static_cast<Index>(std::max(0.0, std::floor((kk - std::sqrt(kk * kk - 8.0 * static_cast<double>(i))) / 2.0)));
  while (u > 0 && row_start(k_, u) > i) --u;
  while (u + 1 < k_ && row_start(k_, u + 1) <= i) ++u;
  return Edge{u, static_cast<Index>(u + 1 + (i - row_start(k_, u)))};
}

void zero_incident(WeightedIndex& weights, const CandidateEdges& edges, Index vertex) {
  if (vertex >= edges.vertex_count()) throw ContractViolation("zero_incident: vertex out of range");
  edges.for_each_incident(vertex, [&](std::size_t i) { weights.set_deferred(i, 0.0); });
  weights.flush();
}

std::vector<std::size_t> binomial_subset(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("binomial_subset: p must lie in [0, 1]");
  std::vector<std::size_t> out;
  BernoulliSubsetSampler sampler;
  sampler.for_each(n, p, rng, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace lowcross
