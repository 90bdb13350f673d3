#pragma once

#include <cstddef>
#include <vector>

#include "lowcross/candidate_edges.hpp"
#include "lowcross/params.hpp"
#include "lowcross/set_system.hpp"
#include "lowcross/types.hpp"

namespace lowcross {

/// Set of vertex-disjoint edges over {0..n-1}. At most one edge may be a loop.
struct Matching {
  Index n = 0;
  std::vector<Edge> edges;

  /// Disjoint endpoints, in-range indices, at most one loop.
  bool is_valid() const;
  /// Valid and covers every element; a loop is present only when n is odd.
  bool is_perfect() const;
};

/// Sampling-rate constants of the MWU matching step.
struct MwuConfig {
  double c_edge = 48.0;
  double c_range = 72.0;
};

/// One iteration of the partial-matching loop, as indices into the candidate
/// edges and the ranges.
struct MwuStep {
  std::size_t edge = 0;
  RangeId range = 0;
  std::vector<std::size_t> halved;
  std::vector<RangeId> doubled;
};

/// Full record of a partial-matching run. Final weights are stored up to a
/// common power-of-two factor per vector.
struct MwuTrace {
  double p_edge = 0.0;
  double p_range = 0.0;
  std::vector<MwuStep> steps;
  std::vector<double> final_edge_weights;
  std::vector<double> final_range_weights;
};

/// min{C ln(count * t) / (a |X|^gamma + b), 1}.
double mwu_rate(double constant, double count, std::size_t t, std::size_t ground, const AssumptionParams& params);

/// Runs t rounds of the primal-dual MWU sampler on candidate edges E (over
/// the local indices of sys) and returns the t drawn edges, which are
/// pairwise disjoint. Throws InfeasibleSampleError when every candidate edge
/// has weight zero before t edges were drawn.
std::vector<Edge> partial_matching(const SetSystem& sys, const CandidateEdges& edges, const AssumptionParams& params,
                                   std::size_t t, Rng& rng, const MwuConfig& config = {}, MwuTrace* trace = nullptr);

/// Pairs up `vertices` uniformly at random; an odd leftover becomes a loop.
void match_randomly(std::vector<Index> vertices, Rng& rng, std::vector<Edge>& out);

/// Perfect matching of all elements built by repeated partial matchings on the
/// complete edge set of the unmatched elements.
Matching build_matching(const SetSystem& sys, const AssumptionParams& params, Rng& rng, const MwuConfig& config = {});

/// Number of edges of M crossed by each range (uncounted evaluation).
std::vector<std::size_t> crossing_counts(const Matching& m, const SetSystem& sys);
/// Largest number of edges crossed by a single range.
std::size_t crossing_number(const Matching& m, const SetSystem& sys);

}  // namespace lowcross
