#pragma once

#include <span>
#include <vector>

#include "lowcross/discrepancy.hpp"
#include "lowcross/matching.hpp"
#include "lowcross/set_system.hpp"

// Exhaustive reference solvers for small instances. All results are
// deterministic and never touch the oracle counters.

namespace lowcross {

struct MatchingOptimum {
  Matching matching;
  std::size_t crossing = 0;
};

/// Perfect matching of minimum crossing number by branch and bound over all
/// (n-1)!! matchings (the lowest unmatched element is paired first). n <= 12.
MatchingOptimum brute_min_crossing_matching(const SetSystem& sys);

/// Same optimum found by pairing up consecutive entries of every permutation.
/// n <= 8.
MatchingOptimum brute_min_crossing_by_permutation(const SetSystem& sys);

struct DiscrepancyOptimum {
  Coloring coloring;
  long long discrepancy = 0;
};

/// Minimum discrepancy over all 2^n colorings, visited in Gray-code order.
/// n <= 20.
DiscrepancyOptimum brute_min_discrepancy(const SetSystem& sys);

/// Expected discrepancy of the coloring drawn from a perfect matching, by
/// enumerating all 2^|M| edge signs. Only edges crossing a range (and loops
/// inside it) contribute to its sum. |M| <= 20.
double exact_expected_matching_discrepancy(const Matching& m, const SetSystem& sys);

struct WeightedEdge {
  Edge edge;
  double total = 0.0;
};

/// Pair of elements of Y minimising the total weight of the ranges crossing
/// it, over all C(|Y|, 2) pairs. Ties go to the first pair in sweep order.
WeightedEdge min_weighted_crossing_edge(const SetSystem& sys, std::span<const Index> y,
                                        std::span<const double> range_weights);

}  // namespace lowcross
