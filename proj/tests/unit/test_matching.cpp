#include <doctest.h>

#include <cmath>

#include "../support.hpp"

using namespace lowcross;
using lowcross::testing::random_explicit_system;

namespace {

std::size_t crossing_by_double_loop(const Matching& m, const SetSystem& sys) {
  std::size_t best = 0;
  for (RangeId s = 0; s < sys.range_count(); ++s) {
    std::size_t c = 0;
    for (const auto& e : m.edges) c += sys.contains(e.u, s) != sys.contains(e.v, s);
    best = std::max(best, c);
  }
  return best;
}

// Points 0..k-1 on a line with every closed interval [i, j] as a range.
SetSystem interval_system(Index k) {
  std::vector<std::vector<Index>> ranges;
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) {
      std::vector<Index> r;
      for (Index x = i; x <= j; ++x) r.push_back(x);
      ranges.push_back(std::move(r));
    }
  return SetSystem::from_ranges(k, std::move(ranges));
}

}  // namespace

TEST_CASE("crossing number examples") {
  const SetSystem sys = SetSystem::from_ranges(2, {{0, 1}, {}});
  CHECK(crossing_number(Matching{2, {Edge{0, 1}}}, sys) == 0);

  const GridInstance line = grid_instance(4, 1);
  const SetSystem lsys = SetSystem::from_halfspaces(line.points, line.ranges);
  const Matching lm{4, {Edge{0, 1}, Edge{2, 3}}};
  CHECK(crossing_counts(lm, lsys) == std::vector<std::size_t>{1, 0, 1, 0});
  CHECK(crossing_number(lm, lsys) == 1);

  // Vertical nearest-neighbour pairs on the 4x4 grid.
  const GridInstance g = grid_instance(16, 2);
  const SetSystem gsys = SetSystem::from_halfspaces(g.points, g.ranges);
  Matching gm{16, {}};
  for (Index x = 1; x <= 4; ++x)
    for (Index y = 1; y <= 3; y += 2)
      gm.edges.push_back(Edge::make(lowcross::testing::grid_index({x, y}, 4), lowcross::testing::grid_index({x, y + 1}, 4)));
  REQUIRE(gm.is_perfect());
  CHECK(crossing_number(gm, gsys) == 4);
}

TEST_CASE("crossing number agrees with a double loop") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial * 2;
    const SetSystem sys = random_explicit_system(n, 1 + trial * 2, rng);
    Matching m = build_matching(sys, AssumptionParams{1.0, 2.0, 0.5}, rng);
    CHECK(crossing_number(m, sys) == crossing_by_double_loop(m, sys));
  }
}

TEST_CASE("matching validity predicates") {
  CHECK(Matching{4, {Edge{0, 1}, Edge{2, 3}}}.is_perfect());
  CHECK_FALSE(Matching{4, {Edge{0, 1}, Edge{1, 3}}}.is_valid());
  CHECK_FALSE(Matching{4, {Edge{0, 1}}}.is_perfect());
  CHECK(Matching{4, {Edge{0, 1}}}.is_valid());
  CHECK(Matching{3, {Edge{0, 2}, Edge::loop(1)}}.is_perfect());
  CHECK_FALSE(Matching{4, {Edge{0, 2}, Edge::loop(1), Edge::loop(3)}}.is_valid());
  CHECK_FALSE(Matching{4, {Edge{0, 5}}}.is_valid());
}

TEST_CASE("sampling rates follow the displayed formula") {
  const AssumptionParams p{2.0, 3.0, 0.5};
  const double expect = std::min(48.0 * std::log(100.0 * 5.0) / (2.0 * std::sqrt(64.0) + 3.0), 1.0);
  CHECK(mwu_rate(48.0, 100.0, 5, 64, p) == doctest::Approx(expect));
  CHECK(mwu_rate(72.0, 1e6, 1000, 64, p) == 1.0);
}

TEST_CASE("partial matching on four elements returns one edge") {
  Rng rng(1);
  const SetSystem sys = random_explicit_system(4, 5, rng);
  for (int rep = 0; rep < 20; ++rep) {
    const auto edges = partial_matching(sys, CandidateEdges::complete(4), AssumptionParams{1.0, 1.0, 0.5}, 1, rng);
    REQUIRE(edges.size() == 1);
    CHECK_FALSE(edges[0].is_loop());
    CHECK(edges[0].v < 4);
  }
}

TEST_CASE("partial matching on a line: disjoint edges, crossing and call bounds") {
  const SetSystem base = interval_system(8);
  const AssumptionParams params{1.0, 2.0, 0.5};
  const double n = 8.0;
  const double m = base.range_count();
  const std::size_t t = 2;
  const double p1 = mwu_rate(48.0, 28.0, t, 8, params);
  const double p2 = mwu_rate(72.0, m, t, 8, params);
  Rng rng(99);
  double crossing_sum = 0.0;
  double calls_sum = 0.0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    const SetSystem sys = base.fork();
    const auto edges = partial_matching(sys, CandidateEdges::complete(8), params, t, rng);
    REQUIRE(edges.size() == t);
    REQUIRE_FALSE(edges[0].touches(edges[1].u));
    REQUIRE_FALSE(edges[0].touches(edges[1].v));
    crossing_sum += static_cast<double>(crossing_number(Matching{8, edges}, sys));
    calls_sum += static_cast<double>(sys.counts().incidence);
  }
  CHECK(crossing_sum / trials <= bounds::partial_matching_crossing(n, m, params));
  CHECK(calls_sum / trials <= (n / 4.0) * ((n * n / 2.0) * p1 + m * p2) * 1.5);
}

TEST_CASE("partial matching trace replays to the same weights") {
  Rng rng(4);
  const SetSystem sys = random_explicit_system(40, 50, rng);
  const auto edges = CandidateEdges::complete(40);
  MwuTrace trace;
  const auto out = partial_matching(sys, edges, AssumptionParams{1.0, 1.0, 0.5}, 10, rng, {}, &trace);
  REQUIRE(out.size() == 10);
  REQUIRE(trace.steps.size() == 10);

  std::vector<double> omega(edges.size(), 1.0);
  std::vector<double> pi(sys.range_count(), 1.0);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    CHECK(edges.at(step.edge) == out[i]);
    CHECK(omega[step.edge] > 0.0);
    for (std::size_t j : step.halved) {
      CHECK((sys.contains(edges.at(j).u, step.range) != sys.contains(edges.at(j).v, step.range)));
      omega[j] *= 0.5;
    }
    for (RangeId s : step.doubled) {
      CHECK((sys.contains(out[i].u, s) != sys.contains(out[i].v, s)));
      pi[s] *= 2.0;
    }
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (edges.at(j).touches(out[i].u) || edges.at(j).touches(out[i].v)) omega[j] = 0.0;
  }
  auto same_up_to_scale = [](const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    const double sa = std::accumulate(a.begin(), a.end(), 0.0);
    const double sb = std::accumulate(b.begin(), b.end(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double x = a[i] / sa;
      const double y = b[i] / sb;
      REQUIRE(std::abs(x - y) <= 1e-9 * std::max(std::abs(x), std::abs(y)) + 1e-300);
    }
  };
  same_up_to_scale(omega, trace.final_edge_weights);
  same_up_to_scale(pi, trace.final_range_weights);
}

TEST_CASE("exhausted candidate edges raise an infeasible-sample error") {
  Rng rng(2);
  const SetSystem sys = random_explicit_system(4, 3, rng);
  const auto star = CandidateEdges::from_list(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}});
  try {
    partial_matching(sys, star, AssumptionParams{}, 2, rng);
    FAIL("expected an infeasible sample");
  } catch (const InfeasibleSampleError& e) {
    CHECK(e.partial().size() == 1);
  }
}

TEST_CASE("build matching small cases") {
  Rng rng(8);
  const AssumptionParams p{1.0, 1.0, 0.5};
  CHECK(build_matching(SetSystem::from_ranges(0, {}), p, rng).edges.empty());

  const Matching one = build_matching(SetSystem::from_ranges(1, {{0}}), p, rng);
  CHECK(one.edges == std::vector<Edge>{Edge::loop(0)});
  CHECK(one.is_perfect());

  const Matching two = build_matching(SetSystem::from_ranges(2, {{0}}), p, rng);
  CHECK(two.edges == std::vector<Edge>{Edge{0, 1}});

  const Matching five = build_matching(random_explicit_system(5, 6, rng), p, rng);
  CHECK(five.is_perfect());
  CHECK(five.edges.size() == 3);
  CHECK(std::count_if(five.edges.begin(), five.edges.end(), [](Edge e) { return e.is_loop(); }) == 1);

  const Matching no_ranges = build_matching(SetSystem::from_ranges(9, {}), p, rng);
  CHECK(no_ranges.is_perfect());
}

TEST_CASE("build matching is perfect for every seed") {
  for (Index n = 2; n <= 64; ++n) {
    Rng rng(1000 + n);
    const SetSystem sys = random_explicit_system(n, 1 + n % 13, rng);
    for (int seed = 0; seed < 3; ++seed) {
      Rng r = make_rng(n, seed);
      REQUIRE(build_matching(sys, AssumptionParams{1.0, 2.0, 0.5}, r).is_perfect());
    }
  }
}

TEST_CASE("build matching never beats the brute-force optimum") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = 2 + trial % 7;
    const SetSystem sys = random_explicit_system(n, 1 + trial % 8, rng);
    const auto opt = brute_min_crossing_matching(sys);
    const Matching m = build_matching(sys, AssumptionParams{1.0, 1.0, 0.5}, rng);
    CHECK(crossing_number(m, sys) >= opt.crossing);
  }
}

TEST_CASE("build matching on a half-space instance meets the crossing and call bounds") {
  Rng inst(123);
  const Index n = 256;
  const SetSystem base = lowcross::testing::halfspace_instance(n, 2, inst);
  const double c = std::pow(4.0 * std::exp(1.0), 2.0);
  const AssumptionParams params = params_from_dual_shatter(c, 2.0, base.range_count());
  std::vector<double> crossing;
  std::vector<double> calls;
  for (int seed = 0; seed < 10; ++seed) {
    const SetSystem sys = base.fork();
    Rng rng = make_rng(7, seed);
    const Matching m = build_matching(sys, params, rng);
    REQUIRE(m.is_perfect());
    crossing.push_back(static_cast<double>(crossing_number(m, sys)));
    calls.push_back(static_cast<double>(sys.counts().incidence));
  }
  const double m = base.range_count();
  CHECK(lowcross::testing::mean(crossing) <= bounds::matching_crossing(n, m, params));
  CHECK(lowcross::testing::mean(calls) <= 1.5 * bounds::matching_oracle_calls(n, m, params));
}

TEST_CASE("a fixed seed reproduces the matching") {
  Rng inst(5);
  const SetSystem sys = random_explicit_system(30, 40, inst);
  Rng a = make_rng(42, 3);
  Rng b = make_rng(42, 3);
  CHECK(build_matching(sys, AssumptionParams{1.0, 1.0, 0.5}, a).edges ==
        build_matching(sys, AssumptionParams{1.0, 1.0, 0.5}, b).edges);
}
