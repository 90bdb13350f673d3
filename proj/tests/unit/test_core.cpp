#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>

#include "../support.hpp"

using namespace lowcross;
using lowcross::testing::random_explicit_system;

TEST_CASE("membership on explicit and half-space ranges") {
  const SetSystem sys = SetSystem::from_ranges(3, {{0, 2}});
  CHECK(sys.membership(2, 0));
  CHECK_FALSE(sys.membership(1, 0));
  CHECK(sys.counts().membership == 2);

  const SetSystem geo = SetSystem::from_halfspaces(PointSet(2, {-1.0, 5.0}), {HalfSpace{{1.0, 0.0}, 0.0}});
  CHECK(geo.membership(0, 0));
}

TEST_CASE("out-of-range queries are contract violations") {
  const SetSystem sys = SetSystem::from_ranges(3, {{0, 2}});
  CHECK_THROWS_AS(sys.membership(3, 0), ContractViolation);
  CHECK_THROWS_AS(sys.membership(0, 1), ContractViolation);
  CHECK_THROWS_AS(sys.incidence(Edge{0, 5}, 0), ContractViolation);
  CHECK_THROWS_AS(SetSystem::from_ranges(3, {{2, 1}}), ContractViolation);
  CHECK_THROWS_AS(SetSystem::from_ranges(3, {{0, 3}}), ContractViolation);
}

TEST_CASE("incidence examples and counter accounting") {
  const SetSystem sys = SetSystem::from_ranges(2, {{0}, {0, 1}});
  CHECK(sys.incidence(Edge{0, 1}, 0));
  CHECK_FALSE(sys.incidence(Edge{0, 1}, 1));
  CHECK(sys.counts().incidence == 2);
  CHECK(sys.counts().membership == 4);
  CHECK_FALSE(sys.incidence(Edge::loop(0), 0));
  CHECK(sys.counts().incidence == 3);
  CHECK(sys.counts().membership == 5);

  const SetSystem fresh = sys.fork();
  CHECK(fresh.counts().incidence == 0);
  for (int k = 0; k < 37; ++k) fresh.incidence(Edge{0, 1}, k % 2);
  CHECK(fresh.counts().incidence == 37);
  CHECK(sys.counts().incidence == 3);
  sys.reset_counts();
  CHECK(sys.counts().incidence == 0);
}

TEST_CASE("grid edge is crossed by as many ranges as its l1 length") {
  const GridInstance g = grid_instance(16, 2);
  const SetSystem sys = SetSystem::from_halfspaces(g.points, g.ranges);
  const Index a = lowcross::testing::grid_index({1, 1}, g.side);
  const Index b = lowcross::testing::grid_index({2, 3}, g.side);
  int crossing = 0;
  for (RangeId s = 0; s < sys.range_count(); ++s) crossing += sys.incidence(Edge::make(a, b), s);
  CHECK(crossing == 3);
}

TEST_CASE("incidence equals membership xor, exhaustively on small systems") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 1 + trial % 10;
    const RangeId m = 1 + (trial * 7) % 10;
    const SetSystem sys = random_explicit_system(n, m, rng);
    for (RangeId s = 0; s < m; ++s)
      for (Index u = 0; u < n; ++u)
        for (Index v = u; v < n; ++v)
          REQUIRE(sys.incidence(Edge{u, v}, s) == (sys.membership(u, s) != sys.membership(v, s)));
  }
}

TEST_CASE("restriction maps local indices and composes") {
  const SetSystem sys = SetSystem::from_ranges(6, {{1, 3, 5}, {0, 4}});
  const std::vector<Index> a{1, 2, 4, 5};
  const SetSystem ra = sys.restrict(a);
  CHECK(ra.size() == 4);
  CHECK(ra.range_members(0) == std::vector<Index>{0, 3});
  const std::vector<Index> b{0, 2};
  const SetSystem rb = ra.restrict(b);
  const std::vector<Index> direct{1, 4};
  const SetSystem rd = sys.restrict(direct);
  for (RangeId s = 0; s < 2; ++s) CHECK(rb.range_members(s) == rd.range_members(s));
  CHECK(rb.root_index(1) == 4);
  rb.incidence(Edge{0, 1}, 0);
  CHECK(sys.counts().incidence == 1);
}

TEST_CASE("params from a dual shatter bound") {
  const AssumptionParams p = params_from_dual_shatter(1.0, 2.0, 34.0);
  CHECK(p.a == doctest::Approx(2.0402788931935794).epsilon(1e-12));
  CHECK(p.b == doctest::Approx(5.08746284125034).epsilon(1e-12));
  CHECK(p.gamma == doctest::Approx(0.5));

  const AssumptionParams big_d = params_from_dual_shatter(1.0, 1e6, 34.0);
  CHECK(big_d.gamma == doctest::Approx(1.0).epsilon(1e-5));

  CHECK_THROWS_AS(params_from_dual_shatter(1.0, 1.0, 34.0), ParameterError);
  CHECK_THROWS_AS(params_from_dual_shatter(0.0, 2.0, 34.0), ParameterError);
  CHECK_THROWS_AS(params_from_dual_shatter(1.0, 2.0, 33.0), PreconditionError);

  double last_a = 0.0;
  for (double c : {0.5, 1.0, 4.0, 100.0}) {
    const double a = params_from_dual_shatter(c, 2.0, 34.0).a;
    CHECK(a > last_a);
    last_a = a;
  }
  double last_b = 0.0;
  for (double m : {34.0, 100.0, 1e4}) {
    const double b = params_from_dual_shatter(1.0, 2.0, m).b;
    CHECK(b > last_b);
    last_b = b;
  }
}

TEST_CASE("weighted sampling frequencies") {
  Rng rng(5);
  SUBCASE("single positive item") {
    WeightedIndex w(std::vector<double>{1.0, 0.0, 0.0});
    for (int i = 0; i < 1000; ++i) REQUIRE(w.sample(rng) == 0);
  }
  SUBCASE("two equal weights") {
    WeightedIndex w(std::vector<double>{1.0, 1.0});
    int ones = 0;
    for (int i = 0; i < 100000; ++i) ones += w.sample(rng) == 1;
    CHECK(ones / 1e5 == doctest::Approx(0.5).epsilon(0.04));
  }
  SUBCASE("weights one and three") {
    WeightedIndex w(std::vector<double>{1.0, 3.0});
    int ones = 0;
    for (int i = 0; i < 100000; ++i) ones += w.sample(rng) == 1;
    CHECK(std::abs(ones / 1e5 - 0.75) <= 0.02);
  }
  SUBCASE("empty distribution") {
    WeightedIndex w(std::vector<double>{0.0, 0.0});
    CHECK_THROWS_AS(w.sample(rng), EmptyDistributionError);
  }
}

TEST_CASE("weighted sampling passes a chi-square test on 16 items") {
  Rng rng(2024);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> w(16);
    for (auto& x : w) x = u(rng);
    WeightedIndex wi(w);
    std::vector<double> counts(16, 0.0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) counts[wi.sample(rng)] += 1.0;
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double chi2 = 0.0;
    for (int i = 0; i < 16; ++i) {
      const double expect = draws * w[i] / total;
      chi2 += (counts[i] - expect) * (counts[i] - expect) / expect;
    }
    const double pvalue = boost::math::cdf(boost::math::complement(boost::math::chi_squared(15), chi2));
    CHECK(pvalue > 0.001);
  }
}

TEST_CASE("scale updates weights and total") {
  WeightedIndex a(std::vector<double>{1.0, 1.0});
  a.scale(0, 2.0);
  CHECK(a.weight(0) == 2.0);
  CHECK(a.total() == 3.0);

  WeightedIndex b(std::vector<double>{4.0, 4.0});
  b.scale(1, 0.5);
  CHECK(b.weights() == std::vector<double>{4.0, 2.0});

  WeightedIndex c(1, 1.0);
  for (int i = 0; i < 60; ++i) c.scale(0, 0.5);
  CHECK(c.weight(0) == doctest::Approx(8.673617379884035e-19).epsilon(1e-12));
  CHECK(c.total() == c.recomputed_total());
}

TEST_CASE("total stays consistent under mixed updates") {
  Rng rng(9);
  WeightedIndex w(5000, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, 4999);
  std::uniform_int_distribution<int> op(0, 2);
  for (int step = 0; step < 200; ++step) {
    for (int k = 0; k < 300; ++k) {
      const std::size_t i = pick(rng);
      switch (op(rng)) {
        case 0: w.scale_deferred(i, 0.5); break;
        case 1: w.scale_deferred(i, 2.0); break;
        default: w.set_deferred(i, 0.0); w.set_deferred(i, 1.0); break;
      }
    }
    w.flush();
    REQUIRE(std::abs(w.total() - w.recomputed_total()) <= 1e-9 * w.recomputed_total());
  }
}

TEST_CASE("power-of-two rescaling keeps the distribution") {
  WeightedIndex w(std::vector<double>{1.0, 1.0, 1.0});
  for (int i = 0; i < 1500; ++i) w.scale(0, 2.0);
  CHECK(w.rescale_count() > 0);
  CHECK(std::isfinite(w.total()));
  CHECK(w.weight(1) == w.weight(2));
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) REQUIRE(w.sample(rng) == 0);

  WeightedIndex tiny(std::vector<double>{1.0, 1.0});
  for (int i = 0; i < 1500; ++i) {
    tiny.scale(0, 0.5);
    tiny.scale(1, 0.5);
  }
  CHECK(tiny.total() > 0.0);
  CHECK(tiny.weight(0) == tiny.weight(1));
}

TEST_CASE("zero_incident on candidate edge sets") {
  const auto complete = CandidateEdges::complete(4);
  WeightedIndex w(complete.size(), 1.0);
  zero_incident(w, complete, 0);
  std::size_t positive = 0;
  for (double x : w.weights()) positive += x > 0.0;
  CHECK(positive == 3);

  const Index n = 9;
  const auto k9 = CandidateEdges::complete(n);
  WeightedIndex w9(k9.size(), 1.0);
  zero_incident(w9, k9, 2);
  zero_incident(w9, k9, 6);
  positive = 0;
  for (double x : w9.weights()) positive += x > 0.0;
  CHECK(positive == (n - 2) * (n - 3) / 2);

  const auto sub = CandidateEdges::from_list(5, {Edge{0, 1}, Edge{1, 2}, Edge{3, 4}, Edge{0, 4}});
  WeightedIndex ws(sub.size(), 1.0);
  zero_incident(ws, sub, 1);
  CHECK(ws.weights() == std::vector<double>{0.0, 0.0, 1.0, 1.0});
  zero_incident(ws, sub, 4);
  CHECK(ws.weights() == std::vector<double>{0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("complete edge indexing round-trips") {
  for (Index k : {2u, 3u, 7u, 50u}) {
    const auto e = CandidateEdges::complete(k);
    CHECK(e.size() == static_cast<std::size_t>(k) * (k - 1) / 2);
    CompleteEdgeCursor cursor(k);
    std::size_t i = 0;
    for (Index u = 0; u < k; ++u)
      for (Index v = u + 1; v < k; ++v, ++i) {
        REQUIRE(CandidateEdges::complete_index(k, u, v) == i);
        REQUIRE(e.at(i) == Edge{u, v});
        REQUIRE(cursor.seek(i) == Edge{u, v});
      }
    std::vector<std::size_t> incident;
    e.for_each_incident(k / 2, [&](std::size_t j) { incident.push_back(j); });
    CHECK(incident.size() == k - 1);
    for (std::size_t j : incident) CHECK(e.at(j).touches(k / 2));
  }
}

TEST_CASE("binomial subsets") {
  Rng rng(3);
  CHECK(binomial_subset(100, 0.0, rng).empty());
  CHECK(binomial_subset(100, 1.0, rng).size() == 100);
  CHECK_THROWS_AS(binomial_subset(10, 1.5, rng), ParameterError);

  const std::size_t n = 10000;
  const int trials = 20000;
  std::vector<double> sizes;
  std::vector<int> hits(3, 0);
  const std::size_t probes[3] = {0, n / 2, n - 1};
  for (int t = 0; t < trials; ++t) {
    const auto s = binomial_subset(n, 0.1, rng);
    REQUIRE(std::is_sorted(s.begin(), s.end()));
    REQUIRE(std::adjacent_find(s.begin(), s.end()) == s.end());
    sizes.push_back(static_cast<double>(s.size()));
    for (int k = 0; k < 3; ++k) hits[k] += std::binary_search(s.begin(), s.end(), probes[k]);
  }
  CHECK(lowcross::testing::mean(sizes) == doctest::Approx(1000.0).epsilon(0.005));
  CHECK(lowcross::testing::stddev(sizes) == doctest::Approx(30.0).epsilon(0.05));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(hits[k] / static_cast<double>(trials) - 0.1) <= 0.01);

  // The complement branch (p > 1/2) must also be uniform.
  std::vector<int> freq(64, 0);
  for (int t = 0; t < 20000; ++t)
    for (auto i : binomial_subset(64, 0.8, rng)) ++freq[i];
  for (int f : freq) CHECK(std::abs(f / 20000.0 - 0.8) <= 0.015);
}
