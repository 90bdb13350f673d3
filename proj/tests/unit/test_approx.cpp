#include <doctest.h>

#include <cmath>

#include "../support.hpp"

using namespace lowcross;
using lowcross::testing::random_explicit_system;

namespace {

Coloring signs(std::initializer_list<int> s) {
  Coloring c;
  for (int x : s) c.signs.push_back(static_cast<std::int8_t>(x));
  return c;
}

Coloring coloring_from_mask(Index n, std::uint32_t mask) {
  Coloring c;
  c.signs.resize(n);
  for (Index x = 0; x < n; ++x) c.signs[x] = (mask >> x) & 1u ? 1 : -1;
  return c;
}

}  // namespace

TEST_CASE("eps_error examples") {
  const SetSystem sys = SetSystem::from_ranges(4, {{0, 1}});
  const std::vector<Index> all{0, 1, 2, 3};
  CHECK(eps_error(all, sys) == 0.0);
  CHECK(eps_error(std::vector<Index>{0, 2}, sys) == 0.0);
  CHECK(eps_error(std::vector<Index>{0, 1}, sys) == 0.5);
  CHECK_THROWS_AS(eps_error(std::vector<Index>{}, sys), ContractViolation);
  CHECK_THROWS_AS(eps_error(std::vector<Index>{4}, sys), ContractViolation);
  CHECK_THROWS_AS(eps_error(std::vector<Index>{1, 1}, sys), ContractViolation);
}

TEST_CASE("eps_error stays in [0, 1]") {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + static_cast<Index>(trial % 20);
    const SetSystem sys = random_explicit_system(n, 6, rng, 0.3);
    const auto a = uniform_sample(n, 1 + trial % n, rng);
    const double e = eps_error(a, sys);
    CHECK(e >= 0.0);
    CHECK(e <= 1.0);
  }
}

TEST_CASE("larger color class") {
  CHECK(larger_color_class(signs({1, -1, 1, -1})) == std::vector<Index>{0, 2});
  CHECK(larger_color_class(signs({1, 1, 1, -1})) == std::vector<Index>{0, 1});
  CHECK(larger_color_class(signs({-1, -1, 1})) == std::vector<Index>{0, 1});
  CHECK(larger_color_class(signs({-1, 1, 1})) == std::vector<Index>{1, 2});
  CHECK(larger_color_class(signs({-1, 1})) == std::vector<Index>{1});
  CHECK(larger_color_class(signs({-1})) == std::vector<Index>{0});
  CHECK(larger_color_class(Coloring{}).empty());
}

TEST_CASE("larger class of a coloring is a 2 disc / n approximation") {
  Rng rng(13);
  for (int sys_id = 0; sys_id < 10; ++sys_id) {
    const Index n = 2 + static_cast<Index>(sys_id % 7);
    const SetSystem sys = random_explicit_system(n, 5, rng);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const Coloring chi = coloring_from_mask(n, mask);
      const double bound = 2.0 * static_cast<double>(discrepancy_with_ground(chi, sys)) / n;
      REQUIRE(eps_error(larger_color_class(chi), sys) <= bound + 1e-12);
    }
  }
}

TEST_CASE("one halving round with a pair-cancelling coloring") {
  const SetSystem sys = SetSystem::from_ranges(4, {{0, 1}, {2, 3}});
  const auto a = larger_color_class(signs({1, -1, 1, -1}));
  CHECK(a.size() == 2);
  CHECK(eps_error(a, sys) == 0.0);

  Rng rng(1);
  const ApproxResult r = halve_repeatedly(sys, AssumptionParams{1.0, 1.0, 0.5}, 1, rng);
  CHECK(r.subset.size() == 2);
  CHECK(r.rounds == 1);
  CHECK_FALSE(r.noop);
}

TEST_CASE("halving keeps ceil(n / 2^j) elements") {
  Rng rng(4);
  const SetSystem sys = random_explicit_system(37, 40, rng);
  for (int j = 0; j <= 5; ++j) {
    const ApproxResult r = halve_repeatedly(sys, AssumptionParams{1.0, 1.0, 0.5}, j, rng);
    CHECK(r.subset.size() == (37u + (1u << j) - 1) >> j);
    CHECK(std::is_sorted(r.subset.begin(), r.subset.end()));
    CHECK(r.noop == (j == 0));
    CHECK(r.eps_measured == doctest::Approx(eps_error(r.subset, sys)));
  }
}

TEST_CASE("halving rounds") {
  const AssumptionParams p{1.0, 1.0, 0.5};
  CHECK_THROWS_AS(halving_rounds(100, 100, p, 0.0), ParameterError);
  CHECK_THROWS_AS(halving_rounds(100, 100, p, 1.0), ParameterError);
  CHECK(halving_rounds(8192, 500, p, 0.1) == 0);

  // Independent evaluation of the displayed j-formula.
  const AssumptionParams tiny{1e-4, 1e-3, 0.5};
  const double n = 1 << 20;
  const double m = 40;
  const double eps = 0.9;
  const double lm = std::log(m);
  const double first = (2.0 / 1.5) * std::log2(eps * std::sqrt(0.5) / (30.0 * std::sqrt(1e-4 * lm)));
  const double second = std::log2(eps / (12.0 * std::sqrt((5e-4 + 12.0 * lm) * lm * std::log2(n))));
  const int j = static_cast<int>(std::floor(std::log2(n) + std::min(first, second)));
  REQUIRE(j > 0);
  CHECK(halving_rounds(1 << 20, 40, tiny, eps) == j);
}

TEST_CASE("output size stays below the size formula whenever a round runs") {
  Rng rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Index n = 2 + static_cast<Index>(unit(rng) * 1e7);
    const auto m = static_cast<RangeId>(34 + unit(rng) * 1e5);
    const AssumptionParams p{std::pow(10.0, -4.0 + 4.0 * unit(rng)), std::pow(10.0, -3.0 + 3.0 * unit(rng)),
                             0.05 + 0.9 * unit(rng)};
    const double eps = 0.01 + 0.98 * unit(rng);
    const int j = halving_rounds(n, m, p, eps);
    if (j == 0) continue;
    ++checked;
    const double size = std::ceil(static_cast<double>(n) / std::ldexp(1.0, j));
    REQUIRE(size <= approximation_size_bound(n, m, p, eps));
  }
  CHECK(checked > 100);
}

TEST_CASE("approximation error composes") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = 2 + static_cast<Index>(trial % 30);
    const SetSystem sys = random_explicit_system(n, 8, rng);
    const auto a1 = uniform_sample(n, 1 + trial % n, rng);
    const SetSystem on_a1 = sys.restrict(a1);
    const auto local = uniform_sample(static_cast<Index>(a1.size()), 1 + trial % a1.size(), rng);
    std::vector<Index> a2;
    for (Index x : local) a2.push_back(a1[x]);
    REQUIRE(eps_error(a2, sys) <= eps_error(local, on_a1) + eps_error(a1, sys) + 1e-12);
  }
}

TEST_CASE("halving on a half-space instance beats a uniform sample of the same size") {
  Rng inst(31);
  const Index n = 1024;
  const SetSystem sys = lowcross::testing::halfspace_instance(n, 2, inst);
  const AssumptionParams params = params_from_dual_shatter(std::pow(4.0 * std::exp(1.0), 2.0), 2.0, sys.range_count());
  std::vector<double> ours;
  std::vector<double> uniform;
  for (int seed = 0; seed < 5; ++seed) {
    Rng rng = make_rng(3, seed);
    const ApproxResult r = halve_repeatedly(sys, params, 2, rng);
    REQUIRE(r.subset.size() == 256);
    CHECK(r.incidence_calls > 0);
    ours.push_back(r.eps_measured);
    uniform.push_back(eps_error(uniform_sample(n, 256, rng), sys));
  }
  CHECK(lowcross::testing::mean(ours) < lowcross::testing::mean(uniform));
}

TEST_CASE("vc sample size and uniform samples") {
  CHECK(vc_sample_size(100000, 0.5, 3, 0.2) == 150);
  CHECK(vc_sample_size(100000, 0.5, 3, 0.1) == 600);
  CHECK(vc_sample_size(20, 1.0, 2, 0.5) == 20);
  CHECK_THROWS_AS(vc_sample_size(10, 0.0, 2, 0.5), ParameterError);
  CHECK_THROWS_AS(vc_sample_size(10, 1.0, 2, 1.5), ParameterError);

  Rng rng(3);
  const auto s = uniform_sample(50, 20, rng);
  CHECK(s.size() == 20);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  CHECK_THROWS_AS(uniform_sample(5, 6, rng), ContractViolation);
}

TEST_CASE("vc bootstrap with a sample covering the ground set reduces to approximate") {
  Rng inst(5);
  const SetSystem sys = random_explicit_system(40, 50, inst);
  Rng a = make_rng(1, 1);
  const ApproxResult r = vc_bootstrap_approximate(sys, AssumptionParams{1.0, 1.0, 0.5}, 0.2, 2, a);
  CHECK(r.subset.size() == 40);
  CHECK(r.noop);
  CHECK(r.eps_measured == 0.0);
  CHECK_THROWS_AS(vc_bootstrap_approximate(sys, AssumptionParams{}, 0.2, 1, a), ParameterError);
}

TEST_CASE("vc bootstrap on a large half-space instance") {
  Rng inst(19);
  const Index n = 100000;
  PointSet pts = gen_points(n, 2, PointDistribution::kUniformBox, inst);
  auto ranges = random_halfspaces(pts, 200, inst);
  const SetSystem sys = SetSystem::from_halfspaces(std::move(pts), std::move(ranges));
  const AssumptionParams params = params_from_dual_shatter(std::pow(4.0 * std::exp(1.0), 2.0), 2.0, sys.range_count());
  std::vector<double> eps;
  for (int seed = 0; seed < 10; ++seed) {
    Rng rng = make_rng(8, seed);
    const ApproxResult r = vc_bootstrap_approximate(sys, params, 0.2, 3, rng);
    CHECK(r.subset.size() <= 150);
    eps.push_back(r.eps_measured);
  }
  CHECK(lowcross::testing::mean(eps) <= 0.2);
}

TEST_CASE("calibrating C_apx") {
  Rng rng(23);
  std::vector<SetSystem> refs;
  for (int i = 0; i < 2; ++i) refs.push_back(lowcross::testing::halfspace_instance(500, 2, rng));
  const std::vector<double> candidates{2.0, 0.05, 0.5, 0.2};
  const CapxCalibration cal = calibrate_capx(refs, 3, 0.2, 20, candidates, rng);
  CHECK(std::find(candidates.begin(), candidates.end(), cal.capx) != candidates.end());
  CHECK((cal.success_rate >= 0.9 || cal.capx == 2.0));
  CHECK_THROWS_AS(calibrate_capx(refs, 3, 0.2, 0, candidates, rng), ParameterError);
}
