#include "lowcross/approx.hpp"

#include <algorithm>
#include <cmath>

#include "lowcross/errors.hpp"

namespace lowcross {

double eps_error(std::span<const Index> subset, const SetSystem& sys) {
  if (subset.empty()) throw ContractViolation("eps_error: empty subset");
  std::vector<std::uint8_t> in_a(sys.size(), 0);
  for (Index x : subset) {
    if (x >= sys.size()) throw ContractViolation("eps_error: index outside the ground set");
    if (in_a[x]) throw ContractViolation("eps_error: repeated index");
    in_a[x] = 1;
  }
  const double n = sys.size();
  const double k = static_cast<double>(subset.size());
  double worst = 0.0;
  for (RangeId s = 0; s < sys.range_count(); ++s) {
    std::size_t all = 0;
    std::size_t ours = 0;
    for (Index x = 0; x < sys.size(); ++x) {
      if (sys.contains(x, s)) {
        ++all;
        ours += in_a[x];
      }
    }
    worst = std::max(worst, std::abs(static_cast<double>(all) / n - static_cast<double>(ours) / k));
  }
  return worst;
}

int halving_rounds(Index n, RangeId m, const AssumptionParams& params, double eps) {
  params.validate();
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  if (n < 2 || m < 2) return 0;
  const double lm = std::log(static_cast<double>(m));
  const double log_n = std::log2(static_cast<double>(n));
  const double g = params.gamma;
  const double first = (2.0 / (2.0 - g)) * std::log2(eps * std::sqrt(g) / (30.0 * std::sqrt(params.a * lm)));
  const double second = std::log2(eps / (12.0 * std::sqrt((params.b / 2.0 + 12.0 * lm) * lm * log_n)));
  const double j = std::floor(log_n + std::min(first, second));
  const double cap = std::floor(log_n);
  return static_cast<int>(std::clamp(j, 0.0, cap));
}

std::vector<Index> larger_color_class(const Coloring& chi) {
  std::size_t plus = 0;
  for (auto s : chi.signs) plus += s > 0;
  const std::int8_t keep = 2 * plus >= chi.signs.size() ? 1 : -1;
  const std::size_t want = (chi.signs.size() + 1) / 2;
  std::vector<Index> out;
  out.reserve(want);
  for (Index x = 0; x < chi.size() && out.size() < want; ++x)
    if (chi.signs[x] == keep) out.push_back(x);
  return out;
}

ApproxResult halve_repeatedly(const SetSystem& sys, const AssumptionParams& params, int rounds, Rng& rng,
                              const MwuConfig& config) {
  if (sys.size() == 0) throw ContractViolation("cannot approximate an empty ground set");
  const SetSystem tally = sys.fork();
  std::vector<Index> current(sys.size());
  for (Index x = 0; x < sys.size(); ++x) current[x] = x;
  for (int r = 0; r < rounds; ++r) {
    const SetSystem sub = tally.restrict(current);
    const Coloring chi = low_disc_color(sub, params, rng, config);
    std::vector<Index> next;
    for (Index local : larger_color_class(chi)) next.push_back(current[local]);
    current = std::move(next);
  }
  ApproxResult res;
  res.rounds = rounds;
  res.noop = rounds == 0;
  res.incidence_calls = tally.counts().incidence;
  res.eps_measured = eps_error(current, sys);
  res.subset = std::move(current);
  return res;
}

ApproxResult approximate(const SetSystem& sys, const AssumptionParams& params, double eps, Rng& rng,
                         const MwuConfig& config) {
  const int j = halving_rounds(sys.size(), sys.range_count(), params, eps);
  return halve_repeatedly(sys, params, j, rng, config);
}

double approximation_size_bound(Index n, RangeId m, const AssumptionParams& params, double eps) {
  const double lm = std::log(static_cast<double>(m));
  const double g = params.gamma;
  const double first = std::pow(30.0 * std::sqrt(params.a * lm / g) / eps, 2.0 / (2.0 - g));
  const double second = 12.0 * std::sqrt((params.b / 2.0 + 12.0 * lm) * lm * std::log2(static_cast<double>(n))) / eps;
  return 2.0 * std::max(first, second) + 1.0;
}

std::size_t vc_sample_size(Index n, double capx, int d_vc, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  if (!(capx > 0.0)) throw ParameterError("C_apx must be positive");
  const double want = std::ceil(4.0 * capx * d_vc / (eps * eps));
  return want >= n ? n : static_cast<std::size_t>(want);
}

std::vector<Index> uniform_sample(Index n, std::size_t size, Rng& rng) {
  if (size > n) throw ContractViolation("uniform_sample: size exceeds the population");
  std::vector<Index> all(n);
  for (Index x = 0; x < n; ++x) all[x] = x;
  std::vector<Index> out;
  out.reserve(size);
  std::sample(all.begin(), all.end(), std::back_inserter(out), size, rng);
  return out;
}

ApproxResult vc_bootstrap_approximate(const SetSystem& sys, const AssumptionParams& params, double eps, int d_vc,
                                      Rng& rng, double capx, const MwuConfig& config) {
  if (d_vc < 2) throw ParameterError("VC dimension must be at least 2");
  const std::size_t k = vc_sample_size(sys.size(), capx, d_vc, eps);
  const std::vector<Index> a0 = uniform_sample(sys.size(), k, rng);
  const SetSystem sample = sys.restrict(a0);
  ApproxResult inner = approximate(sample, params, eps / 2.0, rng, config);
  for (auto& x : inner.subset) x = a0[x];
  inner.noop = inner.noop && k == sys.size();
  inner.eps_measured = eps_error(inner.subset, sys);
  return inner;
}

CapxCalibration calibrate_capx(std::span<const SetSystem> references, int d_vc, double eps, int trials,
                               std::span<const double> candidates, Rng& rng, double target_rate) {
  if (candidates.empty() || references.empty() || trials <= 0)
    throw ParameterError("calibration needs candidates, reference systems and trials");
  std::vector<double> sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  CapxCalibration last;
  for (double c : sorted) {
    double worst_rate = 1.0;
    for (const auto& sys : references) {
      int ok = 0;
      for (int t = 0; t < trials; ++t) {
        const auto a = uniform_sample(sys.size(), vc_sample_size(sys.size(), c, d_vc, eps), rng);
        ok += eps_error(a, sys) <= eps / 2.0;
      }
      worst_rate = std::min(worst_rate, static_cast<double>(ok) / trials);
    }
    last = {c, worst_rate};
    if (worst_rate >= target_rate) return last;
  }
  return last;
}

}  // namespace lowcross
