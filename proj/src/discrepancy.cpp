#include "lowcross/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>

#include "lowcross/errors.hpp"

namespace lowcross {

namespace {

std::int8_t fair_sign(Rng& rng) { return std::bernoulli_distribution(0.5)(rng) ? 1 : -1; }

void check_coloring(const Coloring& chi, const SetSystem& sys) {
  if (chi.size() != sys.size()) throw ContractViolation("coloring and set system differ in ground size");
  if (!chi.is_valid()) throw ContractViolation("coloring entries must be +1 or -1");
}

}  // namespace

bool Coloring::is_valid() const {
  return std::all_of(signs.begin(), signs.end(), [](std::int8_t s) { return s == 1 || s == -1; });
}

std::vector<long long> range_sums(const Coloring& chi, const SetSystem& sys) {
  check_coloring(chi, sys);
  std::vector<long long> sums(sys.range_count(), 0);
  for (RangeId s = 0; s < sys.range_count(); ++s) {
    long long acc = 0;
    for (Index x = 0; x < sys.size(); ++x)
      if (sys.contains(x, s)) acc += chi.signs[x];
    sums[s] = acc;
  }
  return sums;
}

long long discrepancy(const Coloring& chi, const SetSystem& sys) {
  long long best = 0;
  for (long long v : range_sums(chi, sys)) best = std::max(best, std::llabs(v));
  return best;
}

long long discrepancy_with_ground(const Coloring& chi, const SetSystem& sys) {
  long long total = 0;
  for (auto s : chi.signs) total += s;
  return std::max(discrepancy(chi, sys), std::llabs(total));
}

Coloring color_from_matching(const Matching& m, Rng& rng) {
  if (!m.is_perfect()) throw ContractViolation("color_from_matching needs a perfect matching");
  Coloring chi;
  chi.signs.assign(m.n, 0);
  for (const auto& e : m.edges) {
    const std::int8_t s = fair_sign(rng);
    chi.signs[e.u] = s;
    if (!e.is_loop()) chi.signs[e.v] = static_cast<std::int8_t>(-s);
  }
  return chi;
}

Coloring low_disc_color(const SetSystem& sys, const AssumptionParams& params, Rng& rng, const MwuConfig& config,
                        Matching* matching) {
  Matching m = build_matching(sys, params, rng, config);
  Coloring chi = color_from_matching(m, rng);
  if (matching) *matching = std::move(m);
  return chi;
}

Coloring random_coloring(Index n, Rng& rng) {
  Coloring chi;
  chi.signs.resize(n);
  for (auto& s : chi.signs) s = fair_sign(rng);
  return chi;
}

}  // namespace lowcross
