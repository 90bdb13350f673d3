#include "lowcross/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "lowcross/errors.hpp"

namespace lowcross {

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ <= 0 && !coords_.empty()) throw ContractViolation("PointSet: dimension must be positive");
  if (dim_ > 0 && coords_.size() % dim_ != 0)
    throw ContractViolation("PointSet: coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw DataError("PointSet: non-finite coordinate");
}

void PointSet::push_back(std::span<const double> p) {
  if (dim_ == 0) dim_ = static_cast<int>(p.size());
  if (static_cast<int>(p.size()) != dim_) throw DataError("PointSet: dimension mismatch");
  for (double c : p)
    if (!std::isfinite(c)) throw DataError("PointSet: non-finite coordinate");
  coords_.insert(coords_.end(), p.begin(), p.end());
}

PointSet PointSet::subset(std::span<const Index> indices) const {
  PointSet out(dim_, indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= size()) throw ContractViolation("PointSet::subset: index out of range");
    auto src = (*this)[indices[i]];
    std::copy(src.begin(), src.end(), out[i].begin());
  }
  return out;
}

// ---------------------------------------------------------------------------

unsigned Polynomial::degree() const {
  unsigned deg = 0;
  for (const auto& m : terms) {
    if (m.coefficient == 0.0) continue;
    deg = std::max(deg, std::accumulate(m.exponents.begin(), m.exponents.end(), 0u));
  }
  return deg;
}

double Polynomial::evaluate(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& m : terms) {
    if (m.exponents.size() != x.size())
      throw ContractViolation("Polynomial::evaluate: dimension mismatch");
    double term = m.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (unsigned e = 0; e < m.exponents[i]; ++e) term *= x[i];
    sum += term;
  }
  return sum;
}

bool FormulaNode::evaluate(const std::vector<bool>& atoms) const {
  switch (op) {
    case Op::kAtom:
      return atoms.at(atom);
    case Op::kNot:
      return !args.at(0).evaluate(atoms);
    case Op::kAnd:
      return std::all_of(args.begin(), args.end(), [&](const FormulaNode& a) { return a.evaluate(atoms); });
    case Op::kOr:
      return std::any_of(args.begin(), args.end(), [&](const FormulaNode& a) { return a.evaluate(atoms); });
  }
  return false;
}

std::size_t FormulaNode::max_atom() const {
  std::size_t best = op == Op::kAtom ? atom : 0;
  for (const auto& a : args) best = std::max(best, a.max_atom());
  return best;
}

void SemialgebraicRange::validate(int dim) const {
  if (polynomials.empty()) throw ContractViolation("semialgebraic range without polynomials");
  if (formula.max_atom() >= polynomials.size())
    throw ContractViolation("semialgebraic formula references an undeclared polynomial");
  if (formula.op == FormulaNode::Op::kNot && formula.args.size() != 1)
    throw ContractViolation("negation takes exactly one argument");
  for (const auto& p : polynomials)
    for (const auto& m : p.terms)
      if (static_cast<int>(m.exponents.size()) != dim)
        throw ContractViolation("monomial arity does not match the point dimension");
}

unsigned SemialgebraicRange::degree() const {
  unsigned deg = 0;
  for (const auto& p : polynomials) deg = std::max(deg, p.degree());
  return deg;
}

// ---------------------------------------------------------------------------

bool halfspace_contains(const HalfSpace& h, std::span<const double> x) {
  if (h.normal.size() != x.size()) throw ContractViolation("halfspace_contains: dimension mismatch");
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += h.normal[i] * x[i];
  return dot - h.offset <= kBoundaryTolerance;
}

bool ball_contains(const Ball& b, std::span<const double> x) {
  if (b.center.size() != x.size()) throw ContractViolation("ball_contains: dimension mismatch");
  double dist2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = x[i] - b.center[i];
    dist2 += diff * diff;
  }
  return dist2 - b.radius * b.radius <= kBoundaryTolerance;
}

bool semialg_contains(const SemialgebraicRange& r, std::span<const double> x) {
  std::vector<bool> atoms(r.polynomials.size());
  for (std::size_t i = 0; i < r.polynomials.size(); ++i)
    atoms[i] = r.polynomials[i].evaluate(x) <= kBoundaryTolerance;
  return r.formula.evaluate(atoms);
}

bool range_contains(const GeometricRange& r, std::span<const double> x) {
  return std::visit(
      [&](const auto& range) -> bool {
        using T = std::decay_t<decltype(range)>;
        if constexpr (std::is_same_v<T, HalfSpace>) return halfspace_contains(range, x);
        else if constexpr (std::is_same_v<T, Ball>) return ball_contains(range, x);
        else return semialg_contains(range, x);
      },
      r);
}

int range_dim(const GeometricRange& r) {
  return std::visit(
      [](const auto& range) -> int {
        using T = std::decay_t<decltype(range)>;
        if constexpr (std::is_same_v<T, HalfSpace>) return static_cast<int>(range.normal.size());
        else if constexpr (std::is_same_v<T, Ball>) return static_cast<int>(range.center.size());
        else {
          for (const auto& p : range.polynomials)
            for (const auto& m : p.terms) return static_cast<int>(m.exponents.size());
          return 0;
        }
      },
      r);
}

// ---------------------------------------------------------------------------

PointSet lift_points(const PointSet& points) {
  const int d = points.dim();
  PointSet out(d + 1, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points[i];
    auto q = out[i];
    double norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      q[k] = p[k];
      norm2 += p[k] * p[k];
    }
    q[d] = norm2;
  }
  return out;
}

HalfSpace lift_ball(const Ball& ball) {
  HalfSpace h;
  double c2 = 0.0;
  for (double c : ball.center) {
    h.normal.push_back(-2.0 * c);
    c2 += c * c;
  }
  h.normal.push_back(1.0);
  h.offset = ball.radius * ball.radius - c2;
  return h;
}

std::optional<Ball> ball_from_lifted(const HalfSpace& h) {
  if (h.normal.size() < 2) return std::nullopt;
  const double z = h.normal.back();
  if (std::abs(z) < 1e-12) return std::nullopt;
  // Scale so the z-coefficient is 1 (sign flip turns the half-space into its
  // complement, which crosses the same edges).
  const double s = 1.0 / std::abs(z);
  const double sign = z > 0 ? 1.0 : -1.0;
  Ball b;
  double c2 = 0.0;
  for (std::size_t i = 0; i + 1 < h.normal.size(); ++i) {
    const double c = -sign * h.normal[i] * s / 2.0;
    b.center.push_back(c);
    c2 += c * c;
  }
  const double r2 = sign * h.offset * s + c2;
  if (r2 < 0.0) return std::nullopt;
  b.radius = std::sqrt(r2);
  return b;
}

LiftedSystem lift_ball_system(const PointSet& points, std::span<const Ball> balls) {
  LiftedSystem out{lift_points(points), {}};
  out.halfspaces.reserve(balls.size());
  for (const auto& b : balls) {
    if (static_cast<int>(b.center.size()) != points.dim())
      throw ContractViolation("lift_ball_system: ball dimension mismatch");
    out.halfspaces.push_back(lift_ball(b));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double determinant(std::vector<double> m, int k) {
  double det = 1.0;
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    for (int r = col + 1; r < k; ++r)
      if (std::abs(m[r * k + col]) > std::abs(m[pivot * k + col])) pivot = r;
    if (m[pivot * k + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < k; ++c) std::swap(m[pivot * k + c], m[col * k + c]);
      det = -det;
    }
    det *= m[col * k + col];
    for (int r = col + 1; r < k; ++r) {
      const double f = m[r * k + col] / m[col * k + col];
      for (int c = col; c < k; ++c) m[r * k + c] -= f * m[col * k + c];
    }
  }
  return det;
}

// Unit normal of the hyperplane through d points, or nullopt when the points
// are affinely dependent.
std::optional<HalfSpace> hyperplane_through(const PointSet& points, std::span<const Index> ids) {
  const int d = points.dim();
  auto p0 = points[ids[0]];
  HalfSpace h;
  h.normal.assign(d, 0.0);
  if (d == 1) {
    h.normal[0] = 1.0;
    h.offset = p0[0];
    return h;
  }
  const int rows = d - 1;
  std::vector<double> diff(rows * d);
  double scale = 1.0;
  for (int r = 0; r < rows; ++r) {
    auto pr = points[ids[r + 1]];
    double norm2 = 0.0;
    for (int c = 0; c < d; ++c) {
      diff[r * d + c] = pr[c] - p0[c];
      norm2 += diff[r * d + c] * diff[r * d + c];
    }
    scale *= std::sqrt(norm2);
  }
  if (scale == 0.0) return std::nullopt;
  std::vector<double> minor(rows * rows);
  double norm2 = 0.0;
  for (int skip = 0; skip < d; ++skip) {
    for (int r = 0; r < rows; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == skip) continue;
        minor[r * rows + cc++] = diff[r * d + c];
      }
    }
    const double v = determinant(minor, rows) * ((skip % 2 == 0) ? 1.0 : -1.0);
    h.normal[skip] = v;
    norm2 += v * v;
  }
  const double norm = std::sqrt(norm2);
  if (norm <= 1e-12 * scale) return std::nullopt;
  for (auto& v : h.normal) v /= norm;
  h.offset = 0.0;
  for (int c = 0; c < d; ++c) h.offset += h.normal[c] * p0[c];
  return h;
}

std::vector<Index> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), Index{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(all[i], all[pick(rng)]);
  }
  all.resize(k);
  return all;
}

double binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

std::vector<HalfSpace> build_testset_capped(const PointSet& points, std::size_t t, std::size_t cap, Rng& rng,
                                            const TestSetOptions& options) {
  const int d = points.dim();
  const std::size_t n = points.size();
  if (t == 0) throw ParameterError("test set parameter t must be >= 1");
  if (d <= 0 || n < static_cast<std::size_t>(d))
    throw PreconditionError("test set needs at least d points");

  std::vector<HalfSpace> out;

  if (options.axis_bundles) {
    const std::size_t per_axis = std::min(t, cap / static_cast<std::size_t>(d));
    std::vector<double> coord(n);
    for (int axis = 0; axis < d && per_axis > 0; ++axis) {
      for (std::size_t i = 0; i < n; ++i) coord[i] = points[i][axis];
      std::sort(coord.begin(), coord.end());
      for (std::size_t k = 1; k <= per_axis; ++k) {
        const std::size_t pos = std::min(n - 1, std::max<std::size_t>(1, k * n / (per_axis + 1)));
        HalfSpace h;
        h.normal.assign(d, 0.0);
        h.normal[axis] = 1.0;
        h.offset = 0.5 * (coord[pos - 1] + coord[pos]);
        out.push_back(std::move(h));
      }
    }
  }

  const std::size_t budget = cap > out.size() ? cap - out.size() : 0;
  const std::size_t sample_size =
      std::min(n, std::max<std::size_t>(d, static_cast<std::size_t>(std::ceil(options.sample_factor * t))));
  const auto sample = sample_without_replacement(n, sample_size, rng);
  const double combos = binomial_coefficient(sample_size, d);

  std::vector<Index> ids(d);
  if (combos <= static_cast<double>(budget)) {
    // Enumerate every d-subset of the sample.
    std::vector<std::size_t> pos(d);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    while (true) {
      for (int k = 0; k < d; ++k) ids[k] = sample[pos[k]];
      if (auto h = hyperplane_through(points, ids)) out.push_back(std::move(*h));
      int k = d - 1;
      while (k >= 0 && pos[k] == sample_size - d + k) --k;
      if (k < 0) break;
      ++pos[k];
      for (int j = k + 1; j < d; ++j) pos[j] = pos[j - 1] + 1;
    }
  } else {
    std::set<std::vector<std::size_t>> seen;
    std::size_t attempts = 0;
    const std::size_t max_attempts = budget * 20 + 100;
    while (out.size() < cap && attempts++ < max_attempts) {
      auto pick = sample_without_replacement(sample_size, d, rng);
      std::vector<std::size_t> key(pick.begin(), pick.end());
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      for (int k = 0; k < d; ++k) ids[k] = sample[key[k]];
      if (auto h = hyperplane_through(points, ids)) out.push_back(std::move(*h));
    }
  }
  if (out.size() > cap) out.resize(cap);
  return out;
}

}  // namespace

std::size_t halfspace_testset_cap(int d, std::size_t t) {
  double cap = (d + 1) * ipow(static_cast<double>(t), d);
  return static_cast<std::size_t>(std::min(cap, 1e15));
}

std::vector<HalfSpace> build_halfspace_testset(const PointSet& points, std::size_t t, Rng& rng,
                                               const TestSetOptions& options) {
  return build_testset_capped(points, t, halfspace_testset_cap(points.dim(), t), rng, options);
}

double halfspace_testset_envelope(int d, std::size_t n, std::size_t t, double kappa) {
  return (d + 1) * kappa + 6.0 * d * d * static_cast<double>(n) / static_cast<double>(t);
}

BallTestSet build_ball_testset(const PointSet& points, Rng& rng, const TestSetOptions& options) {
  const int d = points.dim();
  const std::size_t n = points.size();
  BallTestSet out;
  out.lifted_points = lift_points(points);
  // Too few points to span a hyperplane in R^{d+1}: the family stays empty.
  if (n < 2 || n < static_cast<std::size_t>(d) + 1) return out;
  out.t = integer_root_ceil(n, d);
  const double cap = (d + 2) * std::pow(static_cast<double>(n), 1.0 + 1.0 / d);
  const std::size_t capped =
      std::min(halfspace_testset_cap(d + 1, out.t), static_cast<std::size_t>(std::floor(cap + 1e-9)));
  out.halfspaces = build_testset_capped(out.lifted_points, out.t, capped, rng, options);
  return out;
}

SemialgebraicParams semialg_dual_shatter_params(int d, int degree, int count) {
  if (d < 1 || degree < 1 || count < 1) throw ParameterError("semialgebraic parameters must be >= 1");
  SemialgebraicParams p;
  p.c_eff = std::pow(4.0 * std::numbers::e * degree * count, d);
  p.vc_bound = 2.0 * count * std::log2(std::numbers::e * count) * binomial_coefficient(degree + d, d);
  return p;
}

// ---------------------------------------------------------------------------

std::size_t integer_root_floor(std::size_t n, int d) {
  if (d <= 0) throw ParameterError("root degree must be positive");
  if (d == 1) return n;
  auto pow_le = [&](std::size_t r) {
    long double acc = 1.0L;
    for (int i = 0; i < d; ++i) acc *= static_cast<long double>(r);
    return acc <= static_cast<long double>(n);
  };
  auto r = static_cast<std::size_t>(std::pow(static_cast<double>(n), 1.0 / d));
  while (r > 0 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

std::size_t integer_root_ceil(std::size_t n, int d) {
  const std::size_t r = integer_root_floor(n, d);
  long double acc = 1.0L;
  for (int i = 0; i < d; ++i) acc *= static_cast<long double>(r);
  return acc == static_cast<long double>(n) ? r : r + 1;
}

GridInstance grid_instance(Index n0, int d) {
  if (d < 1) throw ParameterError("grid dimension must be >= 1");
  if (static_cast<double>(n0) < std::pow(2.0, d)) throw PreconditionError("grid instance needs n0 >= 2^d");
  GridInstance g;
  g.side = static_cast<Index>(integer_root_ceil(n0, d));
  const auto thresholds = static_cast<Index>(integer_root_floor(n0, d));

  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= g.side;
  g.points = PointSet(d, count);
  std::vector<Index> digit(d, 0);
  for (std::size_t i = 0; i < count; ++i) {
    auto p = g.points[i];
    for (int k = 0; k < d; ++k) p[k] = static_cast<double>(digit[k] + 1);
    for (int k = d - 1; k >= 0; --k) {
      if (++digit[k] < g.side) break;
      digit[k] = 0;
    }
  }
  for (int axis = 0; axis < d; ++axis) {
    for (Index j = 1; j <= thresholds; ++j) {
      HalfSpace h;
      h.normal.assign(d, 0.0);
      h.normal[axis] = 1.0;
      h.offset = j + 0.5;
      g.ranges.push_back(std::move(h));
    }
  }
  return g;
}

PointDistribution parse_distribution(std::string_view name) {
  if (name == "uniform-box" || name == "uniform") return PointDistribution::kUniformBox;
  if (name == "gaussian") return PointDistribution::kGaussian;
  if (name == "clustered") return PointDistribution::kClustered;
  if (name == "annulus") return PointDistribution::kAnnulus;
  if (name == "grid") return PointDistribution::kGrid;
  throw ParameterError("unknown point distribution: " + std::string(name));
}

std::string_view distribution_name(PointDistribution dist) {
  switch (dist) {
    case PointDistribution::kUniformBox: return "uniform-box";
    case PointDistribution::kGaussian: return "gaussian";
    case PointDistribution::kClustered: return "clustered";
    case PointDistribution::kAnnulus: return "annulus";
    case PointDistribution::kGrid: return "grid";
  }
  return "unknown";
}

PointSet gen_points(Index n, int d, PointDistribution dist, Rng& rng) {
  if (d < 1) throw ParameterError("dimension must be >= 1");
  PointSet out(d, n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  switch (dist) {
    case PointDistribution::kUniformBox:
      for (Index i = 0; i < n; ++i)
        for (auto& c : out[i]) c = unit(rng);
      break;
    case PointDistribution::kGaussian:
      for (Index i = 0; i < n; ++i)
        for (auto& c : out[i]) c = normal(rng);
      break;
    case PointDistribution::kClustered: {
      const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      PointSet centers(d, std::max<std::size_t>(k, 1));
      for (std::size_t j = 0; j < centers.size(); ++j)
        for (auto& c : centers[j]) c = unit(rng);
      std::uniform_int_distribution<std::size_t> which(0, centers.size() - 1);
      for (Index i = 0; i < n; ++i) {
        auto c = centers[which(rng)];
        auto p = out[i];
        for (int k2 = 0; k2 < d; ++k2) p[k2] = c[k2] + 0.05 * normal(rng);
      }
      break;
    }
    case PointDistribution::kAnnulus: {
      const double inner = std::pow(0.5, d);
      for (Index i = 0; i < n; ++i) {
        auto p = out[i];
        double norm2 = 0.0;
        do {
          norm2 = 0.0;
          for (auto& c : p) {
            c = normal(rng);
            norm2 += c * c;
          }
        } while (norm2 == 0.0);
        const double r = std::pow(inner + (1.0 - inner) * unit(rng), 1.0 / d) / std::sqrt(norm2);
        for (auto& c : p) c *= r;
      }
      break;
    }
    case PointDistribution::kGrid: {
      const std::size_t side = std::max<std::size_t>(1, integer_root_ceil(std::max<Index>(n, 1), d));
      std::vector<std::size_t> digit(d, 0);
      for (Index i = 0; i < n; ++i) {
        auto p = out[i];
        for (int k2 = 0; k2 < d; ++k2)
          p[k2] = side == 1 ? 0.0 : static_cast<double>(digit[k2]) / static_cast<double>(side - 1);
        for (int k2 = d - 1; k2 >= 0; --k2) {
          if (++digit[k2] < side) break;
          digit[k2] = 0;
        }
      }
      break;
    }
  }
  return out;
}

std::vector<HalfSpace> random_halfspaces(const PointSet& points, std::size_t count, Rng& rng) {
  if (points.empty()) throw PreconditionError("random_halfspaces: empty point set");
  const int d = points.dim();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  std::vector<HalfSpace> out;
  out.reserve(count);
  while (out.size() < count) {
    HalfSpace h;
    h.normal.resize(d);
    double norm2 = 0.0;
    for (auto& c : h.normal) {
      c = normal(rng);
      norm2 += c * c;
    }
    if (norm2 == 0.0) continue;
    const double norm = std::sqrt(norm2);
    for (auto& c : h.normal) c /= norm;
    auto p = points[pick(rng)];
    h.offset = 0.0;
    for (int k = 0; k < d; ++k) h.offset += h.normal[k] * p[k];
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Ball> random_balls(const PointSet& points, std::size_t count, Rng& rng) {
  if (points.empty()) throw PreconditionError("random_balls: empty point set");
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  std::vector<Ball> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto c = points[pick(rng)];
    auto q = points[pick(rng)];
    Ball b;
    b.center.assign(c.begin(), c.end());
    double r2 = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) r2 += (q[k] - c[k]) * (q[k] - c[k]);
    b.radius = std::sqrt(r2);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace lowcross
