#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lowcross/types.hpp"

namespace lowcross {

/// Sign evaluations within this distance of zero count as "<= 0". Applies to
/// every geometric predicate so that all ranges are closed.
inline constexpr double kBoundaryTolerance = 1e-12;

/// n points in R^d, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  PointSet(int dim, std::vector<double> coords);
  PointSet(int dim, std::size_t count) : dim_(dim), coords_(count * dim, 0.0) {}

  int dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  std::span<double> operator[](std::size_t i) {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }

  void push_back(std::span<const double> p);
  const std::vector<double>& coords() const { return coords_; }

  PointSet subset(std::span<const Index> indices) const;

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

/// { x : <normal, x> <= offset }
struct HalfSpace {
  std::vector<double> normal;
  double offset = 0.0;
};

/// { x : |x - center|^2 <= radius^2 }
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

struct Monomial {
  std::vector<unsigned> exponents;  // one per coordinate
  double coefficient = 0.0;
};

/// Sparse d-variate polynomial.
struct Polynomial {
  std::vector<Monomial> terms;

  unsigned degree() const;
  double evaluate(std::span<const double> x) const;
};

/// Boolean formula over the atoms "polynomial i is <= 0".
struct FormulaNode {
  enum class Op { kAtom, kNot, kAnd, kOr };

  Op op = Op::kAtom;
  std::size_t atom = 0;
  std::vector<FormulaNode> args;

  static FormulaNode make_atom(std::size_t i) { return {Op::kAtom, i, {}}; }
  static FormulaNode make_not(FormulaNode a) { return {Op::kNot, 0, {std::move(a)}}; }
  static FormulaNode make_and(std::vector<FormulaNode> a) { return {Op::kAnd, 0, std::move(a)}; }
  static FormulaNode make_or(std::vector<FormulaNode> a) { return {Op::kOr, 0, std::move(a)}; }

  bool evaluate(const std::vector<bool>& atoms) const;
  std::size_t max_atom() const;
};

struct SemialgebraicRange {
  std::vector<Polynomial> polynomials;
  FormulaNode formula;

  /// Throws ContractViolation when the formula references an undeclared
  /// polynomial or a monomial has the wrong arity.
  void validate(int dim) const;
  unsigned degree() const;
};

using GeometricRange = std::variant<HalfSpace, Ball, SemialgebraicRange>;

bool halfspace_contains(const HalfSpace& h, std::span<const double> x);
bool ball_contains(const Ball& b, std::span<const double> x);
bool semialg_contains(const SemialgebraicRange& r, std::span<const double> x);
bool range_contains(const GeometricRange& r, std::span<const double> x);
int range_dim(const GeometricRange& r);

// ---------------------------------------------------------------------------
// Paraboloid lifting: p -> (p, |p|^2), ball(c, r) -> half-space
// { (y, z) : z - 2<c, y> + |c|^2 - r^2 <= 0 }.

PointSet lift_points(const PointSet& points);
HalfSpace lift_ball(const Ball& ball);

/// Inverse of lift_ball for half-spaces whose last normal coordinate is
/// non-zero and whose implied squared radius is non-negative. A negative last
/// coordinate yields the ball whose complement (on the paraboloid) is the
/// half-space; both cross exactly the same edges.
std::optional<Ball> ball_from_lifted(const HalfSpace& h);

struct LiftedSystem {
  PointSet points;
  std::vector<HalfSpace> halfspaces;
};

LiftedSystem lift_ball_system(const PointSet& points, std::span<const Ball> balls);

// ---------------------------------------------------------------------------
// Test sets.

struct TestSetOptions {
  /// Hyperplanes are spanned by d-subsets of a sample of sample_factor * t
  /// points.
  double sample_factor = 2.0;
  /// Add d bundles of t axis-parallel thresholds at coordinate quantiles.
  bool axis_bundles = true;
};

/// Upper bound (d + 1) * t^d on the size of a half-space test set.
std::size_t halfspace_testset_cap(int d, std::size_t t);

/// Finite family of at most (d + 1) t^d half-spaces used as a surrogate for
/// all half-spaces of R^d.
std::vector<HalfSpace> build_halfspace_testset(const PointSet& points, std::size_t t, Rng& rng,
                                               const TestSetOptions& options = {});

/// Crossing envelope (d + 1) * kappa + 6 d^2 n / t for all half-spaces given
/// crossing kappa against a test set built with parameter t.
double halfspace_testset_envelope(int d, std::size_t n, std::size_t t, double kappa);

struct BallTestSet {
  PointSet lifted_points;
  std::vector<HalfSpace> halfspaces;  // in R^{d+1}
  std::size_t t = 0;
};

/// Lifts the points and builds a half-space test set in R^{d+1} with
/// t = ceil(n^{1/d}). Size is at most (d + 2) n^{1 + 1/d}.
BallTestSet build_ball_testset(const PointSet& points, Rng& rng, const TestSetOptions& options = {});

/// Dual shatter constant and VC-dimension bound of ranges defined by Boolean
/// combinations of s polynomial inequalities of degree Delta in R^d.
struct SemialgebraicParams {
  double c_eff = 0.0;
  double vc_bound = 0.0;
};

SemialgebraicParams semialg_dual_shatter_params(int d, int degree, int count);

// ---------------------------------------------------------------------------
// Instance generators.

/// Integer grid [1, side]^d, side = ceil(n0^{1/d}), with the axis thresholds
/// x_i <= j + 1/2 for j = 1..floor(n0^{1/d}). The number of thresholds
/// crossing an edge equals the l1 distance of its endpoints.
struct GridInstance {
  PointSet points;
  std::vector<HalfSpace> ranges;
  Index side = 0;
};

GridInstance grid_instance(Index n0, int d);

/// floor(n^{1/d}) and ceil(n^{1/d}) computed exactly on integers.
std::size_t integer_root_floor(std::size_t n, int d);
std::size_t integer_root_ceil(std::size_t n, int d);

enum class PointDistribution { kUniformBox, kGaussian, kClustered, kAnnulus, kGrid };

PointDistribution parse_distribution(std::string_view name);
std::string_view distribution_name(PointDistribution dist);

PointSet gen_points(Index n, int d, PointDistribution dist, Rng& rng);

/// Half-spaces with uniformly random normal directions whose boundary passes
/// through a random input point.
std::vector<HalfSpace> random_halfspaces(const PointSet& points, std::size_t count, Rng& rng);

/// Balls centred at random input points with radius equal to the distance to
/// another random input point.
std::vector<Ball> random_balls(const PointSet& points, std::size_t count, Rng& rng);

}  // namespace lowcross
