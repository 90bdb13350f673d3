#include "lowcross/set_system.hpp"

#include <algorithm>
#include <string>

#include "lowcross/errors.hpp"

namespace lowcross {

struct SetSystem::Ground {
  enum class Kind { kExplicit, kHalfspaces, kMixed };

  Kind kind = Kind::kExplicit;
  Index n = 0;
  RangeId m = 0;

  // One bit row per range: the explicit ranges, or the materialised
  // geometric membership when it is small enough.
  std::size_t words_per_range = 0;
  std::vector<std::uint64_t> bits;

  // Geometric.
  PointSet points;
  int dim = 0;
  std::vector<GeometricRange> ranges;
  // Half-space fast path: normals row-major (m x dim) and offsets.
  std::vector<double> normals;
  std::vector<double> offsets;
};

SetSystem::SetSystem() : SetSystem(std::make_shared<Ground>(), 0) {}

namespace {
constexpr std::size_t kMaxTableBits = std::size_t{1} << 31;
}

SetSystem::SetSystem(std::shared_ptr<const Ground> ground, Index size)
    : ground_(std::move(ground)), counts_(std::make_shared<OracleCounts>()), size_(size) {
  m_ = ground_->m;
  if (!ground_->bits.empty()) {
    table_ = ground_->bits.data();
    words_ = ground_->words_per_range;
  }
}

void SetSystem::throw_out_of_range() { throw ContractViolation("incidence query out of range"); }

SetSystem SetSystem::from_ranges(Index n, std::vector<std::vector<Index>> ranges) {
  auto g = std::make_shared<Ground>();
  g->kind = Ground::Kind::kExplicit;
  g->n = n;
  g->m = static_cast<RangeId>(ranges.size());
  g->words_per_range = (static_cast<std::size_t>(n) + 63) / 64;
  g->bits.assign(g->words_per_range * g->m, 0);
  for (RangeId s = 0; s < g->m; ++s) {
    const auto& r = ranges[s];
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] >= n)
        throw ContractViolation("range " + std::to_string(s) + " contains index " + std::to_string(r[i]) +
                                " outside the ground set");
      if (i > 0 && r[i] <= r[i - 1])
        throw ContractViolation("range " + std::to_string(s) + " is not strictly increasing");
      g->bits[s * g->words_per_range + r[i] / 64] |= std::uint64_t{1} << (r[i] % 64);
    }
  }
  return SetSystem(std::move(g), n);
}

SetSystem SetSystem::from_geometry(PointSet points, std::vector<GeometricRange> ranges) {
  auto g = std::make_shared<Ground>();
  g->n = static_cast<Index>(points.size());
  g->m = static_cast<RangeId>(ranges.size());
  g->dim = points.dim();
  bool all_halfspaces = true;
  for (const auto& r : ranges) {
    if (g->n > 0 && range_dim(r) != g->dim) throw DataError("range dimension does not match point dimension");
    if (const auto* sa = std::get_if<SemialgebraicRange>(&r)) sa->validate(g->dim);
    if (const auto* b = std::get_if<Ball>(&r); b && b->radius < 0.0) throw DataError("ball with negative radius");
    if (const auto* h = std::get_if<HalfSpace>(&r)) {
      if (std::all_of(h->normal.begin(), h->normal.end(), [](double v) { return v == 0.0; }))
        throw DataError("half-space with zero normal");
    } else {
      all_halfspaces = false;
    }
  }
  g->kind = all_halfspaces ? Ground::Kind::kHalfspaces : Ground::Kind::kMixed;
  if (all_halfspaces) {
    g->normals.reserve(ranges.size() * g->dim);
    for (const auto& r : ranges) {
      const auto& h = std::get<HalfSpace>(r);
      g->normals.insert(g->normals.end(), h.normal.begin(), h.normal.end());
      g->offsets.push_back(h.offset);
    }
  }
  g->points = std::move(points);
  g->ranges = std::move(ranges);
  g->words_per_range = (static_cast<std::size_t>(g->n) + 63) / 64;
  if (g->n > 0 && g->words_per_range * 64 * g->m <= kMaxTableBits) {
    g->bits.assign(g->words_per_range * g->m, 0);
    // contains_root reads the table once it is filled, so evaluate directly.
    for (RangeId s = 0; s < g->m; ++s)
      for (Index x = 0; x < g->n; ++x)
        if (evaluate_geometric(*g, x, s)) g->bits[s * g->words_per_range + x / 64] |= std::uint64_t{1} << (x % 64);
  }
  const Index n = g->n;
  return SetSystem(std::move(g), n);
}

SetSystem SetSystem::from_halfspaces(PointSet points, std::vector<HalfSpace> ranges) {
  std::vector<GeometricRange> rs;
  rs.reserve(ranges.size());
  for (auto& h : ranges) rs.emplace_back(std::move(h));
  return from_geometry(std::move(points), std::move(rs));
}

RangeId SetSystem::range_count() const { return ground_->m; }

bool SetSystem::is_explicit() const { return ground_->kind == Ground::Kind::kExplicit; }

int SetSystem::dim() const { return ground_->dim; }

const PointSet* SetSystem::root_points() const { return is_explicit() ? nullptr : &ground_->points; }

const std::vector<GeometricRange>* SetSystem::root_ranges() const {
  return is_explicit() ? nullptr : &ground_->ranges;
}

bool SetSystem::contains_root(Index x, RangeId s) const {
  if (table_) return (table_[s * words_ + x / 64] >> (x % 64)) & 1u;
  return evaluate_geometric(*ground_, x, s);
}

bool SetSystem::evaluate_geometric(const Ground& g, Index x, RangeId s) {
  switch (g.kind) {
    case Ground::Kind::kExplicit:
      return (g.bits[s * g.words_per_range + x / 64] >> (x % 64)) & 1u;
    case Ground::Kind::kHalfspaces: {
      const double* p = g.points.coords().data() + static_cast<std::size_t>(x) * g.dim;
      const double* a = g.normals.data() + static_cast<std::size_t>(s) * g.dim;
      double dot = 0.0;
      for (int k = 0; k < g.dim; ++k) dot += a[k] * p[k];
      return dot - g.offsets[s] <= kBoundaryTolerance;
    }
    case Ground::Kind::kMixed:
      return range_contains(g.ranges[s], g.points[x]);
  }
  return false;
}

bool SetSystem::contains(Index x, RangeId s) const {
  if (x >= size_ || s >= ground_->m) throw ContractViolation("membership query out of range");
  return contains_root(root_index(x), s);
}

bool SetSystem::membership(Index x, RangeId s) const {
  const bool r = contains(x, s);
  ++counts_->membership;
  return r;
}

SetSystem SetSystem::fork() const {
  SetSystem copy = *this;
  copy.counts_ = std::make_shared<OracleCounts>();
  return copy;
}

SetSystem SetSystem::restrict(std::span<const Index> subset) const {
  auto map = std::make_shared<std::vector<Index>>();
  map->reserve(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= size_) throw ContractViolation("restrict: index outside the ground set");
    if (i > 0 && subset[i] <= subset[i - 1]) throw ContractViolation("restrict: subset must be strictly increasing");
    map->push_back(root_index(subset[i]));
  }
  SetSystem out = *this;
  out.size_ = static_cast<Index>(subset.size());
  out.map_data_ = map->data();
  out.map_ = std::move(map);
  return out;
}

std::vector<Index> SetSystem::range_members(RangeId s) const {
  if (s >= ground_->m) throw ContractViolation("range id out of range");
  std::vector<Index> out;
  for (Index x = 0; x < size_; ++x)
    if (contains_root(root_index(x), s)) out.push_back(x);
  return out;
}

}  // namespace lowcross
