#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "lowcross/approx.hpp"
#include "lowcross/discrepancy.hpp"
#include "lowcross/geometry.hpp"
#include "lowcross/matching.hpp"
#include "lowcross/set_system.hpp"

// File formats. Malformed input raises DataError naming the offending line or
// field.
//
//   explicit system   {"n": 5, "ranges": [[0, 2], [1]]}
//   geometric system  {"points": [[x, y], ...], "ranges": <range family>}
//   range family      [{"type": "halfspace", "normal": [..], "offset": f},
//                      {"type": "ball", "center": [..], "radius": f},
//                      {"type": "semialg", "polys": [[{"coef": f, "exp": [..]}, ..], ..],
//                       "formula": {"atom": i} | {"not": F} | {"and": [F, ..]} | {"or": [F, ..]}}]
//   points CSV        header row, then one point per row

namespace lowcross::io {

using Json = nlohmann::json;

Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

PointSet read_points_csv(std::istream& in, const std::string& source = "input");
PointSet read_points_csv_file(const std::string& path);
void write_points_csv(std::ostream& out, const PointSet& points);

Json range_to_json(const GeometricRange& r);
GeometricRange range_from_json(const Json& j, const std::string& where = "range");
Json ranges_to_json(std::span<const GeometricRange> ranges);
std::vector<GeometricRange> ranges_from_json(const Json& j);

/// Accepts both the explicit and the geometric layout.
SetSystem system_from_json(const Json& j);
SetSystem read_system_file(const std::string& path);
/// Explicit systems keep their layout; geometric systems are written with
/// their points and range family. Restricted systems are written explicitly.
Json system_to_json(const SetSystem& sys);
/// Explicit layout listing the members of every range.
Json explicit_system_to_json(const SetSystem& sys);

Json matching_to_json(const Matching& m, std::size_t crossing, std::uint64_t incidence_calls, std::uint64_t seed);
/// n is the ground-set size the matching refers to.
Matching matching_from_json(const Json& j, Index n);

Json coloring_to_json(const Coloring& chi, long long disc);
Coloring coloring_from_json(const Json& j);

Json approx_to_json(const ApproxResult& r);
ApproxResult approx_from_json(const Json& j);

}  // namespace lowcross::io
