#include "lowcross/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lowcross/errors.hpp"

namespace lowcross::io {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw DataError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DataError(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw DataError(where + ": expected a number");
  return j.get<double>();
}

std::vector<double> vector_of_numbers(const Json& j, const std::string& where) {
  if (!j.is_array()) throw DataError(where + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw DataError(where + ": expected an integer");
  return j.get<long long>();
}

Json formula_to_json(const FormulaNode& f) {
  switch (f.op) {
    case FormulaNode::Op::kAtom:
      return Json{{"atom", f.atom}};
    case FormulaNode::Op::kNot:
      return Json{{"not", formula_to_json(f.args.at(0))}};
    case FormulaNode::Op::kAnd:
    case FormulaNode::Op::kOr: {
      Json args = Json::array();
      for (const auto& a : f.args) args.push_back(formula_to_json(a));
      return Json{{f.op == FormulaNode::Op::kAnd ? "and" : "or", args}};
    }
  }
  return Json();
}

FormulaNode formula_from_json(const Json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) throw DataError(where + ": formula node must be an object with one key");
  const auto& [key, value] = *j.items().begin();
  if (key == "atom") {
    const long long i = integer(value, where + ".atom");
    if (i < 0) throw DataError(where + ".atom: negative polynomial index");
    return FormulaNode::make_atom(static_cast<std::size_t>(i));
  }
  if (key == "not") return FormulaNode::make_not(formula_from_json(value, where + ".not"));
  if (key == "and" || key == "or") {
    if (!value.is_array() || value.empty()) throw DataError(where + "." + key + ": expected a non-empty array");
    std::vector<FormulaNode> args;
    for (std::size_t i = 0; i < value.size(); ++i)
      args.push_back(formula_from_json(value[i], where + "." + key + "[" + std::to_string(i) + "]"));
    return key == "and" ? FormulaNode::make_and(std::move(args)) : FormulaNode::make_or(std::move(args));
  }
  throw DataError(where + ": unknown formula operator \"" + key + "\"");
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(source + ":" + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot write file");
  out << j.dump() << '\n';
}

PointSet read_points_csv(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  int dim = -1;
  std::vector<double> coords;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& c : cells) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(c, &used));
        if (c.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) {
      if (dim < 0 && coords.empty()) {
        dim = static_cast<int>(cells.size());  // header row
        continue;
      }
      throw DataError(source + ":" + std::to_string(lineno) + ": non-numeric field");
    }
    if (dim < 0) dim = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != dim)
      throw DataError(source + ":" + std::to_string(lineno) + ": expected " + std::to_string(dim) + " columns, got " +
                      std::to_string(row.size()));
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (dim <= 0) return PointSet();
  return PointSet(dim, std::move(coords));
}

PointSet read_points_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open file");
  return read_points_csv(in, path);
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (int k = 0; k < points.dim(); ++k) out << (k ? "," : "") << "x" << k + 1;
  out << '\n';
  out.precision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points[i];
    for (int k = 0; k < points.dim(); ++k) out << (k ? "," : "") << p[k];
    out << '\n';
  }
}

Json range_to_json(const GeometricRange& r) {
  if (const auto* h = std::get_if<HalfSpace>(&r)) return Json{{"type", "halfspace"}, {"normal", h->normal}, {"offset", h->offset}};
  if (const auto* b = std::get_if<Ball>(&r)) return Json{{"type", "ball"}, {"center", b->center}, {"radius", b->radius}};
  const auto& s = std::get<SemialgebraicRange>(r);
  Json polys = Json::array();
  for (const auto& p : s.polynomials) {
    Json terms = Json::array();
    for (const auto& t : p.terms) terms.push_back(Json{{"coef", t.coefficient}, {"exp", t.exponents}});
    polys.push_back(terms);
  }
  return Json{{"type", "semialg"}, {"polys", polys}, {"formula", formula_to_json(s.formula)}};
}

GeometricRange range_from_json(const Json& j, const std::string& where) {
  const Json& type = field(j, "type", where);
  if (!type.is_string()) throw DataError(where + ".type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "halfspace") {
    HalfSpace h{vector_of_numbers(field(j, "normal", where), where + ".normal"),
                number(field(j, "offset", where), where + ".offset")};
    return h;
  }
  if (t == "ball") {
    Ball b{vector_of_numbers(field(j, "center", where), where + ".center"),
           number(field(j, "radius", where), where + ".radius")};
    if (b.radius < 0.0) throw DataError(where + ".radius: must be non-negative");
    return b;
  }
  if (t == "semialg") {
    SemialgebraicRange s;
    const Json& polys = field(j, "polys", where);
    if (!polys.is_array()) throw DataError(where + ".polys: expected an array");
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const std::string pw = where + ".polys[" + std::to_string(i) + "]";
      if (!polys[i].is_array()) throw DataError(pw + ": expected an array of monomials");
      Polynomial p;
      for (std::size_t k = 0; k < polys[i].size(); ++k) {
        const std::string mw = pw + "[" + std::to_string(k) + "]";
        Monomial mono;
        mono.coefficient = number(field(polys[i][k], "coef", mw), mw + ".coef");
        const Json& ex = field(polys[i][k], "exp", mw);
        if (!ex.is_array()) throw DataError(mw + ".exp: expected an array");
        for (std::size_t q = 0; q < ex.size(); ++q) {
          const long long e = integer(ex[q], mw + ".exp");
          if (e < 0) throw DataError(mw + ".exp: negative exponent");
          mono.exponents.push_back(static_cast<unsigned>(e));
        }
        p.terms.push_back(std::move(mono));
      }
      s.polynomials.push_back(std::move(p));
    }
    s.formula = formula_from_json(field(j, "formula", where), where + ".formula");
    return s;
  }
  throw DataError(where + ".type: unknown range type \"" + t + "\"");
}

Json ranges_to_json(std::span<const GeometricRange> ranges) {
  Json out = Json::array();
  for (const auto& r : ranges) out.push_back(range_to_json(r));
  return out;
}

std::vector<GeometricRange> ranges_from_json(const Json& j) {
  if (!j.is_array()) throw DataError("ranges: expected an array");
  std::vector<GeometricRange> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(range_from_json(j[i], "ranges[" + std::to_string(i) + "]"));
  return out;
}

SetSystem system_from_json(const Json& j) {
  if (!j.is_object()) throw DataError("system: expected an object");
  if (j.contains("points")) {
    const Json& pts = j["points"];
    if (!pts.is_array()) throw DataError("points: expected an array");
    int dim = -1;
    std::vector<double> coords;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto row = vector_of_numbers(pts[i], "points[" + std::to_string(i) + "]");
      if (dim < 0) dim = static_cast<int>(row.size());
      if (static_cast<int>(row.size()) != dim || dim == 0)
        throw DataError("points[" + std::to_string(i) + "]: dimension mismatch");
      coords.insert(coords.end(), row.begin(), row.end());
    }
    auto ranges = ranges_from_json(field(j, "ranges", "system"));
    PointSet points = dim > 0 ? PointSet(dim, std::move(coords)) : PointSet();
    for (std::size_t i = 0; i < ranges.size(); ++i)
      if (dim > 0 && range_dim(ranges[i]) != dim)
        throw DataError("ranges[" + std::to_string(i) + "]: dimension " + std::to_string(range_dim(ranges[i])) +
                        " does not match point dimension " + std::to_string(dim));
    try {
      return SetSystem::from_geometry(std::move(points), std::move(ranges));
    } catch (const ContractViolation& e) {
      throw DataError(std::string("ranges: ") + e.what());
    }
  }
  const long long n = integer(field(j, "n", "system"), "n");
  if (n < 0) throw DataError("n: must be non-negative");
  const Json& rs = field(j, "ranges", "system");
  if (!rs.is_array()) throw DataError("ranges: expected an array");
  std::vector<std::vector<Index>> ranges;
  for (std::size_t s = 0; s < rs.size(); ++s) {
    const std::string where = "ranges[" + std::to_string(s) + "]";
    if (!rs[s].is_array()) throw DataError(where + ": expected an array of indices");
    std::vector<Index> members;
    for (std::size_t i = 0; i < rs[s].size(); ++i) {
      const long long x = integer(rs[s][i], where);
      if (x < 0 || x >= n) throw DataError(where + ": index " + std::to_string(x) + " outside [0, n)");
      if (!members.empty() && x <= members.back()) throw DataError(where + ": indices must be strictly increasing");
      members.push_back(static_cast<Index>(x));
    }
    ranges.push_back(std::move(members));
  }
  return SetSystem::from_ranges(static_cast<Index>(n), std::move(ranges));
}

SetSystem read_system_file(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return system_from_json(j);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

Json explicit_system_to_json(const SetSystem& sys) {
  Json ranges = Json::array();
  for (RangeId s = 0; s < sys.range_count(); ++s) ranges.push_back(sys.range_members(s));
  return Json{{"n", sys.size()}, {"ranges", ranges}};
}

Json system_to_json(const SetSystem& sys) {
  if (sys.is_explicit()) return explicit_system_to_json(sys);
  const PointSet& root = *sys.root_points();
  Json pts = Json::array();
  for (Index x = 0; x < sys.size(); ++x) {
    const auto p = root[sys.root_index(x)];
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return Json{{"points", pts}, {"ranges", ranges_to_json(*sys.root_ranges())}};
}

Json matching_to_json(const Matching& m, std::size_t crossing, std::uint64_t incidence_calls, std::uint64_t seed) {
  Json edges = Json::array();
  for (const auto& e : m.edges) edges.push_back({e.u, e.v});
  return Json{{"edges", edges}, {"crossing_number", crossing}, {"incidence_calls", incidence_calls}, {"seed", seed}};
}

Matching matching_from_json(const Json& j, Index n) {
  const Json& edges = field(j, "edges", "matching");
  if (!edges.is_array()) throw DataError("edges: expected an array");
  Matching m;
  m.n = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw DataError(where + ": expected a pair");
    const long long u = integer(edges[i][0], where);
    const long long v = integer(edges[i][1], where);
    if (u < 0 || v < 0 || u >= n || v >= n) throw DataError(where + ": endpoint outside the ground set");
    m.edges.push_back(Edge::make(static_cast<Index>(u), static_cast<Index>(v)));
  }
  if (!m.is_valid()) throw DataError("edges: endpoints are not disjoint");
  return m;
}

Json coloring_to_json(const Coloring& chi, long long disc) {
  std::vector<int> signs(chi.signs.begin(), chi.signs.end());
  return Json{{"signs", signs}, {"discrepancy", disc}};
}

Coloring coloring_from_json(const Json& j) {
  const Json& signs = field(j, "signs", "coloring");
  if (!signs.is_array()) throw DataError("signs: expected an array");
  Coloring chi;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const long long s = integer(signs[i], "signs[" + std::to_string(i) + "]");
    if (s != 1 && s != -1) throw DataError("signs[" + std::to_string(i) + "]: must be 1 or -1");
    chi.signs.push_back(static_cast<std::int8_t>(s));
  }
  return chi;
}

Json approx_to_json(const ApproxResult& r) {
  return Json{{"subset", r.subset},
              {"eps_measured", r.eps_measured},
              {"rounds", r.rounds},
              {"incidence_calls", r.incidence_calls}};
}

ApproxResult approx_from_json(const Json& j) {
  ApproxResult r;
  const Json& subset = field(j, "subset", "approx");
  if (!subset.is_array()) throw DataError("subset: expected an array");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const long long x = integer(subset[i], "subset[" + std::to_string(i) + "]");
    if (x < 0) throw DataError("subset: negative index");
    r.subset.push_back(static_cast<Index>(x));
  }
  r.eps_measured = number(field(j, "eps_measured", "approx"), "eps_measured");
  r.rounds = static_cast<int>(integer(field(j, "rounds", "approx"), "rounds"));
  r.noop = r.rounds == 0;
  if (j.contains("incidence_calls")) r.incidence_calls = static_cast<std::uint64_t>(integer(j["incidence_calls"], "incidence_calls"));
  return r;
}

}  // namespace lowcross::io
