#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fmt/core.h>
#include <fmt/ostream.h>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "lowcross/io.hpp"
#include "lowcross/lowcross.hpp"

using namespace lowcross;
using lowcross::io::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kInfeasible = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Summary {
  double mean = 0.0;
  double sd = 0.0;
};

Summary summarize(const std::vector<double>& v) {
  Summary s;
  if (v.empty()) return s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double acc = 0.0;
    for (double x : v) acc += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(acc / static_cast<double>(v.size() - 1));
  }
  return s;
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw UsageError(what + ": not a number list: " + text);
    }
  }
  return out;
}

// Writes to `path`, or to stdout when it is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot write file");
  out << text;
}

/// Options shared by every command that runs the matching algorithm.
struct AlgoOptions {
  std::string system;
  std::string params;
  std::string dual_shatter;
  std::uint64_t seed = 1;
  int trials = 10;
  std::string out;

  void add_to(CLI::App* cmd) {
    cmd->add_option("system", system, "set system JSON")->required();
    cmd->add_option("--params", params, "a,b,gamma of the crossing assumption");
    cmd->add_option("--dual-shatter", dual_shatter, "c,d of a dual shatter bound c k^d");
    cmd->add_option("--seed", seed, "base seed; trial k uses seed + k");
    cmd->add_option("--trials", trials, "number of seeded trials")->check(CLI::PositiveNumber);
    cmd->add_option("-o,--out", out, "output file (default stdout)");
  }

  std::pair<double, double> shatter(const SetSystem& sys) const {
    if (!dual_shatter.empty()) {
      const auto v = parse_list(dual_shatter, "--dual-shatter");
      if (v.size() != 2) throw UsageError("--dual-shatter expects c,d");
      return {v[0], v[1]};
    }
    if (!sys.is_geometric()) throw UsageError("explicit systems need --params or --dual-shatter");
    const int d = sys.root_points()->dim();
    return {std::pow(4.0 * std::numbers::e, d), static_cast<double>(d)};
  }

  AssumptionParams assumption(const SetSystem& sys) const {
    if (!params.empty()) {
      const auto v = parse_list(params, "--params");
      if (v.size() != 3) throw UsageError("--params expects a,b,gamma");
      AssumptionParams p{v[0], v[1], v[2]};
      p.validate();
      return p;
    }
    const auto [c, d] = shatter(sys);
    return params_from_dual_shatter(c, d, sys.range_count());
  }
};

void report(const char* what, const std::vector<double>& values, const std::vector<double>& calls) {
  const Summary s = summarize(values);
  const Summary c = summarize(calls);
  fmt::print(stderr, "{}: {:.3f} +- {:.3f}, incidence calls {:.4g} +- {:.3g} over {} trials\n", what, s.mean, s.sd,
             c.mean, c.sd, values.size());
}

// --------------------------------------------------------------------------
// gen

struct GenOptions {
  Index n = 256;
  int d = 2;
  std::string dist = "uniform";
  std::uint64_t seed = 1;
  std::string out;
  std::string points;
  std::string family = "halfspace-testset";
  std::size_t count = 100;
  Index n0 = 256;
};

std::vector<GeometricRange> make_family(const std::string& family, PointSet& points, std::size_t count, Rng& rng) {
  std::vector<GeometricRange> ranges;
  if (family == "halfspace-testset") {
    for (auto& h : build_halfspace_testset(points, integer_root_ceil(points.size(), points.dim()), rng))
      ranges.emplace_back(std::move(h));
  } else if (family == "ball-testset") {
    BallTestSet ts = build_ball_testset(points, rng);
    points = std::move(ts.lifted_points);
    for (auto& h : ts.halfspaces) ranges.emplace_back(std::move(h));
  } else if (family == "halfspaces") {
    for (auto& h : random_halfspaces(points, count, rng)) ranges.emplace_back(std::move(h));
  } else if (family == "balls") {
    for (auto& b : random_balls(points, count, rng)) ranges.emplace_back(std::move(b));
  } else {
    throw UsageError("unknown range family " + family);
  }
  return ranges;
}

void add_gen(CLI::App& app, GenOptions& g) {
  auto* gen = app.add_subcommand("gen", "generate points, ranges and systems")->require_subcommand(1);

  auto* points = gen->add_subcommand("points", "point set as CSV");
  points->add_option("--n", g.n, "number of points");
  points->add_option("--d", g.d, "dimension")->check(CLI::PositiveNumber);
  points->add_option("--dist", g.dist, "uniform|gaussian|clustered|annulus|grid");
  points->add_option("--seed", g.seed);
  points->add_option("-o,--out", g.out);
  points->callback([&g] {
    Rng rng(g.seed);
    std::ostringstream ss;
    io::write_points_csv(ss, gen_points(g.n, g.d, parse_distribution(g.dist), rng));
    emit(g.out, ss.str());
  });

  auto* ranges = gen->add_subcommand("ranges", "range family JSON over a point CSV");
  ranges->add_option("points", g.points, "points CSV")->required();
  ranges->add_option("--family", g.family, "halfspace-testset|halfspaces|balls");
  ranges->add_option("--count", g.count, "number of random ranges");
  ranges->add_option("--seed", g.seed);
  ranges->add_option("-o,--out", g.out);
  ranges->callback([&g] {
    if (g.family == "ball-testset") throw UsageError("ball test sets live on lifted points; use gen system");
    PointSet pts = io::read_points_csv_file(g.points);
    Rng rng(g.seed);
    emit(g.out, io::ranges_to_json(make_family(g.family, pts, g.count, rng)).dump(1) + "\n");
  });

  auto* grid = gen->add_subcommand("grid", "axis-threshold grid system JSON");
  grid->add_option("--n0", g.n0, "grid size parameter");
  grid->add_option("--d", g.d, "dimension")->check(CLI::PositiveNumber);
  grid->add_option("-o,--out", g.out);
  grid->callback([&g] {
    GridInstance inst = grid_instance(g.n0, g.d);
    const SetSystem sys = SetSystem::from_halfspaces(std::move(inst.points), std::move(inst.ranges));
    emit(g.out, io::system_to_json(sys).dump() + "\n");
  });

  auto* system = gen->add_subcommand("system", "points and ranges in one geometric system JSON");
  system->add_option("--n", g.n, "number of points");
  system->add_option("--d", g.d, "dimension")->check(CLI::PositiveNumber);
  system->add_option("--dist", g.dist, "point distribution");
  system->add_option("--family", g.family, "halfspace-testset|ball-testset|halfspaces|balls");
  system->add_option("--count", g.count, "number of random ranges");
  system->add_option("--seed", g.seed);
  system->add_option("-o,--out", g.out);
  system->callback([&g] {
    Rng rng(g.seed);
    PointSet pts = gen_points(g.n, g.d, parse_distribution(g.dist), rng);
    auto family = make_family(g.family, pts, g.count, rng);
    const SetSystem sys = SetSystem::from_geometry(std::move(pts), std::move(family));
    emit(g.out, io::system_to_json(sys).dump() + "\n");
  });
}

// --------------------------------------------------------------------------
// match / color / approx / presample

void add_match(CLI::App& app, AlgoOptions& o) {
  auto* cmd = app.add_subcommand("match", "low-crossing perfect matching");
  o.add_to(cmd);
  cmd->callback([&o] {
    const SetSystem sys = io::read_system_file(o.system);
    const AssumptionParams params = o.assumption(sys);
    std::vector<double> cross, calls;
    Json first;
    for (int k = 0; k < o.trials; ++k) {
      const SetSystem tally = sys.fork();
      Rng rng = make_rng(o.seed, k);
      const Matching m = build_matching(tally, params, rng);
      const std::size_t kappa = crossing_number(m, sys);
      cross.push_back(static_cast<double>(kappa));
      calls.push_back(static_cast<double>(tally.counts().incidence));
      if (k == 0) first = io::matching_to_json(m, kappa, tally.counts().incidence, o.seed);
    }
    report("crossing number", cross, calls);
    emit(o.out, first.dump() + "\n");
  });
}

void add_color(CLI::App& app, AlgoOptions& o) {
  auto* cmd = app.add_subcommand("color", "low-discrepancy coloring");
  o.add_to(cmd);
  cmd->callback([&o] {
    const SetSystem sys = io::read_system_file(o.system);
    const AssumptionParams params = o.assumption(sys);
    std::vector<double> disc, calls;
    Json first;
    for (int k = 0; k < o.trials; ++k) {
      const SetSystem tally = sys.fork();
      Rng rng = make_rng(o.seed, k);
      const Coloring chi = low_disc_color(tally, params, rng);
      const long long d = discrepancy(chi, sys);
      disc.push_back(static_cast<double>(d));
      calls.push_back(static_cast<double>(tally.counts().incidence));
      if (k == 0) first = io::coloring_to_json(chi, d);
    }
    report("discrepancy", disc, calls);
    emit(o.out, first.dump() + "\n");
  });
}

struct ApproxOptions {
  double eps = 0.1;
  int vc = 0;
  double capx = 0.5;
};

void add_approx(CLI::App& app, AlgoOptions& o, ApproxOptions& a) {
  auto* cmd = app.add_subcommand("approx", "eps-approximation by repeated halving");
  o.add_to(cmd);
  cmd->add_option("--eps", a.eps, "target error in (0, 1)");
  cmd->add_option("--vc", a.vc, "VC dimension; enables the uniform-sample bootstrap");
  cmd->add_option("--capx", a.capx, "sampling constant of the bootstrap");
  cmd->callback([&o, &a] {
    const SetSystem sys = io::read_system_file(o.system);
    const AssumptionParams params = o.assumption(sys);
    std::vector<double> eps, calls;
    Json first;
    for (int k = 0; k < o.trials; ++k) {
      Rng rng = make_rng(o.seed, k);
      const ApproxResult r =
          a.vc > 0 ? vc_bootstrap_approximate(sys, params, a.eps, a.vc, rng, a.capx) : approximate(sys, params, a.eps, rng);
      eps.push_back(r.eps_measured);
      calls.push_back(static_cast<double>(r.incidence_calls));
      if (k == 0) first = io::approx_to_json(r);
    }
    report("measured eps", eps, calls);
    emit(o.out, first.dump() + "\n");
  });
}

struct PresampleOptions {
  double alpha = 0.5;
  double multiplier = 1.0;
};

PresampleConfig presample_config(const AlgoOptions& o, const PresampleOptions& p, const SetSystem& sys) {
  if (!o.params.empty()) throw UsageError("presampled commands take --dual-shatter, not --params");
  const auto [c, d] = o.shatter(sys);
  PresampleConfig cfg;
  cfg.alpha = p.alpha;
  cfg.c = c;
  cfg.d = d;
  cfg.rate_multiplier = p.multiplier;
  cfg.validate();
  return cfg;
}

void add_presample(CLI::App& app, AlgoOptions& o, PresampleOptions& p) {
  auto* match = app.add_subcommand("presample-match", "matching on presampled candidate edges");
  o.add_to(match);
  match->add_option("--alpha", p.alpha, "trade-off exponent in (0, 1]");
  match->add_option("--rate-multiplier", p.multiplier, "scales the edge sampling probability");
  match->callback([&o, &p] {
    const SetSystem sys = io::read_system_file(o.system);
    const PresampleConfig cfg = presample_config(o, p, sys);
    std::vector<double> cross, calls;
    Json first;
    for (int k = 0; k < o.trials; ++k) {
      const SetSystem tally = sys.fork();
      Rng rng = make_rng(o.seed, k);
      const Matching m = matching_presampled(tally, cfg, rng);
      const std::size_t kappa = crossing_number(m, sys);
      cross.push_back(static_cast<double>(kappa));
      calls.push_back(static_cast<double>(tally.counts().incidence));
      if (k == 0) {
        first = io::matching_to_json(m, kappa, tally.counts().incidence, o.seed);
        first["alpha"] = cfg.alpha;
      }
    }
    report("crossing number", cross, calls);
    emit(o.out, first.dump() + "\n");
  });

  auto* color = app.add_subcommand("presample-color", "coloring from a presampled matching");
  o.add_to(color);
  color->add_option("--alpha", p.alpha, "trade-off exponent in (0, 1]");
  color->add_option("--rate-multiplier", p.multiplier, "scales the edge sampling probability");
  color->callback([&o, &p] {
    const SetSystem sys = io::read_system_file(o.system);
    const PresampleConfig cfg = presample_config(o, p, sys);
    std::vector<double> disc, calls;
    Json first;
    for (int k = 0; k < o.trials; ++k) {
      const SetSystem tally = sys.fork();
      Rng rng = make_rng(o.seed, k);
      const Coloring chi = low_disc_color_presampled(tally, cfg, rng);
      const long long d = discrepancy(chi, sys);
      disc.push_back(static_cast<double>(d));
      calls.push_back(static_cast<double>(tally.counts().incidence));
      if (k == 0) {
        first = io::coloring_to_json(chi, d);
        first["alpha"] = cfg.alpha;
      }
    }
    report("discrepancy", disc, calls);
    emit(o.out, first.dump() + "\n");
  });
}

// --------------------------------------------------------------------------
// eval

struct EvalOptions {
  std::string artifact;
  std::string system;
};

void add_eval(CLI::App& app, EvalOptions& e) {
  auto* eval = app.add_subcommand("eval", "evaluate a stored artifact against a system")->require_subcommand(1);
  auto add = [&](const char* name, const char* help, auto fn) {
    auto* cmd = eval->add_subcommand(name, help);
    cmd->add_option("artifact", e.artifact, "artifact JSON")->required();
    cmd->add_option("system", e.system, "set system JSON")->required();
    cmd->callback([&e, fn] {
      const SetSystem sys = io::read_system_file(e.system);
      std::cout << fn(io::read_json_file(e.artifact), sys) << "\n";
    });
  };
  add("crossing", "crossing number of a matching", [](const Json& j, const SetSystem& sys) {
    return fmt::format("{}", crossing_number(io::matching_from_json(j, sys.size()), sys));
  });
  add("disc", "discrepancy of a coloring", [](const Json& j, const SetSystem& sys) {
    const Coloring chi = io::coloring_from_json(j);
    if (chi.size() != sys.size()) throw DataError("signs: coloring size differs from the ground set");
    return fmt::format("{}", discrepancy(chi, sys));
  });
  add("eps", "approximation error of a subset", [](const Json& j, const SetSystem& sys) {
    const ApproxResult r = io::approx_from_json(j);
    for (Index x : r.subset)
      if (x >= sys.size()) throw DataError("subset: index outside the ground set");
    return fmt::format("{}", eps_error(r.subset, sys));
  });
}

// --------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string dims = "2,3,4";
  std::string n_grid = "256,512,1024";
  std::string alphas = "1,0.5,0.25";
  std::string dist = "uniform";
  Index n = 1024;
  int d = 2;
  int trials = 10;
  std::uint64_t seed = 1;
  std::string out;
};

void add_bench(CLI::App& app, BenchOptions& b) {
  auto* bench = app.add_subcommand("bench", "experiments emitting CSV")->require_subcommand(1);

  auto* dvr = bench->add_subcommand("disc-vs-random", "our discrepancy against uniform random colorings");
  dvr->add_option("--dims", b.dims, "comma-separated dimensions");
  dvr->add_option("--n-grid", b.n_grid, "comma-separated sizes");
  dvr->add_option("--dist", b.dist, "point distribution");
  dvr->add_option("--trials", b.trials)->check(CLI::PositiveNumber);
  dvr->add_option("--seed", b.seed);
  dvr->add_option("-o,--out", b.out);
  dvr->callback([&b] {
    std::ostringstream csv;
    csv << "n,dim,m,mean_ours,sd_ours,mean_random,sd_random,trials\n";
    for (double dim : parse_list(b.dims, "--dims")) {
      for (double nn : parse_list(b.n_grid, "--n-grid")) {
        const auto n = static_cast<Index>(nn);
        const int d = static_cast<int>(dim);
        Rng inst = make_rng(b.seed, static_cast<std::uint64_t>(n) * 16 + static_cast<std::uint64_t>(d));
        PointSet pts = gen_points(n, d, parse_distribution(b.dist), inst);
        auto ranges = build_halfspace_testset(pts, integer_root_ceil(n, d), inst);
        const SetSystem sys = SetSystem::from_halfspaces(std::move(pts), std::move(ranges));
        const AssumptionParams params =
            params_from_dual_shatter(std::pow(4.0 * std::numbers::e, d), d, sys.range_count());
        std::vector<double> ours, random;
        for (int k = 0; k < b.trials; ++k) {
          Rng rng = make_rng(b.seed, static_cast<std::uint64_t>(k));
          ours.push_back(static_cast<double>(discrepancy(low_disc_color(sys, params, rng), sys)));
          random.push_back(static_cast<double>(discrepancy(random_coloring(n, rng), sys)));
        }
        const Summary o = summarize(ours);
        const Summary r = summarize(random);
        csv << fmt::format("{},{},{},{:.4f},{:.4f},{:.4f},{:.4f},{}\n", n, d, sys.range_count(), o.mean, o.sd, r.mean,
                           r.sd, b.trials);
      }
    }
    emit(b.out, csv.str());
  });

  auto* trade = bench->add_subcommand("tradeoff", "presampling trade-off across alpha");
  trade->add_option("--alphas", b.alphas, "comma-separated alpha values");
  trade->add_option("--n", b.n, "number of points");
  trade->add_option("--d", b.d, "dimension")->check(CLI::PositiveNumber);
  trade->add_option("--dist", b.dist, "point distribution");
  trade->add_option("--trials", b.trials)->check(CLI::PositiveNumber);
  trade->add_option("--seed", b.seed);
  trade->add_option("-o,--out", b.out);
  trade->callback([&b] {
    Rng inst = make_rng(b.seed, 7);
    PointSet pts = gen_points(b.n, b.d, parse_distribution(b.dist), inst);
    auto ranges = build_halfspace_testset(pts, integer_root_ceil(b.n, b.d), inst);
    const SetSystem sys = SetSystem::from_halfspaces(std::move(pts), std::move(ranges));
    std::ostringstream csv;
    csv << "alpha,n,mean_crossing,mean_disc,mean_incidence_calls,trials\n";
    for (double alpha : parse_list(b.alphas, "--alphas")) {
      PresampleConfig cfg;
      cfg.alpha = alpha;
      cfg.c = std::pow(4.0 * std::numbers::e, b.d);
      cfg.d = b.d;
      cfg.validate();
      std::vector<double> cross, disc, calls;
      for (int k = 0; k < b.trials; ++k) {
        const SetSystem tally = sys.fork();
        Rng rng = make_rng(b.seed, static_cast<std::uint64_t>(k));
        Matching m;
        const Coloring chi = low_disc_color_presampled(tally, cfg, rng, &m);
        cross.push_back(static_cast<double>(crossing_number(m, sys)));
        disc.push_back(static_cast<double>(discrepancy(chi, sys)));
        calls.push_back(static_cast<double>(tally.counts().incidence));
      }
      csv << fmt::format("{},{},{:.4f},{:.4f},{:.6g},{}\n", alpha, b.n, summarize(cross).mean, summarize(disc).mean,
                         summarize(calls).mean, b.trials);
    }
    emit(b.out, csv.str());
  });
}

// --------------------------------------------------------------------------
// plot

struct PlotOptions {
  std::string points;
  std::string matching;
  std::string out;
};

std::string matching_svg(const PointSet& pts, const Matching& m) {
  double lo_x = INFINITY, lo_y = INFINITY, hi_x = -INFINITY, hi_y = -INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    lo_x = std::min(lo_x, pts[i][0]);
    hi_x = std::max(hi_x, pts[i][0]);
    lo_y = std::min(lo_y, pts[i][1]);
    hi_y = std::max(hi_y, pts[i][1]);
  }
  const double size = 600.0;
  const double margin = 20.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  auto sx = [&](double x) { return margin + (x - lo_x) / span * (size - 2 * margin); };
  auto sy = [&](double y) { return size - margin - (y - lo_y) / span * (size - 2 * margin); };

  std::ostringstream svg;
  svg << fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#1f77b4\" stroke-width=\"1\">\n",
      size);
  for (const auto& e : m.edges)
    if (!e.is_loop())
      svg << fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", sx(pts[e.u][0]),
                         sy(pts[e.u][1]), sx(pts[e.v][0]), sy(pts[e.v][1]));
  svg << "</g>\n<g fill=\"black\">\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    svg << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\"/>\n", sx(pts[i][0]), sy(pts[i][1]));
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void add_plot(CLI::App& app, PlotOptions& p) {
  auto* plot = app.add_subcommand("plot", "SVG renderings")->require_subcommand(1);
  auto* cmd = plot->add_subcommand("matching", "draw a matching on 2-D points");
  cmd->add_option("points", p.points, "points CSV")->required();
  cmd->add_option("matching", p.matching, "matching JSON")->required();
  cmd->add_option("-o,--out", p.out, "SVG file (default stdout)");
  cmd->callback([&p] {
    const PointSet pts = io::read_points_csv_file(p.points);
    if (pts.dim() != 2) throw DataError(p.points + ": plotting needs 2-D points, got dimension " + std::to_string(pts.dim()));
    const Matching m = io::matching_from_json(io::read_json_file(p.matching), static_cast<Index>(pts.size()));
    emit(p.out, matching_svg(pts, m));
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-crossing matchings, low-discrepancy colorings and eps-approximations"};
  app.require_subcommand(1);

  GenOptions gen;
  AlgoOptions algo;
  ApproxOptions approx;
  PresampleOptions presample;
  EvalOptions eval;
  BenchOptions bench;
  PlotOptions plot;
  add_gen(app, gen);
  add_match(app, algo);
  add_color(app, algo);
  add_approx(app, algo, approx);
  add_presample(app, algo, presample);
  add_eval(app, eval);
  add_bench(app, bench);
  add_plot(app, plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const InfeasibleSampleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const RefusedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const EmptyDistributionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInfeasible;
  }
  return kOk;
}
