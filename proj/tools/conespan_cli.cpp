// conespan: generate point sets, build cone graphs, measure and audit them.
//
// exit: 0 ok, 1 verification failure, 2 usage/config error, 3 I/O or parse.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "conespan/analysis.hpp"
#include "conespan/generate.hpp"
#include "conespan/io.hpp"
#include "conespan/span_paths.hpp"
#include "conespan/svg.hpp"
#include "conespan/verify.hpp"

using namespace conespan;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct Options {
  std::string family = "yao";
  int k = 8;
  int n = 100;
  std::uint64_t seed = 1;
  std::string kind = "uniform";
  double side = 1.0, pitch = 1.0, radius = 1.0, jitter = 0.0, spread = 0.05;
  int clusters = 4;
  std::string in;
  std::string out;
  std::string format;
  double tolerance = kRelTol;
  // path
  int from = 0, to = 1, scenario = 0;
  // verify
  std::string edges;
  std::string edges_family = "ty";
  std::size_t samples = 100000;
  std::size_t scenarios = 2000;
  // render
  bool witness = false;
};

Family family_of(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw ConfigError("unknown family '" + name + "' (yao, yy, oy, ty)");
  return *f;
}

PointFormat point_format(const Options& o, const std::string& path) {
  if (!o.format.empty()) {
    const auto f = parse_point_format(o.format);
    if (!f) throw ConfigError("unknown --format '" + o.format + "' (csv, json)");
    return *f;
  }
  if (!path.empty()) {
    if (auto f = format_from_path(path)) return *f;
  }
  return PointFormat::csv;
}

GenSpec gen_spec(const Options& o) {
  GenSpec spec;
  const auto kind = parse_gen_kind(o.kind);
  if (!kind) {
    throw ConfigError("unknown --kind '" + o.kind +
                      "' (uniform, grid, circle, clustered)");
  }
  spec.kind = *kind;
  spec.n = o.n;
  spec.seed = o.seed;
  spec.side = o.side;
  spec.pitch = o.pitch;
  spec.radius = o.radius;
  spec.jitter = o.jitter;
  spec.clusters = o.clusters;
  spec.spread = o.spread;
  return spec;
}

RunConfig run_config(Command cmd, const Options& o, bool needs_family) {
  RunConfig c;
  c.command = cmd;
  if (needs_family) c.family = family_of(o.family);
  c.k = o.k;
  c.gen = gen_spec(o);
  if (!o.in.empty()) c.input = o.in;
  if (!o.out.empty()) c.output = o.out;
  c.tolerance = o.tolerance;
  for (const auto& w : validate_run_config(c)) {
    std::cerr << "warning: " << w << "\n";
  }
  return c;
}

std::vector<Point> load_points(const Options& o) {
  if (o.in.empty()) return gen_points(gen_spec(o));
  // Input format is guessed from the extension; --format names the output.
  auto f = format_from_path(o.in);
  return read_points(o.in, f.value_or(PointFormat::csv));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
}

ReportMeta meta(const Options& o, const std::string& command,
                const std::string& family, int n) {
  ReportMeta m;
  m.command = command;
  m.family = family;
  m.k = o.k;
  if (o.in.empty()) m.seed = o.seed;
  m.input = o.in.empty() ? "gen:" + o.kind : o.in;
  m.n = n;
  return m;
}

int cmd_gen(const Options& o) {
  run_config(Command::gen, o, false);
  const auto pts = gen_points(gen_spec(o));
  const auto f = point_format(o, o.out);
  emit(o, f == PointFormat::json ? format_points_json(pts)
                                 : format_points_csv(pts));
  return kOk;
}

int cmd_build(const Options& o) {
  const auto c = run_config(Command::build, o, true);
  const auto pts = load_points(o);
  emit(o, format_edges_json(build_graph(c.family, pts, c.k)));
  return kOk;
}

int cmd_stretch(const Options& o) {
  const auto c = run_config(Command::stretch, o, true);
  const auto pts = load_points(o);
  const auto g = build_graph(c.family, pts, c.k);
  const auto rep = stretch_factor(g, family_bound(c.family, c.k), c.tolerance);
  emit(o, format_stretch_report(rep, meta(o, "stretch", o.family, g.size())));
  return rep.bound_satisfied.value_or(true) ? kOk : kVerifyFailed;
}

int cmd_path(const Options& o) {
  const auto c = run_config(Command::path, o, true);
  const auto pts = load_points(o);
  if (c.family == Family::overlapping_yao) {
    if (c.k <= 24) throw ConfigError("greedy path needs k > 24");
    const auto oy = build_oy(pts, c.k);
    const int n = oy.size();
    if (o.from < 0 || o.from >= n || o.to < 0 || o.to >= n || o.from == o.to) {
      throw ConfigError("--from/--to must be distinct indices below " +
                        std::to_string(n));
    }
    const auto trace = oy_greedy_path(oy, o.from, o.to);
    emit(o, format_path_report(trace, meta(o, "path", o.family, n)));
    const double bound = tau_bound(c.k) * distance(pts[o.from], pts[o.to]);
    return trace.total_length <= bound * (1.0 + c.tolerance) ? kOk
                                                             : kVerifyFailed;
  }
  if (c.family == Family::trapezoidal_yao) {
    const auto ty = build_ty(pts, c.k);
    const auto oy = build_oy(pts, c.k);
    const auto sels = ty_selections(pts, c.k);
    const auto found = harvest_descent_scenarios(
        ty, sels, static_cast<std::size_t>(o.scenario) + 1);
    if (o.scenario < 0 || static_cast<std::size_t>(o.scenario) >= found.size()) {
      throw ConfigError("no descent configuration #" +
                        std::to_string(o.scenario) + " in this point set (" +
                        std::to_string(found.size()) + " found)");
    }
    const auto& s = found[o.scenario];
    const auto trace = ty_descent_path(ty, oy, s.frame, s.start);
    emit(o, format_descent_report(trace, s.frame, s.start,
                                  meta(o, "path", o.family, ty.size())));
    const bool ok = trace.path.total_length <= trace.bound * (1.0 + c.tolerance) &&
                    trace.max_phi_increase <= c.tolerance;
    return ok ? kOk : kVerifyFailed;
  }
  throw ConfigError("path supports --family oy (greedy) or ty (descent)");
}

int cmd_verify(const Options& o) {
  const auto c = run_config(Command::verify, o, false);
  VerifyConfig v;
  v.points = load_points(o);
  v.k = c.k;
  v.seed = o.seed;
  v.tolerance = c.tolerance;
  v.samples = o.samples;
  v.max_descent_scenarios = o.scenarios;
  if (!o.edges.empty()) {
    v.override_family = family_of(o.edges_family);
    v.override_edges = read_edges(o.edges, static_cast<int>(v.points.size()));
  }
  const auto report = run_verify(v);
  emit(o, format_verify_report(report, v, o.in.empty() ? "gen:" + o.kind : o.in));
  for (const auto& chk : report.checks) {
    if (!chk.skipped && !chk.passed) {
      std::cerr << "FAIL " << chk.name << ": "
                << (chk.witnesses.empty() ? chk.detail : chk.witnesses.front())
                << "\n";
    }
  }
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_render(const Options& o) {
  const auto c = run_config(Command::render, o, true);
  const auto pts = load_points(o);
  const auto g = build_graph(c.family, pts, c.k);
  RenderOptions ropt;
  ropt.title = o.family + " k=" + std::to_string(c.k);
  if (o.witness && g.size() >= 2) {
    const auto rep = stretch_factor(g);
    ropt.highlight_path =
        shortest_path_vertices(g, rep.witness.first, rep.witness.second);
  }
  emit(o, render_svg(pts, g.edges(), ropt));
  return kOk;
}

void add_points_flags(CLI::App* sub, Options& o) {
  sub->add_option("--in", o.in, "point file (.csv or .json); generated when absent");
  sub->add_option("--n", o.n, "generated point count");
  sub->add_option("--seed", o.seed, "generator seed");
  sub->add_option("--kind", o.kind, "uniform, grid, circle, clustered");
  sub->add_option("--side", o.side);
  sub->add_option("--pitch", o.pitch);
  sub->add_option("--radius", o.radius);
  sub->add_option("--jitter", o.jitter);
  sub->add_option("--clusters", o.clusters);
  sub->add_option("--spread", o.spread);
  sub->add_option("--out", o.out, "output path (stdout when absent)");
  sub->add_option("--format", o.format, "csv or json");
  sub->add_option("--tolerance", o.tolerance, "relative tolerance");
}

void add_graph_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "yao, yy, oy, ty");
  sub->add_option("--k", o.k, "number of cones");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone-based spanner construction and audit"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write a seeded point set");
  add_points_flags(gen, o);
  auto* build = app.add_subcommand("build", "write the edges of a cone graph");
  add_points_flags(build, o);
  add_graph_flags(build, o);
  auto* stretch = app.add_subcommand("stretch", "measure stretch against the family bound");
  add_points_flags(stretch, o);
  add_graph_flags(stretch, o);
  auto* path = app.add_subcommand("path", "greedy OY path or TY descent trace");
  add_points_flags(path, o);
  add_graph_flags(path, o);
  path->add_option("--from", o.from);
  path->add_option("--to", o.to);
  path->add_option("--scenario", o.scenario, "descent configuration index");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_points_flags(verify, o);
  add_graph_flags(verify, o);
  verify->add_option("--edges", o.edges, "edge list replacing one built graph");
  verify->add_option("--edges-family", o.edges_family, "family the edge list stands for");
  verify->add_option("--samples", o.samples);
  verify->add_option("--scenarios", o.scenarios, "descent configurations to audit");
  auto* render = app.add_subcommand("render", "draw a cone graph as SVG");
  add_points_flags(render, o);
  add_graph_flags(render, o);
  render->add_flag("--witness", o.witness, "highlight the stretch witness path");

  // verify has its own default parameter.
  verify->preparse_callback([&](std::size_t) { o.k = 30; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*build) return cmd_build(o);
    if (*stretch) return cmd_stretch(o);
    if (*path) return cmd_path(o);
    if (*verify) return cmd_verify(o);
    if (*render) return cmd_render(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const InvariantError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
