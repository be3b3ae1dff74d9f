#include "conespan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "conespan/analysis.hpp"
#include "conespan/io.hpp"
#include "conespan/sampling_checks.hpp"
#include "conespan/span_paths.hpp"
#include "json.hpp"

namespace conespan {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxWitnesses = 20;

std::string edge_name(int tail, int head) {
  return std::to_string(tail) + "->" + std::to_string(head);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void witness(CheckResult& check, std::string text) {
  check.passed = false;
  if (check.witnesses.size() < kMaxWitnesses) {
    check.witnesses.push_back(std::move(text));
  }
}

CheckResult skipped(std::string name, std::string why) {
  CheckResult c;
  c.name = std::move(name);
  c.skipped = true;
  c.detail = std::move(why);
  return c;
}

CheckResult subgraph(std::string name, const ConeGraph& inner,
                     const ConeGraph& outer) {
  CheckResult c;
  c.name = std::move(name);
  const auto sub = subgraph_check(inner, outer);
  for (const auto& e : sub.violations) {
    witness(c, "edge " + edge_name(e.tail, e.head) + " missing");
  }
  c.detail = std::to_string(inner.edges().size()) + " edges, " +
             std::to_string(sub.violations.size()) + " violations";
  return c;
}

CheckResult stretch_check(std::string name, const ConeGraph& g,
                          std::optional<double> bound, double tol) {
  if (!bound) return skipped(std::move(name), "no bound for this parameter");
  CheckResult c;
  c.name = std::move(name);
  c.tolerance = tol;
  const auto rep = stretch_factor(g, bound, tol);
  c.detail = "stretch " + fmt(rep.stretch) + " bound " + fmt(*bound);
  if (!rep.bound_satisfied.value_or(false)) {
    witness(c, "pair " + std::to_string(rep.witness.first) + "," +
                   std::to_string(rep.witness.second) + " stretch " +
                   fmt(rep.stretch));
  }
  return c;
}

CheckResult empty_interior(const ConeGraph& ty,
                           std::span<const TySelection> sels, double tol) {
  CheckResult c;
  c.name = "ty.empty_interior";
  c.tolerance = tol;
  const auto& pts = ty.points();
  for (const auto& s : sels) {
    const auto frame = ty_frame(pts[s.tail], ty.k(), s.cone, s.reflected);
    const double d = distance(pts[s.tail], pts[s.head]);
    for (int w = 0; w < ty.size(); ++w) {
      if (w == s.tail || w == s.head) continue;
      const auto hit = scale_to_hit(frame, pts[w]);
      if (hit.part != HitPart::none && hit.lambda < d * (1.0 - tol)) {
        witness(c, "edge " + edge_name(s.tail, s.head) + " cone " +
                       std::to_string(s.cone) + " holds point " +
                       std::to_string(w));
      }
    }
  }
  c.detail = std::to_string(sels.size()) + " selections";
  return c;
}

CheckResult greedy_check(const ConeGraph& oy, double tol) {
  CheckResult c;
  c.name = "path.oy_greedy";
  c.tolerance = tol;
  const double tau = tau_bound(oy.k());
  const auto& pts = oy.points();
  double worst = 0.0;
  for (int u = 0; u < oy.size(); ++u) {
    for (int v = 0; v < oy.size(); ++v) {
      if (u == v) continue;
      const double d = distance(pts[u], pts[v]);
      try {
        const auto trace = oy_greedy_path(oy, u, v);
        worst = std::max(worst, trace.total_length / d);
        if (trace.total_length > tau * d * (1.0 + tol)) {
          witness(c, "pair " + std::to_string(u) + "," + std::to_string(v) +
                         " ratio " + fmt(trace.total_length / d));
        }
      } catch (const InvariantError& e) {
        witness(c, "pair " + std::to_string(u) + "," + std::to_string(v) +
                       ": " + e.what());
      }
    }
  }
  c.detail = "max ratio " + fmt(worst) + " bound " + fmt(tau);
  return c;
}

CheckResult descent_check(const ConeGraph& ty, const ConeGraph& oy,
                          std::span<const TySelection> sels, std::size_t limit,
                          double tol) {
  CheckResult c;
  c.name = "descent.potential";
  c.tolerance = tol;
  const auto scenarios = harvest_descent_scenarios(ty, sels, limit);
  double worst_rise = -std::numeric_limits<double>::infinity();
  for (const auto& s : scenarios) {
    const std::string where = "apex " + std::to_string(s.frame.apex) +
                              " cone " + std::to_string(s.frame.cone) +
                              (s.frame.reflected ? "r" : "") + " start " +
                              std::to_string(s.start);
    try {
      const auto t = ty_descent_path(ty, oy, s.frame, s.start);
      worst_rise = std::max(worst_rise, t.max_phi_increase);
      if (t.path.total_length > t.bound * (1.0 + tol)) {
        witness(c, where + ": length " + fmt(t.path.total_length) +
                       " exceeds " + fmt(t.bound));
      }
      if (t.max_phi_increase > tol) {
        witness(c, where + ": potential rose by " + fmt(t.max_phi_increase));
      }
      if (!t.stayed_in_lower_half) witness(c, where + ": left lower half");
      if (!t.edges_shorter_than_start) {
        witness(c, where + ": an edge is not shorter than |oa|");
      }
    } catch (const std::exception& e) {
      witness(c, where + ": " + e.what());
    }
  }
  c.detail = std::to_string(scenarios.size()) + " scenarios, max step rise " +
             (scenarios.empty() ? std::string("n/a") : fmt(worst_rise));
  return c;
}

CheckResult from_sample(std::string name, const SampleCheck& s,
                        std::string detail) {
  CheckResult c;
  c.name = std::move(name);
  c.tolerance = kRelTol;
  c.detail = std::move(detail) + ", " + std::to_string(s.samples) + " samples";
  if (!s.passed && s.counterexample) {
    witness(c, "point (" + fmt(s.counterexample->x) + ", " +
                   fmt(s.counterexample->y) + ")");
  }
  return c;
}

}  // namespace

std::optional<double> family_bound(Family family, int k) {
  switch (family) {
    case Family::overlapping_yao:
    case Family::trapezoidal_yao:
      if (k > 24) return tau_bound(k);
      return std::nullopt;
    case Family::yao_yao:
      if (k % 2 == 0 && k / 2 >= 42) return t_bound(k / 2).t_k;
      return std::nullopt;
    case Family::yao:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> validate_run_config(const RunConfig& config) {
  std::vector<std::string> warnings;
  const bool uses_k = config.command != Command::gen;
  if (!(config.tolerance >= 0.0) || !std::isfinite(config.tolerance)) {
    throw ConfigError("--tolerance must be a finite value >= 0");
  }
  if (config.command == Command::gen || !config.input) {
    if (config.gen.n < 1) throw ConfigError("--n must be at least 1");
  }
  if (!uses_k) return warnings;
  if (config.k < 1) throw ConfigError("--k must be at least 1");
  if (config.command == Command::verify) {
    if (config.k <= 24) {
      throw ConfigError("verify runs trapezoidal Yao checks and needs k > 24, got k = " +
                        std::to_string(config.k));
    }
    return warnings;
  }
  switch (config.family) {
    case Family::trapezoidal_yao:
      if (config.k <= 24) {
        throw ConfigError("trapezoidal Yao needs k > 24, got k = " +
                          std::to_string(config.k));
      }
      break;
    case Family::overlapping_yao:
      if (config.k <= 24) {
        warnings.push_back("overlapping Yao with k <= 24 carries no stretch guarantee");
      }
      break;
    case Family::yao_yao:
      if (config.command == Command::stretch &&
          !(config.k % 2 == 0 && config.k >= 84)) {
        warnings.push_back("Yao-Yao bound check needs an even k >= 84; no bound applied");
      }
      break;
    case Family::yao:
      break;
  }
  return warnings;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.skipped || c.passed; });
}

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.k <= 24) {
    throw ConfigError("verify needs k > 24, got k = " + std::to_string(config.k));
  }
  if (config.points.size() < 2) {
    throw ConfigError("verify needs at least 2 points");
  }
  const int k = config.k;
  const double tol = config.tolerance;
  const auto& pts = config.points;

  auto graph_for = [&](Family f) {
    if (config.override_edges && config.override_family == f) {
      return ConeGraph(pts, k, f, *config.override_edges);
    }
    return build_graph(f, pts, k);
  };
  const ConeGraph yao = graph_for(Family::yao);
  const ConeGraph yy = graph_for(Family::yao_yao);
  const ConeGraph oy = graph_for(Family::overlapping_yao);
  const ConeGraph ty = graph_for(Family::trapezoidal_yao);
  const auto sels = ty_selections(pts, k);

  VerifyReport report;
  auto& out = report.checks;
  out.push_back(subgraph("subgraph.yy_in_yao", yy, yao));
  out.push_back(subgraph("subgraph.oy_in_ty", oy, ty));

  {
    CheckResult c;
    c.name = "degree.yy";
    const auto deg = degree_stats(yy);
    c.detail = "max degree " + std::to_string(deg.max_degree) + " limit " +
               std::to_string(2 * k);
    if (deg.max_degree > 2 * k) witness(c, c.detail);
    out.push_back(c);
  }
  {
    CheckResult c;
    c.name = "connectivity.yy";
    c.detail = is_connected(yy) ? "connected" : "disconnected";
    if (c.detail != "connected") witness(c, "Yao-Yao graph is disconnected");
    out.push_back(c);
  }

  out.push_back(stretch_check("stretch.oy", oy, family_bound(Family::overlapping_yao, k), tol));
  out.push_back(stretch_check("stretch.ty", ty, family_bound(Family::trapezoidal_yao, k), tol));
  out.push_back(stretch_check("stretch.yy", yy, family_bound(Family::yao_yao, k), tol));

  out.push_back(empty_interior(ty, sels, tol));
  out.push_back(greedy_check(oy, tol));
  out.push_back(descent_check(ty, oy, sels, config.max_descent_scenarios, tol));

  out.push_back(from_sample("sector_cover",
                            covers_sector_check(theta(k), gamma(k), config.samples,
                                                config.seed),
                            "theta " + fmt(theta(k)) + " gamma " + fmt(gamma(k))));
  {
    // Spread the sample budget over several independent (u, v) pairs.
    constexpr std::size_t kPairs = 10;
    CheckResult c;
    c.name = "containment";
    c.tolerance = kRelTol;
    std::size_t total = 0;
    for (std::size_t i = 0; i < kPairs; ++i) {
      const auto [u, v] = sample_lhp_pair(config.seed + i);
      const auto s = lhp_containment_check(u, v, theta(k),
                                           config.samples / kPairs + 1,
                                           config.seed + 1000 + i);
      total += s.samples;
      if (!s.passed && s.counterexample) {
        witness(c, "pair (" + fmt(u.x) + ", " + fmt(u.y) + ") (" + fmt(v.x) +
                       ", " + fmt(v.y) + ") point (" + fmt(s.counterexample->x) +
                       ", " + fmt(s.counterexample->y) + ")");
      }
    }
    c.detail = std::to_string(kPairs) + " pairs, " + std::to_string(total) +
               " samples";
    out.push_back(c);
  }
  {
    CheckResult c;
    c.name = "ratio_bound";
    c.tolerance = tol;
    std::ostringstream detail;
    for (const int div : {12, 6, 4}) {
      const double alpha = kPi / div;
      const auto s = sample_sector_ratio(alpha, config.samples / 10 + 1,
                                         config.seed + div);
      const double bound = sector_ratio_bound(alpha);
      detail << "pi/" << div << ": " << fmt(s.max_ratio) << " <= " << fmt(bound)
             << "; ";
      if (s.max_ratio > bound * (1.0 + tol)) {
        witness(c, "alpha pi/" + std::to_string(div) + " point (" +
                       fmt(s.argmax.x) + ", " + fmt(s.argmax.y) + ")");
      }
    }
    c.detail = detail.str();
    out.push_back(c);
  }
  return report;
}

std::string format_verify_report(const VerifyReport& report,
                                 const VerifyConfig& config,
                                 const std::string& input) {
  json doc;
  doc["command"] = "verify";
  doc["tool_version"] = tool_version();
  doc["k"] = config.k;
  doc["seed"] = config.seed;
  doc["n"] = config.points.size();
  doc["input"] = input;
  doc["tolerance"] = config.tolerance;
  doc["samples"] = config.samples;
  doc["path_model"] = "undirected";
  if (config.override_edges) {
    doc["edges_override"] = to_string(config.override_family);
  }
  doc["passed"] = report.passed();
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.skipped || c.passed},
                      {"skipped", c.skipped},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail},
                      {"witnesses", c.witnesses}});
  }
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

}  // namespace conespan
