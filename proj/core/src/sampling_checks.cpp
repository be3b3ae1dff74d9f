#include "conespan/sampling_checks.hpp"

#include <cmath>
#include <string>

#include "conespan/random.hpp"

namespace conespan {
namespace {

Point rotate(Point w, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * w.x - s * w.y, s * w.x + c * w.y};
}

void require(bool ok, const std::string& clause) {
  if (!ok) throw PreconditionError("precondition violated: " + clause);
}

}  // namespace

SampleCheck covers_sector_check(double theta, double gamma,
                                std::size_t n_samples, std::uint64_t seed) {
  require(theta >= kPi / 4.0 - kAngleTol && theta < kPi / 3.0,
          "theta in [pi/4, pi/3)");
  require(gamma >= kPi / 2.0 - kAngleTol, "gamma >= pi/2");
  require(2.0 * theta >= gamma - kAngleTol, "2*theta >= gamma");

  Rng rng(seed);
  SampleCheck result;
  while (result.samples < n_samples) {
    const double r = std::sqrt(uniform01(rng));
    const double a = gamma * uniform01(rng);
    if (r == 0.0 || a == 0.0) continue;
    ++result.samples;
    const Point w{r * std::cos(a), r * std::sin(a)};
    if (in_unit_trapezoid(w, theta)) continue;
    const Point back = rotate(w, -gamma);
    if (in_unit_trapezoid({back.x, -back.y}, theta)) continue;
    result.passed = false;
    result.counterexample = w;
    break;
  }
  return result;
}

SampleCheck lhp_containment_check(Point u, Point v, double theta,
                                  std::size_t n_samples, std::uint64_t seed) {
  const Point o{0.0, 0.0};
  const Point p{1.0, 0.0};
  require(!(u == v), "u != v");
  require(u.y <= 0.0, "u in lower half-plane");
  require(v.y <= 0.0, "v in lower half-plane");
  require(u.x > 0.0 && u.x < 1.0, "0 < x_u < 1");
  const double phi_uv = polar_angle(u, v).radians();
  require(std::abs(phi_uv - kPi) < kPi / 6.0, "|phi(uv) - pi| < pi/6");
  const double uv = distance(u, v);
  const double ou = distance(o, u);
  const double pv = distance(p, v);
  require(ou >= uv && ou < 1.0, "|ou| in [|uv|, 1)");
  require(pv >= uv && pv < 1.0, "|pv| in [|uv|, 1)");
  require(theta >= kPi / 4.0 - kAngleTol && theta <= kPi / 3.0,
          "theta in [pi/4, pi/3]");

  Rng rng(seed);
  const double height = std::sin(theta);
  SampleCheck result;
  while (result.samples < n_samples) {
    const Point local{uniform01(rng), height * uniform01(rng)};
    if (!in_unit_trapezoid(local, theta)) continue;
    ++result.samples;
    const Point w = u + uv * rotate({local.x, -local.y}, phi_uv);
    if (in_unit_trapezoid(w, theta) || w.y <= kRelTol) continue;
    result.passed = false;
    result.counterexample = w;
    break;
  }
  return result;
}

std::pair<Point, Point> sample_lhp_pair(std::uint64_t seed) {
  Rng rng(seed);
  const Point o{0.0, 0.0};
  const Point p{1.0, 0.0};
  for (;;) {
    const Point u{uniform01(rng), -0.5 * uniform01(rng)};
    const double dir = kPi + (kPi / 6.0) * (2.0 * uniform01(rng) - 1.0);
    const double len = uniform01(rng);
    const Point v = u + len * Point{std::cos(dir), std::sin(dir)};
    if (len <= 0.0 || u.x <= 0.0 || v.y > 0.0) continue;
    if (std::abs(polar_angle(u, v).radians() - kPi) >= kPi / 6.0) continue;
    const double uv = distance(u, v);
    const double ou = distance(o, u);
    const double pv = distance(p, v);
    if (ou < uv || ou >= 1.0 || pv < uv || pv >= 1.0) continue;
    return {u, v};
  }
}

}  // namespace conespan
