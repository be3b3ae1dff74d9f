#pragma once

// Slow reference implementations shared by the unit tests and the acceptance
// runner. None of these call into the library's construction code.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "conespan/geometry.hpp"

namespace oracle {

using conespan::Point;
using Big = boost::multiprecision::cpp_dec_float_50;
using EdgeSet = std::set<std::pair<int, int>>;

inline Big big_pi() { return boost::math::constants::pi<Big>(); }

inline Big tau(int k) {
  using boost::multiprecision::sin;
  return Big(1) / (Big(1) - 2 * sin(big_pi() / k + big_pi() / 8));
}

// theta(2k) for the Yao-Yao bound: ceil(2k/8) cones of width 2pi/(2k).
inline Big theta2k(int k) {
  const int cones = (2 * k + 7) / 8;
  return 2 * big_pi() * cones / (2 * k);
}

inline Big tau_prime(int k) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  using boost::multiprecision::tan;
  const Big t2 = tau(2 * k);
  const Big first = Big(1) / ((Big(1) - (2 * t2 + 1) * tan(big_pi() / k)) *
                              cos(theta2k(k) + big_pi() / k));
  const Big second = Big(1) / (Big(1) - 2 * t2 * sin(big_pi() / (2 * k)));
  return first > second ? first : second;
}

inline Big t_k(int k) { return tau_prime(k) * tau(2 * k); }

inline Big t_limit() {
  using boost::multiprecision::sin;
  using boost::multiprecision::sqrt;
  return sqrt(Big(2)) / (Big(1) - 2 * sin(big_pi() / 8));
}

inline double rel_err(double got, const Big& want) {
  const Big diff = (Big(got) - want) / want;
  return std::abs(diff.convert_to<double>());
}

// --- trapezoid membership -------------------------------------------------

struct Placement {
  Point apex;
  double orientation = 0.0;
  bool reflected = false;
  double theta = 0.0;
};

// Local coordinates by explicit rotation, then mirror.
inline Point local_of(const Placement& p, Point w) {
  const double dx = w.x - p.apex.x;
  const double dy = w.y - p.apex.y;
  const double c = std::cos(p.orientation);
  const double s = std::sin(p.orientation);
  const double x = c * dx + s * dy;
  const double y = -s * dx + c * dy;
  return {x, p.reflected ? -y : y};
}

// Closed unit curved trapezoid scaled by lambda.
inline bool in_closed(Point l, double lambda, double theta) {
  const double x = l.x / lambda;
  const double y = l.y / lambda;
  // |(x-1, y)| <= 1 written as x^2 + y^2 <= 2x: no cancellation near the apex.
  const double r2 = x * x + y * y;
  return y >= 0.0 && y <= std::sin(theta) && r2 <= 1.0 && r2 <= 2.0 * x;
}

// Smallest lambda whose closed trapezoid holds w, by bisection; nullopt if w
// is never reached.
inline std::optional<double> bisect_lambda(const Placement& p, Point w,
                                           int iterations = 200) {
  const Point l = local_of(p, w);
  const double d = std::hypot(l.x, l.y);
  if (l.x <= 0.0 || l.y < 0.0) return std::nullopt;
  double lo = d * (1.0 - 1e-12);
  double hi = d;
  while (!in_closed(l, hi, p.theta)) {
    hi *= 2.0;
    if (hi > d * 1e12) return std::nullopt;
  }
  for (int i = 0; i < iterations && hi - lo > hi * 1e-16; ++i) {
    const double mid = 0.5 * (lo + hi);
    (in_closed(l, mid, p.theta) ? hi : lo) = mid;
  }
  return hi;
}

// --- naive graph constructions --------------------------------------------

inline double angle_of(Point u, Point w) {
  double a = std::atan2(w.y - u.y, w.x - u.x);
  if (a < 0.0) a += 2.0 * M_PI;
  return a;
}

inline int naive_cone(Point u, Point w, int k) {
  const int c = static_cast<int>(std::floor(angle_of(u, w) / (2.0 * M_PI / k)));
  return std::min(c, k - 1);
}

// Nearest point per cone; for generic input (no ties, nothing on a boundary).
inline EdgeSet yao(const std::vector<Point>& pts, int k) {
  EdgeSet out;
  const int n = static_cast<int>(pts.size());
  for (int u = 0; u < n; ++u) {
    std::vector<int> best(k, -1);
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      const int c = naive_cone(pts[u], pts[w], k);
      if (best[c] < 0 || conespan::distance(pts[u], pts[w]) <
                             conespan::distance(pts[u], pts[best[c]])) {
        best[c] = w;
      }
    }
    for (int c = 0; c < k; ++c) {
      if (best[c] >= 0) out.insert({u, best[c]});
    }
  }
  return out;
}

// Keep, per head and per cone around the head, only the shortest incoming
// Yao edge.
inline EdgeSet yao_yao(const std::vector<Point>& pts, int k) {
  const EdgeSet y = yao(pts, k);
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> best(n, std::vector<int>(k, -1));
  for (const auto& [u, v] : y) {
    const int c = naive_cone(pts[v], pts[u], k);
    int& b = best[v][c];
    if (b < 0 || conespan::distance(pts[v], pts[u]) <
                     conespan::distance(pts[v], pts[b])) {
      b = u;
    }
  }
  EdgeSet out;
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < k; ++c) {
      if (best[v][c] >= 0) out.insert({best[v][c], v});
    }
  }
  return out;
}

// Nearest point in each widened cone [2 pi j / k, 2 pi j / k + gamma).
inline EdgeSet overlapping_yao(const std::vector<Point>& pts, int k) {
  const int span = (k + 3) / 4;
  EdgeSet out;
  const int n = static_cast<int>(pts.size());
  for (int u = 0; u < n; ++u) {
    for (int j = 0; j < k; ++j) {
      int best = -1;
      for (int w = 0; w < n; ++w) {
        if (w == u) continue;
        const int off = ((naive_cone(pts[u], pts[w], k) - j) % k + k) % k;
        if (off >= span) continue;
        if (best < 0 || conespan::distance(pts[u], pts[w]) <
                            conespan::distance(pts[u], pts[best])) {
          best = w;
        }
      }
      if (best >= 0) out.insert({u, best});
    }
  }
  return out;
}

// Grow each of the 2k trapezoids by bisection and keep the first contact
// when it lies on the critical arc (distance equals the dilation).
inline EdgeSet trapezoidal_yao(const std::vector<Point>& pts, int k) {
  const double th = 2.0 * M_PI * ((k + 7) / 8) / k;
  EdgeSet out;
  const int n = static_cast<int>(pts.size());
  for (int u = 0; u < n; ++u) {
    for (int j = 0; j < k; ++j) {
      for (const bool refl : {false, true}) {
        const Placement p{pts[u], 2.0 * M_PI * j / k, refl, th};
        int best = -1;
        double best_l = std::numeric_limits<double>::infinity();
        for (int w = 0; w < n; ++w) {
          if (w == u) continue;
          const auto l = bisect_lambda(p, pts[w]);
          if (l && *l < best_l) {
            best_l = *l;
            best = w;
          }
        }
        if (best >= 0 &&
            conespan::distance(pts[u], pts[best]) >= best_l * (1.0 - 1e-9)) {
          out.insert({u, best});
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
