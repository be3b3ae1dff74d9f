#include <gtest/gtest.h>

#include <cmath>

#include "conespan/analysis.hpp"
#include "conespan/generate.hpp"
#include "conespan/random.hpp"
#include "oracles.hpp"

using namespace conespan;

namespace {

std::vector<Point> uniform_points(int n, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  return gen_points(spec);
}

}  // namespace

// ---- bound formulas --------------------------------------------------------

TEST(Bounds, MatchFiftyDigitOracle) {
  for (const int k : {26, 42, 84, 1000}) {
    EXPECT_LT(oracle::rel_err(tau_bound(k), oracle::tau(k)), 1e-12) << k;
    if (k < 42) continue;
    EXPECT_LT(oracle::rel_err(tau_prime_bound(k), oracle::tau_prime(k)), 1e-12)
        << k;
    const auto t = t_bound(k);
    EXPECT_LT(oracle::rel_err(t.t_k, oracle::t_k(k)), 1e-12) << k;
    EXPECT_LT(oracle::rel_err(t.tau_2k, oracle::tau(2 * k)), 1e-12) << k;
    EXPECT_LT(oracle::rel_err(t.theta_2k, oracle::theta2k(k)), 1e-14) << k;
  }
}

// Values from an independent mpmath evaluation at 50 digits.
TEST(Bounds, PinnedReferenceValues) {
  EXPECT_NEAR(tau_bound(26) / 57.172986221141215, 1.0, 1e-13);
  EXPECT_NEAR(tau_bound(42) / 10.132733909966240, 1.0, 1e-13);
  EXPECT_NEAR(tau_bound(84) / 6.0212513632311386, 1.0, 1e-13);
  EXPECT_NEAR(tau_bound(1000) / 4.3700178843176198, 1.0, 1e-13);
  EXPECT_NEAR(tau_prime_bound(42) / 70.969383435863589, 1.0, 1e-12);
  EXPECT_NEAR(tau_prime_bound(1000) / 1.4629398072426380, 1.0, 1e-13);
  EXPECT_NEAR(t_bound(42).t_k / 427.32449676086703, 1.0, 1e-12);
  EXPECT_NEAR(t_bound(50).t_k / 39.212658366543351, 1.0, 1e-12);
  EXPECT_NEAR(t_bound(84).t_k / 12.471106681903453, 1.0, 1e-13);
  EXPECT_NEAR(t_bound(1000).t_k / 6.3130778596940009, 1.0, 1e-13);
  EXPECT_NEAR(t_bound_limit() / 6.0273394921258485, 1.0, 1e-14);
}

TEST(Bounds, DomainChecks) {
  EXPECT_THROW(tau_bound(24), PreconditionError);
  EXPECT_NO_THROW(tau_bound(25));
  EXPECT_THROW(tau_prime_bound(41), PreconditionError);
  EXPECT_THROW(t_bound(41), PreconditionError);
}

TEST(Bounds, TauDecreasesTowardLimit) {
  const double limit = 1.0 / (1.0 - 2.0 * std::sin(kPi / 8));
  for (int k = 25; k < 3000; ++k) {
    EXPECT_GT(tau_bound(k), tau_bound(k + 1)) << k;
    EXPECT_GT(tau_bound(k), limit);
  }
}

TEST(Bounds, ConvergesToLimit) {
  EXPECT_LT(std::abs(t_bound(1000000).t_k - t_bound_limit()), 0.01);
  EXPECT_NEAR(t_bound_limit(), 6.0273, 1e-4);
}

// ceil(2k/8) in theta(2k) makes t_k jump; along k = 0 mod 4 it decreases.
TEST(Bounds, DecreasingAlongMultiplesOfFour) {
  for (int k = 44; k < 4000; k += 4) {
    EXPECT_GT(t_bound(k).t_k, t_bound(k + 4).t_k) << k;
  }
}

TEST(Bounds, NotMonotoneAtEveryStep) {
  EXPECT_GT(t_bound(61).t_k, t_bound(60).t_k);
}

TEST(Bounds, FirstTermDominatesNearThreshold) {
  const double t2 = tau_bound(84);
  const double first = 1.0 / ((1.0 - (2 * t2 + 1) * std::tan(kPi / 42)) *
                              std::cos(theta(84) + kPi / 42));
  const double second = 1.0 / (1.0 - 2 * t2 * std::sin(kPi / 84));
  EXPECT_GT(first, 30.0 * second);
  EXPECT_NEAR(tau_prime_bound(42) / first, 1.0, 1e-9);
}

// ---- shortest paths and stretch -------------------------------------------

TEST(Stretch, SquareWithOneDiagonalMissing) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const ConeGraph g(pts, 4, Family::yao,
                    {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 0, 0}});
  const auto rep = stretch_factor(g);
  EXPECT_NEAR(rep.stretch, 2.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(rep.witness, std::make_pair(0, 2));
  EXPECT_TRUE(rep.connected);
  EXPECT_EQ(rep.max_degree, 2);
}

TEST(Stretch, DisconnectedIsInfinite) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {5, 5}};
  const ConeGraph g(pts, 4, Family::yao, {{0, 1, 0}});
  const auto rep = stretch_factor(g, 2.0);
  EXPECT_TRUE(std::isinf(rep.stretch));
  EXPECT_FALSE(rep.connected);
  EXPECT_FALSE(*rep.bound_satisfied);
  EXPECT_FALSE(is_connected(g));
}

TEST(Stretch, NeedsTwoPoints) {
  const ConeGraph g(std::vector<Point>{{0, 0}}, 4, Family::yao, {});
  EXPECT_THROW(stretch_factor(g), PreconditionError);
}

TEST(Stretch, AgreesWithFloydWarshall) {
  const std::pair<Family, int> cases[] = {{Family::yao, 6},
                                          {Family::yao_yao, 8},
                                          {Family::overlapping_yao, 26},
                                          {Family::trapezoidal_yao, 26}};
  for (const auto& [family, k] : cases) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto pts = uniform_points(8, seed);
      const auto g = build_graph(family, pts, k);
      const double fw = brute_force_stretch(pts, g.edges());
      const double sp = stretch_factor(g).stretch;
      if (std::isinf(fw)) {
        EXPECT_TRUE(std::isinf(sp));
      } else {
        EXPECT_NEAR(sp / fw, 1.0, 1e-9) << to_string(family) << " seed " << seed;
      }
    }
  }
}

TEST(Stretch, PathVerticesRealizeDistance) {
  const auto pts = uniform_points(80, 2);
  const auto g = build_yao_yao(pts, 9);
  const auto d = shortest_paths(g, 0);
  for (int t = 1; t < g.size(); t += 7) {
    const auto path = shortest_path_vertices(g, 0, t);
    ASSERT_GE(path.size(), 2u);
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      EXPECT_TRUE(g.contains(path[i], path[i + 1]) ||
                  g.contains(path[i + 1], path[i]));
      len += distance(pts[path[i]], pts[path[i + 1]]);
    }
    EXPECT_NEAR(len, d[t], 1e-12);
  }
}

TEST(Degree, HistogramCountsUndirectedSupport) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}};
  const ConeGraph g(pts, 4, Family::yao, {{0, 1, 0}, {1, 0, 0}, {0, 2, 0}});
  const auto d = degree_stats(g);
  EXPECT_EQ(d.max_degree, 2);
  EXPECT_EQ(d.histogram, (std::vector<int>{0, 2, 1}));
}

TEST(Subgraph, RejectsDifferentPointSets) {
  const auto a = build_yao(uniform_points(5, 1), 6);
  const auto b = build_yao(uniform_points(5, 2), 6);
  EXPECT_THROW(subgraph_check(a, b), PreconditionError);
  const auto c = subgraph_check(a.without_edge(0, a.out_edges(0)[0].head), a);
  EXPECT_TRUE(c.ok);
  const auto d = subgraph_check(a, a.without_edge(0, a.out_edges(0)[0].head));
  EXPECT_FALSE(d.ok);
  ASSERT_EQ(d.violations.size(), 1u);
}

// ---- ratio lemma -----------------------------------------------------------

TEST(Ratio, OracleDomain) {
  EXPECT_THROW(ratio_oracle({0, 0}, {1, 0}, {0.5, 0.1}, 0.5), PreconditionError);
  EXPECT_THROW(ratio_oracle({0, 0}, {1, 0}, {0.5, 0.1}, 3.0), PreconditionError);
  EXPECT_THROW(ratio_oracle({0, 0}, {1, 0}, {1.2, 0.1}, 1.0), PreconditionError);
  EXPECT_DOUBLE_EQ(ratio_oracle({0, 0}, {1, 0}, {1, 0}, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(ratio_oracle({0, 0}, {1, 0}, {0.5, 0}, 1.0), 1.0);
}

TEST(Ratio, SectorSamplingStaysUnderBound) {
  for (const double alpha : {kPi / 12, kPi / 6, kPi / 4}) {
    const auto s = sample_sector_ratio(alpha, 10000, 5);
    EXPECT_LE(s.max_ratio, sector_ratio_bound(alpha) * (1 + 1e-12));
    EXPECT_GT(s.max_ratio, 0.9 * sector_ratio_bound(alpha));
  }
  EXPECT_THROW(sector_ratio_bound(kPi / 3), PreconditionError);
}

TEST(Ratio, BoundAttainedAtSectorCorner) {
  const double alpha = kPi / 6;
  const Point corner{std::cos(alpha), std::sin(alpha)};
  EXPECT_NEAR(ratio_oracle({0, 0}, {1, 0}, corner, 1.0),
              sector_ratio_bound(alpha), 1e-12);
}

// Restricting w to one-parameter families, the maximum sits at the predicted
// extreme position.
class RatioCases : public ::testing::Test {
 protected:
  static constexpr double kAlpha = kPi / 4;
  const Point u{0, 0};
  const Point v{1, 0};

  bool in_region(Point w) const {
    return norm(w) <= 1.0 && std::abs(std::atan2(w.y, w.x)) <= kAlpha;
  }

  // Largest s in [0, hi] with base + s*dir in the sector, by bisection.
  double reach(Point base, Point dir, double hi) const {
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (in_region(base + mid * dir) ? lo : hi) = mid;
    }
    return lo;
  }
};

TEST_F(RatioCases, ArcAroundUPeaksAtLargestVw) {
  for (const double r : {0.3, 0.6, 0.95}) {
    double best = -1, best_vw = 0, max_vw = 0;
    for (int i = 0; i <= 2000; ++i) {
      const double a = -kAlpha + 2 * kAlpha * i / 2000.0;
      const Point w{r * std::cos(a), r * std::sin(a)};
      const double vw = distance(v, w);
      max_vw = std::max(max_vw, vw);
      const double q = ratio_oracle(u, v, w, 1.0);
      if (q > best) {
        best = q;
        best_vw = vw;
      }
    }
    EXPECT_NEAR(best_vw, max_vw, 1e-9) << "r=" << r;
  }
}

TEST_F(RatioCases, RayFromVPeaksAtLargestVw) {
  for (const double beta : {0.05, 0.3, 0.6}) {
    const Point dir{-std::cos(beta), std::sin(beta)};
    const double smax = reach(v, dir, 1.0);
    double best = -1, best_s = 0;
    for (int i = 1; i <= 2000; ++i) {
      const double s = smax * i / 2000.0;
      const double q = ratio_oracle(u, v, v + s * dir, 1.0);
      if (q > best) {
        best = q;
        best_s = s;
      }
    }
    EXPECT_NEAR(best_s, smax, smax * 1e-9) << "beta=" << beta;
  }
}

TEST_F(RatioCases, RayFromUPeaksAtAnEnd) {
  for (const double a : {-0.7, -0.2, 0.1, 0.5}) {
    const Point dir{std::cos(a), std::sin(a)};
    const double smin = 0.05;
    const double smax = reach(u, dir, 1.0);
    double best = -1, best_s = 0;
    for (int i = 0; i <= 2000; ++i) {
      const double s = smin + (smax - smin) * i / 2000.0;
      const double q = ratio_oracle(u, v, s * dir, 1.0);
      if (q > best) {
        best = q;
        best_s = s;
      }
    }
    const double eps = 1e-9 * smax;
    EXPECT_TRUE(std::abs(best_s - smax) < eps || std::abs(best_s - smin) < eps)
        << "a=" << a << " argmax s=" << best_s;
  }
}
