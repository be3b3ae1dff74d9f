#include <gtest/gtest.h>

#include "conespan/analysis.hpp"
#include "conespan/generate.hpp"
#include "conespan/graph_build.hpp"
#include "oracles.hpp"

using namespace conespan;

namespace {

std::vector<Point> uniform_points(int n, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.seed = seed;
  return gen_points(spec);
}

oracle::EdgeSet as_set(const ConeGraph& g) {
  oracle::EdgeSet s;
  for (const auto& e : g.edges()) s.insert({e.tail, e.head});
  return s;
}

std::vector<Point> grid_points(int side) {
  GenSpec spec;
  spec.kind = GenKind::grid;
  spec.n = side * side;
  return gen_points(spec);
}

}  // namespace

TEST(Family, NamesRoundTrip) {
  for (const auto f : {Family::yao, Family::yao_yao, Family::overlapping_yao,
                       Family::trapezoidal_yao}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("theta").has_value());
}

TEST(ConeGraph, SortsDedupsAndRecomputesLengths) {
  const std::vector<Point> pts{{0, 0}, {3, 4}, {1, 0}};
  const ConeGraph g(pts, 4, Family::yao, {{1, 0, 99.0}, {0, 1, 0.0}, {0, 1, 0.0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0].tail, 0);
  EXPECT_DOUBLE_EQ(g.edges()[0].length, 5.0);
  EXPECT_DOUBLE_EQ(g.edges()[1].length, 5.0);
  EXPECT_TRUE(g.contains(1, 0));
  EXPECT_FALSE(g.contains(0, 2));
  EXPECT_EQ(g.out_edges(2).size(), 0u);
  EXPECT_FALSE(g.without_edge(0, 1).contains(0, 1));
}

TEST(ConeGraph, RejectsBadEdges) {
  const std::vector<Point> pts{{0, 0}, {1, 0}};
  EXPECT_THROW(ConeGraph(pts, 4, Family::yao, {{0, 0, 0}}), PreconditionError);
  EXPECT_THROW(ConeGraph(pts, 4, Family::yao, {{0, 2, 0}}), PreconditionError);
}

TEST(Points, RejectsDuplicatesAndNonFinite) {
  const std::vector<Point> dup{{0, 0}, {1, 1}, {0, 0}};
  EXPECT_THROW(build_yao(dup, 8), PreconditionError);
  const std::vector<Point> bad{{0, 0}, {NAN, 1}};
  EXPECT_THROW(validate_points(bad), PreconditionError);
}

TEST(Yao, TwoPointsGiveTwoEdges) {
  const std::vector<Point> pts{{0, 0}, {1, 0}};
  const auto g = build_yao(pts, 8);
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_TRUE(g.contains(0, 1));
  EXPECT_TRUE(g.contains(1, 0));
}

TEST(Yao, EmptyAndSingleton) {
  EXPECT_TRUE(build_yao(std::vector<Point>{}, 6).edges().empty());
  EXPECT_TRUE(build_yao(std::vector<Point>{{2, 2}}, 6).edges().empty());
}

class NaiveOracle : public ::testing::TestWithParam<int> {};

TEST_P(NaiveOracle, YaoAndYaoYaoMatch) {
  const int k = GetParam();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto pts = uniform_points(60, seed);
    EXPECT_EQ(as_set(build_yao(pts, k)), oracle::yao(pts, k)) << "seed " << seed;
    EXPECT_EQ(as_set(build_yao_yao(pts, k)), oracle::yao_yao(pts, k))
        << "seed " << seed;
    EXPECT_EQ(as_set(build_oy(pts, k)), oracle::overlapping_yao(pts, k))
        << "seed " << seed;
  }
}

INSTANTIATE_TEST_SUITE_P(Ks, NaiveOracle, ::testing::Values(3, 5, 8, 13, 26, 30));

TEST(TrapezoidalYao, MatchesBisectionOracle) {
  for (const int k : {25, 26, 33}) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      const auto pts = uniform_points(30, seed * 7);
      EXPECT_EQ(as_set(build_ty(pts, k)), oracle::trapezoidal_yao(pts, k))
          << "k=" << k << " seed " << seed;
    }
  }
}

TEST(TrapezoidalYao, NeedsEnoughCones) {
  const auto pts = uniform_points(10, 1);
  EXPECT_THROW(build_ty(pts, 24), PreconditionError);
  EXPECT_NO_THROW(build_ty(pts, 25));
  EXPECT_NO_THROW(build_ty(pts, 88));
}

TEST(TrapezoidalYao, SelectionsCarryCriticalHits) {
  const auto pts = uniform_points(40, 3);
  const int k = 30;
  const auto g = build_ty(pts, k);
  const auto sels = ty_selections(pts, k);
  ASSERT_FALSE(sels.empty());
  for (const auto& s : sels) {
    EXPECT_TRUE(g.contains(s.tail, s.head));
    const auto hit = scale_to_hit(ty_frame(pts[s.tail], k, s.cone, s.reflected),
                                  pts[s.head]);
    EXPECT_EQ(hit.part, HitPart::critical_arc);
    EXPECT_EQ(hit.lambda, distance(pts[s.tail], pts[s.head]));
  }
  oracle::EdgeSet from_sels;
  for (const auto& s : sels) from_sels.insert({s.tail, s.head});
  EXPECT_EQ(from_sels, as_set(g));
}

TEST(Subgraphs, HoldOnRandomSets) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto pts = uniform_points(120, seed);
    for (const int k : {26, 30, 41}) {
      EXPECT_TRUE(subgraph_check(build_yao_yao(pts, k), build_yao(pts, k)).ok);
      EXPECT_TRUE(subgraph_check(build_oy(pts, k), build_ty(pts, k)).ok)
          << "k=" << k << " seed " << seed;
    }
  }
}

// Lattices put many points exactly on cone boundaries and at equal distances,
// which is where the shared tie-break matters.
TEST(Subgraphs, HoldOnLatticesWithTies) {
  for (const int side : {5, 8}) {
    const auto pts = grid_points(side);
    for (const int k : {26, 28, 32, 40, 48}) {
      const auto oy = build_oy(pts, k);
      const auto ty = build_ty(pts, k);
      const auto check = subgraph_check(oy, ty);
      EXPECT_TRUE(check.ok) << "side " << side << " k=" << k << ", "
                            << check.violations.size() << " violations";
      EXPECT_TRUE(subgraph_check(build_yao_yao(pts, k), build_yao(pts, k)).ok);
    }
  }
}

TEST(Subgraphs, HoldOnCoCircularPoints) {
  GenSpec spec;
  spec.kind = GenKind::co_circular;
  spec.n = 64;
  const auto pts = gen_points(spec);
  for (const int k : {26, 32, 64}) {
    EXPECT_TRUE(subgraph_check(build_oy(pts, k), build_ty(pts, k)).ok) << k;
  }
}

TEST(YaoYao, DegreeAndConnectivity) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto pts = uniform_points(150, seed);
    for (const int k : {7, 8, 30}) {
      const auto yy = build_yao_yao(pts, k);
      EXPECT_LE(degree_stats(yy).max_degree, 2 * k);
      EXPECT_TRUE(is_connected(yy)) << "k=" << k << " seed " << seed;
    }
  }
}

TEST(Yao, OutDegreeAtMostK) {
  const auto pts = uniform_points(100, 4);
  for (const int k : {4, 9, 30}) {
    for (const auto& g : {build_yao(pts, k), build_oy(pts, k)}) {
      for (int u = 0; u < g.size(); ++u) {
        EXPECT_LE(static_cast<int>(g.out_edges(u).size()), k);
      }
    }
  }
}

TEST(Build, DispatchesByFamilyAndIsDeterministic) {
  const auto pts = uniform_points(50, 9);
  for (const auto f : {Family::yao, Family::yao_yao, Family::overlapping_yao,
                       Family::trapezoidal_yao}) {
    const auto a = build_graph(f, pts, 30);
    const auto b = build_graph(f, pts, 30);
    EXPECT_EQ(a.family(), f);
    EXPECT_EQ(a.edges(), b.edges());
  }
}
