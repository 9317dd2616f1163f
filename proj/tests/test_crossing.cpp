#include <gtest/gtest.h>

#include <cmath>

#include "spherecross/crossing.hpp"
#include "spherecross/drawings.hpp"
#include "spherecross/blowup_theory.hpp"
#include "test_util.hpp"

using namespace spherecross;
namespace tu = spherecross::testutil;

namespace {

std::vector<UnitVec> random_points(std::size_t n, RngStream& rng) {
  std::vector<UnitVec> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(tu::random_unit_vec(rng));
  return pts;
}

/// Crossing count via the public predicate only; the independent slow route.
std::int64_t slow_count(const BipartiteDrawing& d) {
  const std::size_t nb = d.partB.size();
  std::int64_t total = 0;
  for (std::size_t e1 = 0; e1 < d.num_edges(); ++e1)
    for (std::size_t e2 = e1 + 1; e2 < d.num_edges(); ++e2) {
      if (e1 / nb == e2 / nb || e1 % nb == e2 % nb) continue;
      total += segments_cross(d.edge(e1), d.edge(e2)) ? 1 : 0;
    }
  return total;
}

}  // namespace

TEST(Zarankiewicz, TableAndBranches) {
  const std::int64_t expect[9] = {0, 0, 0, 1, 4, 16, 36, 81, 144};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(zarankiewicz(n, n), expect[n]) << n;
  EXPECT_EQ(zarankiewicz(1, 1), 0);
  EXPECT_EQ(zarankiewicz(5, 5), 16);
  EXPECT_EQ(zarankiewicz(6, 6), 36);
  EXPECT_EQ(zarankiewicz(4, 6), 2 * 1 * 3 * 2);
  EXPECT_THROW(zarankiewicz(-1, 2), DomainError);
}

TEST(CountCrossings, SingleEdgeDrawing) {
  RngStream rng(200, 0);
  const auto d = random_bipartite_drawing(MeasureSpec::uniform(), MeasureSpec::uniform(), 1, rng);
  EXPECT_EQ(count_crossings(d), 0);
}

TEST(CountCrossings, AntipodalDrawingsMeetZarankiewicz) {
  for (std::size_t half : {1u, 2u, 3u}) {
    RngStream rng(201 + half, 0);
    const auto d = antipodal_drawing(random_points(half, rng), random_points(half, rng));
    const auto n = static_cast<std::int64_t>(2 * half);
    EXPECT_EQ(count_crossings(d), zarankiewicz(n, n)) << "n=" << n;
  }
}

TEST(CountCrossings, BlowupOfSizeOneKeepsTheFourBaseCrossings) {
  const auto cfg = BlowupConfig::random(210, 1, 1e-6);
  const auto d = blowup_drawing(cfg);
  EXPECT_EQ(d.num_edges(), 16u);
  EXPECT_EQ(slow_count(d), 4);  // brute force over the 16 edges of the base drawing
  EXPECT_EQ(count_crossings(d), 4);
}

TEST(CountCrossings, MatchesSlowRouteOnRandomDrawing) {
  RngStream rng(211, 0);
  const auto d = random_bipartite_drawing(MeasureSpec::uniform(), MeasureSpec::uniform(), 10, rng);
  EXPECT_EQ(count_crossings(d), slow_count(d));
}

TEST(CountCrossings, IndependentOfThreadCount) {
  RngStream rng(212, 0);
  const auto d = random_bipartite_drawing(MeasureSpec::uniform(), MeasureSpec::uniform(), 14, rng);
  const auto c1 = count_crossings(d, 1);
  EXPECT_EQ(c1, count_crossings(d, 3));
  EXPECT_EQ(c1, count_crossings(d, 8));
}

TEST(CrossingGraphBuild, TwoByTwoWithOneCrossing) {
  const double h = std::sqrt(0.5);
  BipartiteDrawing d;
  d.partA = {UnitVec(1, 0, 0), UnitVec(0.5, 0.5, h)};
  d.partB = {UnitVec(0, 1, 0), UnitVec(0.5, 0.5, -h)};
  const auto g = build_crossing_graph(d);
  EXPECT_EQ(g.num_vertices, 4u);
  EXPECT_EQ(static_cast<std::int64_t>(g.num_edges), count_crossings(d));
  EXPECT_EQ(g.num_edges, 1u);
  EXPECT_TRUE(g.adjacent(0, 3));  // edges a0-b0 and a1-b1 cross
}

TEST(CrossingGraphBuild, EdgeCountMatchesAndEndpointsNeverAdjacent) {
  RngStream rng(213, 0);
  const auto d = random_bipartite_drawing(MeasureSpec::uniform(), MeasureSpec::uniform(), 12, rng);
  const auto g = build_crossing_graph(d);
  EXPECT_EQ(static_cast<std::int64_t>(g.num_edges), count_crossings(d));
  const std::size_t nb = d.partB.size();
  for (std::uint32_t e1 = 0; e1 < g.num_vertices; ++e1)
    for (auto it = g.offsets[e1]; it < g.offsets[e1 + 1]; ++it) {
      const std::uint32_t e2 = g.neighbors[it];
      EXPECT_NE(e1 / nb, e2 / nb);
      EXPECT_NE(e1 % nb, e2 % nb);
    }
}

TEST(CrossingGraphBuild, AntipodalSixBySix) {
  RngStream rng(214, 0);
  const auto d = antipodal_drawing(random_points(3, rng), random_points(3, rng));
  const auto g = build_crossing_graph(d);
  EXPECT_EQ(g.num_edges, 36u);  // Z(6,6)
}

TEST(ClassifyCrossing, BundleRelations) {
  const BlowupMetadata meta{BlowupConfig::random(215, 2)};
  const std::size_t nb = 8;  // 4n with n=2
  // Edge (i, j): vertex i of part A (node i/2), vertex j of part B (node 4+j/2).
  const auto edge = [&](std::size_t i, std::size_t j) { return i * nb + j; };
  EXPECT_EQ(classify_crossing(edge(0, 0), edge(1, 1), meta), CrossingType::B);
  EXPECT_EQ(classify_crossing(edge(0, 0), edge(1, 2), meta), CrossingType::N);  // shared v-node
  EXPECT_EQ(classify_crossing(edge(0, 0), edge(2, 1), meta), CrossingType::N);  // shared w-node
  EXPECT_EQ(classify_crossing(edge(0, 0), edge(2, 2), meta), CrossingType::C);
}

TEST(CrossingCensus, SmallBlowupExactStructure) {
  const std::uint32_t n = 2;
  const auto cfg = BlowupConfig::random(216, n, 1e-6);
  const auto census = crossing_census(blowup_drawing(cfg));

  EXPECT_EQ(census.c, 4 * 16);       // 4 n^4
  EXPECT_EQ(census.b, 16 * 1);       // 16 C(2,2)^2... C(2,2)=1 pair per side
  EXPECT_EQ(census.n, 8 * 8);        // 8 nodes, n^3(n-1) each
  EXPECT_EQ(census.total, census.c + census.b + census.n);

  for (int bundle = 0; bundle < 16; ++bundle) EXPECT_EQ(census.per_bundle_b[bundle], 1);

  // Exactly four node-disjoint bundle pairs carry crossings, n^4 each.
  int crossing_pairs = 0;
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j)
      if (census.per_pair_c[i][j] != 0) {
        EXPECT_EQ(census.per_pair_c[i][j], 16);
        ++crossing_pairs;
      }
  EXPECT_EQ(crossing_pairs, 4);

  // Node-crossing identities: an angle pair and its complement (sharing one
  // bundle) always sum to n^3(n-1)/2; antipodal-target pairs are empty when
  // r << 1/n.
  const auto slot = CrossingCensus::node_pair_slot;
  const std::int64_t half = 4;  // n^3(n-1)/2 at n=2
  for (int node = 0; node < 8; ++node) {
    const auto& cn = census.per_node_n[node];
    EXPECT_EQ(cn[slot(0, 1)], 0);
    EXPECT_EQ(cn[slot(2, 3)], 0);
    EXPECT_EQ(cn[slot(0, 2)] + cn[slot(0, 3)], half);
    EXPECT_EQ(cn[slot(1, 2)] + cn[slot(1, 3)], half);
    EXPECT_EQ(cn[slot(0, 2)] + cn[slot(1, 2)], half);
    EXPECT_EQ(cn[slot(0, 3)] + cn[slot(1, 3)], half);
  }
}

TEST(CrossingCensus, RequiresBlowupMetadata) {
  RngStream rng(217, 0);
  const auto d = random_bipartite_drawing(MeasureSpec::uniform(), MeasureSpec::uniform(), 3, rng);
  EXPECT_THROW(crossing_census(d), InvalidSpec);
}

TEST(TriangleCensus, SingleCrossingHasNoTriangles) {
  const double h = std::sqrt(0.5);
  BipartiteDrawing d;
  d.partA = {UnitVec(1, 0, 0), UnitVec(0.5, 0.5, h)};
  d.partB = {UnitVec(0, 1, 0), UnitVec(0.5, 0.5, -h)};
  EXPECT_EQ(triangle_census(build_crossing_graph(d)).total, 0);
}

TEST(TriangleCensus, MatchesBruteForceOnRandomGraphs) {
  RngStream rng(218, 0);
  for (int rep = 0; rep < 8; ++rep) {
    const std::uint32_t V = 40 + 30 * rep;
    auto g = tu::random_graph(V, 0.15, rng);
    const auto expect = tu::brute_force_triangles(g);
    EXPECT_EQ(triangle_census(g, nullptr, 0).total, expect);
    // Force the sorted-merge path as well.
    EXPECT_EQ(triangle_census(g, nullptr, 0, /*bitmatrix_vertex_cap=*/0).total, expect);
  }
}

TEST(TriangleCensus, BlowupTypesAtSmallN) {
  const std::uint32_t n = 3;
  const auto cfg = BlowupConfig::random(219, n, 1e-6);
  const auto d = blowup_drawing(cfg);
  const auto g = build_crossing_graph(d);
  const auto tri = triangle_census(g, &*d.blowup);

  EXPECT_TRUE(tri.typed);
  EXPECT_EQ(tri.by_type("CCC"), 0);
  EXPECT_EQ(tri.by_type("CCN"), 0);
  EXPECT_EQ(tri.by_type("NNN"), 0);
  EXPECT_EQ(tri.by_type("BBC"), 0);
  EXPECT_EQ(tri.by_type("BCN"), 0);
  EXPECT_EQ(tri.by_type("BBN"), 0);
  EXPECT_EQ(tri.by_type("BBB"), 16);  // 16 C(3,3)^2

  const auto pred = predicted_triangle_census(base_angles(cfg), n);
  EXPECT_EQ(tri.by_type("BBB"), pred.bbb_exact);
  EXPECT_EQ(tri.by_type("CCB"), pred.ccb_exact);

  std::int64_t sum = 0;
  for (const auto& [key, value] : tri.as_map()) sum += value;
  EXPECT_EQ(sum, tri.total);
  EXPECT_EQ(tri.total, tu::brute_force_triangles(g));
}

TEST(TriangleCensus, ThreadCountInvariance) {
  RngStream rng(220, 0);
  auto g = tu::random_graph(150, 0.2, rng);
  const auto t1 = triangle_census(g, nullptr, 1);
  const auto t4 = triangle_census(g, nullptr, 4);
  EXPECT_EQ(t1.total, t4.total);
}

TEST(HomCountSmall, ClosedForms) {
  RngStream rng(221, 0);
  auto g = tu::random_graph(60, 0.2, rng);
  EXPECT_EQ(hom_count_small(PatternGraph::k1(), g), 60);
  EXPECT_EQ(hom_count_small(PatternGraph::k2(), g), 2 * static_cast<std::int64_t>(g.num_edges));
  std::int64_t degsq = 0;
  for (std::uint32_t v = 0; v < g.num_vertices; ++v) {
    const auto dgr = static_cast<std::int64_t>(g.degree(v));
    degsq += dgr * dgr;
  }
  EXPECT_EQ(hom_count_small(PatternGraph::p3(), g), degsq);
  EXPECT_EQ(hom_count_small(PatternGraph::k3(), g), 6 * tu::brute_force_triangles(g));

  // One triangle: 6 labelings; triangle-free graph: 0.
  auto tri = CrossingGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(hom_count_small(PatternGraph::k3(), tri), 6);
  auto path = CrossingGraph::from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(hom_count_small(PatternGraph::k3(), path), 0);

  EXPECT_THROW(hom_count_small(PatternGraph::empty(2), g), UnsupportedPattern);
  EXPECT_THROW(hom_count_small({4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}, g), UnsupportedPattern);
}

TEST(CrossingGraphType, FromEdgesValidation) {
  EXPECT_THROW(CrossingGraph::from_edges(3, {{0, 3}}), std::out_of_range);
  EXPECT_THROW(CrossingGraph::from_edges(3, {{1, 1}}), std::invalid_argument);
  const auto g = CrossingGraph::from_edges(3, {{1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.num_edges, 2u);  // duplicates collapse
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}
