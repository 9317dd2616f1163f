#include <gtest/gtest.h>

#include <cmath>

#include "spherecross/density.hpp"
#include "spherecross/drawings.hpp"
#include "test_util.hpp"

using namespace spherecross;
namespace tu = spherecross::testutil;

TEST(TExact, ClosedFormCases) {
  const auto empty = CrossingGraph::from_edges(5, {});
  EXPECT_DOUBLE_EQ(t_exact(PatternGraph::k2(), empty), 0.0);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> complete;
  const std::uint32_t v = 7;
  for (std::uint32_t i = 0; i < v; ++i)
    for (std::uint32_t j = i + 1; j < v; ++j) complete.emplace_back(i, j);
  EXPECT_DOUBLE_EQ(t_exact(PatternGraph::k2(), CrossingGraph::from_edges(v, complete)),
                   static_cast<double>(v - 1) / v);

  const auto tri = CrossingGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_DOUBLE_EQ(t_exact(PatternGraph::k3(), tri), 6.0 / 27.0);
}

TEST(EstimatePH, EmptyPatternAlwaysHits) {
  const auto est = estimate_pH(PatternGraph::empty(2), MeasureSpec::uniform(),
                               MeasureSpec::uniform(), 1000, RngStream(5, 0));
  EXPECT_DOUBLE_EQ(est.value, 1.0);
  EXPECT_DOUBLE_EQ(est.std_error, 0.0);
}

TEST(EstimatePH, EdgeDensityIsOneEighthForSymmetricMeasures) {
  const auto sym = MeasureSpec::symmetrized(MeasureSpec::uniform());
  const auto est = estimate_pH(PatternGraph::k2(), sym, sym, 200000, RngStream(6, 0));
  EXPECT_NEAR(est.value, 0.125, 4.0 * est.std_error);
  EXPECT_NEAR(est.std_error, std::sqrt(0.125 * 0.875 / 200000.0), 1e-4);
}

TEST(EstimatePH, DeterministicAcrossWorkerCounts) {
  const auto spec = MeasureSpec::uniform();
  const auto a = estimate_pH(PatternGraph::k3(), spec, spec, 50000, RngStream(7, 3), 1);
  const auto b = estimate_pH(PatternGraph::k3(), spec, spec, 50000, RngStream(7, 3), 4);
  const auto c = estimate_pH(PatternGraph::k3(), spec, spec, 50000, RngStream(7, 3), 7);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
}

TEST(EstimatePH, InvariantUnderPatternRelabeling) {
  // p_H does not depend on which segment plays which pattern vertex.
  const PatternGraph path_a{3, {{0, 1}, {1, 2}}};
  const PatternGraph path_b{3, {{1, 2}, {2, 0}}};
  const auto u = MeasureSpec::uniform();
  const auto ea = estimate_pH(path_a, u, u, 200000, RngStream(8, 0));
  const auto eb = estimate_pH(path_b, u, u, 200000, RngStream(9, 0));
  const double sigma = std::hypot(ea.std_error, eb.std_error);
  EXPECT_NEAR(ea.value, eb.value, 4.0 * sigma);
}

TEST(EstimatePH, MatchesLargeDrawingCrossingRate) {
  // The segment model and the drawing model agree in the limit: t(K2, X_n)
  // has mean (1 - 1/n)^2 * p_K2.
  const auto u = MeasureSpec::uniform();
  const auto est = estimate_pH(PatternGraph::k2(), u, u, 400000, RngStream(10, 0));
  RngStream rng(11, 0);
  const std::size_t n = 100;
  const auto d = random_bipartite_drawing(u, u, n, rng);
  const double t_drawing = 2.0 * static_cast<double>(count_crossings(d)) /
                           (static_cast<double>(n * n) * static_cast<double>(n * n));
  const double scale = (1.0 - 1.0 / n) * (1.0 - 1.0 / n);
  EXPECT_NEAR(t_drawing, est.value * scale, 0.05 * 0.125);
}

TEST(EstimatePH, RejectsBadArguments) {
  EXPECT_THROW(estimate_pH(PatternGraph::k2(), MeasureSpec::uniform(), MeasureSpec::uniform(), 0,
                           RngStream(1, 0)),
               InvalidSpec);
  PatternGraph big{9, {}};
  EXPECT_THROW(estimate_pH(big, MeasureSpec::uniform(), MeasureSpec::uniform(), 10,
                           RngStream(1, 0)),
               UnsupportedPattern);
}

TEST(VertexSampling, UnbiasedAgainstExactDensity) {
  RngStream rng(12, 0);
  const auto g = tu::random_graph(80, 0.3, rng);
  const auto exact = t_exact(PatternGraph::k2(), g);
  const auto est = estimate_tH_vertex_sampling(PatternGraph::k2(), g, 100000, RngStream(13, 0));
  EXPECT_NEAR(est.value, exact, 4.0 * est.std_error + 1e-12);
}

TEST(VertexSampling, TriangleDensityOnBlowup) {
  const auto cfg = BlowupConfig::random(930, 6, 1e-6);
  const auto g = build_crossing_graph(blowup_drawing(cfg));
  const auto exact = t_exact(PatternGraph::k3(), g);
  const auto est = estimate_tH_vertex_sampling(PatternGraph::k3(), g, 200000, RngStream(14, 0));
  EXPECT_NEAR(est.value, exact, 4.0 * est.std_error + 1e-12);
}

TEST(VertexSampling, DeterministicAcrossWorkerCounts) {
  RngStream rng(15, 0);
  const auto g = tu::random_graph(50, 0.2, rng);
  const auto a = estimate_tH_vertex_sampling(PatternGraph::k3(), g, 30000, RngStream(16, 0), 1);
  const auto b = estimate_tH_vertex_sampling(PatternGraph::k3(), g, 30000, RngStream(16, 0), 5);
  EXPECT_EQ(a.value, b.value);
}

TEST(ConvergenceReport, MeanApproachesOneEighthWithShrinkingSpread) {
  const auto u = MeasureSpec::uniform();
  const auto rows =
      convergence_report(PatternGraph::k2(), u, u, {20, 40, 80}, 4, RngStream(17, 0));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) EXPECT_TRUE(row.has_spread);
  EXPECT_GT(rows[0].spread, rows[1].spread);
  EXPECT_GT(rows[1].spread, rows[2].spread);
  EXPECT_NEAR(rows[2].mean, 0.125, 0.01);
}

TEST(ConvergenceReport, EdgeCases) {
  const auto u = MeasureSpec::uniform();
  const auto rows = convergence_report(PatternGraph::k2(), u, u, {1, 5}, 1, RngStream(18, 0));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].has_spread);
  EXPECT_DOUBLE_EQ(rows[0].mean, 0.0);  // a single vertex graph has no homs of K2
  EXPECT_THROW(convergence_report(PatternGraph::k2(), u, u, {5}, 0, RngStream(19, 0)),
               InvalidSpec);
}

TEST(DensityEstimateJson, ContainsTheContractFields) {
  DensityEstimate est;
  est.value = 0.125;
  est.std_error = 0.001;
  est.samples = 1000;
  est.seed = 42;
  est.stream_id = 7;
  const auto j = est.to_json();
  EXPECT_NE(j.find("\"value\""), std::string::npos);
  EXPECT_NE(j.find("\"std_error\""), std::string::npos);
  EXPECT_NE(j.find("\"samples\":1000"), std::string::npos);
  EXPECT_NE(j.find("\"seed\":42"), std::string::npos);
}
