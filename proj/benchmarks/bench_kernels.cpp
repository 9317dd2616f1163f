#include <benchmark/benchmark.h>

#include <vector>

#include "spherecross/crossing.hpp"
#include "spherecross/density.hpp"
#include "spherecross/drawings.hpp"
#include "spherecross/measures.hpp"

using namespace spherecross;

namespace {

std::vector<GeodesicSegment> random_segments(std::size_t count, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<GeodesicSegment> segs;
  segs.reserve(count);
  while (segs.size() < count) {
    const UnitVec a = sample_uniform_sphere(rng);
    const UnitVec b = sample_uniform_sphere(rng);
    if (std::abs(dot(a, b)) >= 1.0 - kEpsDeg) continue;
    segs.emplace_back(a, b);
  }
  return segs;
}

void BM_SegmentsCrossFast(benchmark::State& state) {
  const auto segs = random_segments(1024, 42);
  std::vector<Vec3> a(segs.size()), b(segs.size()), n(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    a[i] = segs[i].a.vec();
    b[i] = segs[i].b.vec();
    n[i] = cross(segs[i].a, segs[i].b);
  }
  std::size_t i = 0, j = 1;
  std::int64_t hits = 0;
  for (auto _ : state) {
    hits += detail::segments_cross_fast(a[i], b[i], n[i], a[j], b[j], n[j]) ? 1 : 0;
    if (++j == segs.size()) {
      i = (i + 1) % (segs.size() - 1);
      j = i + 1;
    }
  }
  benchmark::DoNotOptimize(hits);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SegmentsCrossFast);

void BM_CountCrossingsBlowup(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto d = blowup_drawing(BlowupConfig::random(7, n, 1e-6));
  std::int64_t total = 0;
  for (auto _ : state) total += count_crossings(d);
  benchmark::DoNotOptimize(total);
  const double pairs = 0.5 * static_cast<double>(d.num_edges()) * (d.num_edges() - 1);
  state.SetItemsProcessed(static_cast<std::int64_t>(pairs * state.iterations()));
}
BENCHMARK(BM_CountCrossingsBlowup)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TriangleCensusBlowup(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto d = blowup_drawing(BlowupConfig::random(7, n, 1e-6));
  const auto g = build_crossing_graph(d);
  std::int64_t total = 0;
  for (auto _ : state) total += triangle_census(g, &*d.blowup).total;
  benchmark::DoNotOptimize(total);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges));
}
BENCHMARK(BM_TriangleCensusBlowup)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EstimatePHK3(benchmark::State& state) {
  const auto u = MeasureSpec::uniform();
  std::uint64_t seed = 0;
  double acc = 0.0;
  for (auto _ : state)
    acc += estimate_pH(PatternGraph::k3(), u, u, 10000, RngStream(seed++, 0), 1).value;
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_EstimatePHK3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
