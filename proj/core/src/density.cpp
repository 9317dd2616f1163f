#include "spherecross/density.hpp"

#include <cmath>
#include <numeric>

#include <json.hpp>

#include "spherecross/detail/parallel.hpp"

namespace spherecross {

std::string DensityEstimate::to_json() const {
  nlohmann::json j{{"value", value},
                   {"std_error", std_error},
                   {"samples", samples},
                   {"seed", seed},
                   {"stream_id", stream_id}};
  return j.dump();
}

double t_exact(const PatternGraph& H, const CrossingGraph& g) {
  const std::int64_t hom = hom_count_small(H, g);
  return static_cast<double>(hom) / std::pow(static_cast<double>(g.num_vertices), H.k);
}

namespace {

double bernoulli_stderr(double p, std::int64_t samples) {
  return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(samples));
}

}  // namespace

DensityEstimate estimate_pH(const PatternGraph& H, const MeasureSpec& mu1,
                            const MeasureSpec& mu2, std::int64_t samples, const RngStream& rng,
                            unsigned threads) {
  H.validate(8);
  mu1.validate();
  mu2.validate();
  if (samples < 1) throw InvalidSpec("estimate_pH needs samples >= 1");

  const std::uint32_t k = H.k;
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<std::int64_t> hits(workers, 0);

  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    std::vector<Vec3> a(k), b(k), n(k);
    std::int64_t local = 0;
    for (std::int64_t s = w; s < samples; s += nw) {
      RngStream rs(rng.seed(), rng.stream_id() + 1 + static_cast<std::uint64_t>(s));
      for (;;) {  // resample the whole tuple on a degenerate predicate
        for (std::uint32_t i = 0; i < k; ++i) {
          for (;;) {  // resample degenerate segment draws
            const UnitVec pa = sample_measure(mu1, rs);
            const UnitVec pb = sample_measure(mu2, rs);
            if (std::abs(dot(pa, pb)) >= 1.0 - kEpsDeg) continue;
            a[i] = pa.vec();
            b[i] = pb.vec();
            n[i] = cross(a[i], b[i]);
            break;
          }
        }
        bool hom = true;
        try {
          for (const auto& [u, v] : H.edges) {
            if (!detail::segments_cross_fast(a[u], b[u], n[u], a[v], b[v], n[v])) {
              hom = false;
              break;
            }
          }
        } catch (const DegenerateConfiguration&) {
          continue;
        }
        local += hom ? 1 : 0;
        break;
      }
    }
    hits[w] = local;
  });

  const std::int64_t total = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
  DensityEstimate est;
  est.value = static_cast<double>(total) / static_cast<double>(samples);
  est.std_error = bernoulli_stderr(est.value, samples);
  est.samples = samples;
  est.seed = rng.seed();
  est.stream_id = rng.stream_id();
  return est;
}

DensityEstimate estimate_tH_vertex_sampling(const PatternGraph& H, const CrossingGraph& g,
                                            std::int64_t samples, const RngStream& rng,
                                            unsigned threads) {
  H.validate(8);
  if (samples < 1) throw InvalidSpec("vertex sampling needs samples >= 1");
  if (g.num_vertices == 0) throw InvalidSpec("vertex sampling needs a non-empty graph");

  const std::uint32_t k = H.k;
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<std::int64_t> hits(workers, 0);

  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    std::vector<std::uint32_t> map(k);
    std::int64_t local = 0;
    for (std::int64_t s = w; s < samples; s += nw) {
      RngStream rs(rng.seed(), rng.stream_id() + 1 + static_cast<std::uint64_t>(s));
      for (std::uint32_t i = 0; i < k; ++i)
        map[i] = static_cast<std::uint32_t>(rs.next_below(g.num_vertices));
      bool hom = true;
      for (const auto& [u, v] : H.edges) {
        if (map[u] == map[v] || !g.adjacent(map[u], map[v])) {
          hom = false;
          break;
        }
      }
      local += hom ? 1 : 0;
    }
    hits[w] = local;
  });

  const std::int64_t total = std::accumulate(hits.begin(), hits.end(), std::int64_t{0});
  DensityEstimate est;
  est.value = static_cast<double>(total) / static_cast<double>(samples);
  est.std_error = bernoulli_stderr(est.value, samples);
  est.samples = samples;
  est.seed = rng.seed();
  est.stream_id = rng.stream_id();
  return est;
}

std::vector<ConvergenceRow> convergence_report(const PatternGraph& H, const MeasureSpec& mu1,
                                               const MeasureSpec& mu2,
                                               const std::vector<std::size_t>& n_values,
                                               std::size_t reps, const RngStream& rng,
                                               unsigned threads) {
  if (reps < 1) throw InvalidSpec("convergence report needs reps >= 1");
  std::vector<ConvergenceRow> rows;
  for (std::size_t idx = 0; idx < n_values.size(); ++idx) {
    const std::size_t n = n_values[idx];
    std::vector<double> values;
    values.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
      RngStream rs(rng.seed(), rng.stream_id() + 1 + idx * reps + r);
      const auto d = random_bipartite_drawing(mu1, mu2, n, rs);
      const auto g = build_crossing_graph(d, threads);
      values.push_back(t_exact(H, g));
    }
    ConvergenceRow row;
    row.n = n;
    row.reps = reps;
    row.mean = std::accumulate(values.begin(), values.end(), 0.0) / reps;
    if (reps > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - row.mean) * (v - row.mean);
      row.spread = std::sqrt(ss / (reps - 1));
      row.has_spread = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace spherecross
