#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spherecross/crossing.hpp"
#include "spherecross/measures.hpp"
#include "spherecross/pattern.hpp"

namespace spherecross {

/// A Bernoulli Monte-Carlo estimate with its standard error.
struct DensityEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  std::string to_json() const;
};

/// Exact homomorphism density hom(H, g) / |V(g)|^k for the supported small
/// patterns.
double t_exact(const PatternGraph& H, const CrossingGraph& g);

/// Monte-Carlo estimate of p_H: the probability that k independent random
/// geodesic segments (a_i ~ mu1, b_i ~ mu2) realize every edge of H as a
/// crossing.  This is the homomorphism density t(H, W(mu1, mu2)) of the
/// limiting crossing graphon.  Sample s draws from the stream
/// (rng.seed(), rng.stream_id() + 1 + s), so results are reproducible and
/// independent of the worker count.
DensityEstimate estimate_pH(const PatternGraph& H, const MeasureSpec& mu1,
                            const MeasureSpec& mu2, std::int64_t samples, const RngStream& rng,
                            unsigned threads = 0);

/// Unbiased estimate of t(H, g) by uniform vertex k-tuples with replacement.
DensityEstimate estimate_tH_vertex_sampling(const PatternGraph& H, const CrossingGraph& g,
                                            std::int64_t samples, const RngStream& rng,
                                            unsigned threads = 0);

/// Exact t(H, X_n) over `reps` independent random drawings per n; diagnostic
/// for the convergence of the crossing-graph densities.
struct ConvergenceRow {
  std::size_t n = 0;
  std::size_t reps = 0;
  double mean = 0.0;
  double spread = 0.0;  // sample standard deviation; meaningless if !has_spread
  bool has_spread = false;
};

std::vector<ConvergenceRow> convergence_report(const PatternGraph& H, const MeasureSpec& mu1,
                                               const MeasureSpec& mu2,
                                               const std::vector<std::size_t>& n_values,
                                               std::size_t reps, const RngStream& rng,
                                               unsigned threads = 0);

}  // namespace spherecross
