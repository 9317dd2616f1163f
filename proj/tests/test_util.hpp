#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "spherecross/crossing.hpp"
#include "spherecross/geodesic.hpp"
#include "spherecross/rng.hpp"

namespace spherecross::testutil {

inline UnitVec random_unit_vec(RngStream& rng) {
  // Marsaglia-free construction: uniform z and azimuth.
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVec::of({s * std::cos(phi), s * std::sin(phi), z});
}

/// Random rotation from a uniform quaternion.
struct Rotation {
  double m[3][3];
  UnitVec apply(const UnitVec& p) const {
    const Vec3 v = p.vec();
    return UnitVec::of({m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                        m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                        m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z});
  }
};

inline Rotation random_rotation(RngStream& rng) {
  double q[4], n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& qi : q) {
      qi = rng.uniform(-1.0, 1.0);
      n2 += qi * qi;
    }
  } while (n2 < 1e-6 || n2 > 1.0);
  const double s = 1.0 / std::sqrt(n2);
  const double w = q[0] * s, x = q[1] * s, y = q[2] * s, z = q[3] * s;
  Rotation r;
  r.m[0][0] = 1 - 2 * (y * y + z * z);
  r.m[0][1] = 2 * (x * y - w * z);
  r.m[0][2] = 2 * (x * z + w * y);
  r.m[1][0] = 2 * (x * y + w * z);
  r.m[1][1] = 1 - 2 * (x * x + z * z);
  r.m[1][2] = 2 * (y * z - w * x);
  r.m[2][0] = 2 * (x * z - w * y);
  r.m[2][1] = 2 * (y * z + w * x);
  r.m[2][2] = 1 - 2 * (x * x + y * y);
  return r;
}

/// Dense-sampling crossing oracle, independent of the sign-test predicate.
/// Each arc is sampled at `K` points; the verdict is "crossing" when the
/// minimum pairwise angular distance between the sample sets (witnesses more
/// than `end_margin` samples away from every arc end) falls below the
/// threshold 2*pi*1e-4.  The per-point minimum over the other arc's samples
/// is found exactly through the geometry: the angular distance along an arc
/// is unimodal, so the discrete argmin is adjacent to the continuous foot
/// point or at a window end.
struct OracleResult {
  bool cross = false;
  double min_sampled = 0.0;  // min distance over included sample pairs
  double min_continuous = 0.0;  // min over arc-1 samples of exact point-to-arc-2 distance
  double t1 = 0.0, t2 = 0.0;    // witness parameters in [0,1]
};

inline OracleResult oracle_crossing(const GeodesicSegment& s1, const GeodesicSegment& s2,
                                    int K = 10000, int end_margin = 8) {
  constexpr double kThreshold = 2.0 * std::numbers::pi * 1e-4;
  const Vec3 a1 = s1.a.vec(), b1 = s1.b.vec();
  const Vec3 a2 = s2.a.vec(), b2 = s2.b.vec();
  const double len1 = angular_distance(s1.a, s1.b);
  const double len2 = angular_distance(s2.a, s2.b);
  const Vec3 n2 = normalized(cross(a2, b2));
  const double sl2 = std::sin(len2);

  const auto arc2_at = [&](int j) {
    const double t = static_cast<double>(j) / (K - 1);
    return normalized(a2 * (std::sin((1.0 - t) * len2) / sl2) + b2 * (std::sin(t * len2) / sl2));
  };
  const auto angle_pv = [](const Vec3& p, const Vec3& q) {
    return std::atan2(norm(cross(p, q)), dot(p, q));
  };

  OracleResult res;
  res.min_sampled = std::numbers::pi;
  res.min_continuous = std::numbers::pi;
  const int lo = end_margin, hi = K - 1 - end_margin;

  for (int i = 0; i < K; ++i) {
    const double t = static_cast<double>(i) / (K - 1);
    const Vec3 p =
        normalized(a1 * (std::sin((1.0 - t) * len1) / std::sin(len1)) + b1 * (std::sin(t * len1) / std::sin(len1)));

    // Continuous foot of p on the great circle of s2, clamped to the arc.
    const Vec3 proj = p - n2 * dot(p, n2);
    double tfoot;
    double cont;
    if (norm(proj) < 1e-15) {
      tfoot = 0.0;
      cont = std::numbers::pi / 2;
    } else {
      const Vec3 foot = normalized(proj);
      const bool on_arc = dot(cross(a2, foot), cross(a2, b2)) >= 0.0 &&
                          dot(cross(foot, b2), cross(a2, b2)) >= 0.0;
      if (on_arc) {
        tfoot = angle_pv(a2, foot) / len2;
        cont = angle_pv(p, foot);
      } else {
        const double da = angle_pv(p, a2), db = angle_pv(p, b2);
        tfoot = da <= db ? 0.0 : 1.0;
        cont = std::min(da, db);
      }
    }
    res.min_continuous = std::min(res.min_continuous, cont);

    if (i < lo || i > hi) continue;
    const int jf = static_cast<int>(std::floor(tfoot * (K - 1)));
    const int cands[4] = {std::clamp(jf, lo, hi), std::clamp(jf + 1, lo, hi), lo, hi};
    for (int j : cands) {
      const double d = angle_pv(p, arc2_at(j));
      if (d < res.min_sampled) {
        res.min_sampled = d;
        res.t1 = t;
        res.t2 = static_cast<double>(j) / (K - 1);
      }
    }
  }
  res.cross = res.min_sampled < kThreshold;
  return res;
}

/// Brute-force triangle enumeration over an adjacency matrix.
inline std::int64_t brute_force_triangles(const CrossingGraph& g) {
  const std::uint32_t V = g.num_vertices;
  std::vector<bool> adj(static_cast<std::size_t>(V) * V, false);
  for (std::uint32_t u = 0; u < V; ++u)
    for (auto it = g.offsets[u]; it < g.offsets[u + 1]; ++it)
      adj[static_cast<std::size_t>(u) * V + g.neighbors[it]] = true;
  std::int64_t count = 0;
  for (std::uint32_t u = 0; u < V; ++u)
    for (std::uint32_t v = u + 1; v < V; ++v) {
      if (!adj[static_cast<std::size_t>(u) * V + v]) continue;
      for (std::uint32_t w = v + 1; w < V; ++w)
        if (adj[static_cast<std::size_t>(u) * V + w] && adj[static_cast<std::size_t>(v) * V + w])
          ++count;
    }
  return count;
}

/// Erdos-Renyi graph for oracle comparisons.
inline CrossingGraph random_graph(std::uint32_t V, double p, RngStream& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < V; ++u)
    for (std::uint32_t v = u + 1; v < V; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return CrossingGraph::from_edges(V, std::move(edges));
}

}  // namespace spherecross::testutil
