#include "spherecross/crossing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "spherecross/detail/parallel.hpp"

namespace spherecross {

std::int64_t zarankiewicz(std::int64_t m, std::int64_t n) {
  if (m < 0 || n < 0) throw DomainError("zarankiewicz arguments must be non-negative");
  return (n / 2) * ((n - 1) / 2) * (m / 2) * ((m - 1) / 2);
}

CrossingGraph CrossingGraph::from_edges(
    std::uint32_t num_vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  CrossingGraph g;
  g.num_vertices = num_vertices;
  for (auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("crossing graph is loopless");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  g.num_edges = edges.size();
  g.offsets.assign(num_vertices + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets[u + 1];
    ++g.offsets[v + 1];
  }
  for (std::size_t i = 1; i < g.offsets.size(); ++i) g.offsets[i] += g.offsets[i - 1];
  g.neighbors.resize(2 * edges.size());
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    g.neighbors[cursor[u]++] = v;
    g.neighbors[cursor[v]++] = u;
  }
  for (std::uint32_t v = 0; v < num_vertices; ++v)
    std::sort(g.neighbors.begin() + g.offsets[v], g.neighbors.begin() + g.offsets[v + 1]);
  return g;
}

bool CrossingGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto lo = neighbors.begin() + offsets[u];
  const auto hi = neighbors.begin() + offsets[u + 1];
  return std::binary_search(lo, hi, v);
}

namespace {

/// Structure-of-arrays edge layout for the pairwise kernels.
struct EdgeSoA {
  std::size_t m = 0;
  std::size_t na = 0, nb = 0;
  std::vector<Vec3> a, b, n;

  explicit EdgeSoA(const BipartiteDrawing& d) {
    na = d.partA.size();
    nb = d.partB.size();
    m = na * nb;
    a.resize(m);
    b.resize(m);
    n.resize(m);
    for (std::size_t i = 0; i < na; ++i) {
      const Vec3 pa = d.partA[i].vec();
      for (std::size_t j = 0; j < nb; ++j) {
        const std::size_t e = i * nb + j;
        a[e] = pa;
        b[e] = d.partB[j].vec();
        n[e] = cross(pa, b[e]);
      }
    }
  }
};

/// Runs fn(e1, e2) over all index-disjoint edge pairs, e1 < e2, sharding e1
/// rows round-robin across workers.
template <typename PairFn>
void for_each_disjoint_pair(const EdgeSoA& soa, unsigned threads, PairFn&& make_fn) {
  const unsigned workers = detail::resolve_threads(threads);
  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    auto fn = make_fn(w);
    for (std::size_t e1 = w; e1 < soa.m; e1 += nw) {
      const std::size_t i1 = e1 / soa.nb, j1 = e1 % soa.nb;
      for (std::size_t e2 = e1 + 1; e2 < soa.m; ++e2) {
        if (e2 / soa.nb == i1 || e2 % soa.nb == j1) continue;
        fn(e1, e2);
      }
    }
  });
}

}  // namespace

std::int64_t count_crossings(const BipartiteDrawing& d, unsigned threads) {
  const EdgeSoA soa(d);
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<std::int64_t> partial(workers, 0);
  for_each_disjoint_pair(soa, workers, [&](unsigned w) {
    return [&, w](std::size_t e1, std::size_t e2) {
      if (detail::segments_cross_fast(soa.a[e1], soa.b[e1], soa.n[e1], soa.a[e2], soa.b[e2],
                                      soa.n[e2]))
        ++partial[w];
    };
  });
  std::int64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

CrossingGraph build_crossing_graph(const BipartiteDrawing& d, unsigned threads) {
  const EdgeSoA soa(d);
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs(workers);
  for_each_disjoint_pair(soa, workers, [&](unsigned w) {
    return [&, w](std::size_t e1, std::size_t e2) {
      if (detail::segments_cross_fast(soa.a[e1], soa.b[e1], soa.n[e1], soa.a[e2], soa.b[e2],
                                      soa.n[e2]))
        pairs[w].emplace_back(static_cast<std::uint32_t>(e1), static_cast<std::uint32_t>(e2));
    };
  });

  CrossingGraph g;
  g.num_vertices = static_cast<std::uint32_t>(soa.m);
  g.offsets.assign(soa.m + 1, 0);
  std::uint64_t total = 0;
  for (const auto& list : pairs) {
    total += list.size();
    for (const auto& [u, v] : list) {
      ++g.offsets[u + 1];
      ++g.offsets[v + 1];
    }
  }
  g.num_edges = total;
  for (std::size_t i = 1; i < g.offsets.size(); ++i) g.offsets[i] += g.offsets[i - 1];
  g.neighbors.resize(2 * total);
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& list : pairs)
    for (const auto& [u, v] : list) {
      g.neighbors[cursor[u]++] = v;
      g.neighbors[cursor[v]++] = u;
    }
  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    for (std::uint32_t v = w; v < g.num_vertices; v += nw)
      std::sort(g.neighbors.begin() + g.offsets[v], g.neighbors.begin() + g.offsets[v + 1]);
  });
  return g;
}

const char* crossing_type_name(CrossingType t) {
  switch (t) {
    case CrossingType::C: return "C";
    case CrossingType::B: return "B";
    case CrossingType::N: return "N";
  }
  return "?";
}

CrossingType classify_crossing(std::size_t e1, std::size_t e2, const BlowupMetadata& meta) {
  const std::size_t nb = 4 * static_cast<std::size_t>(meta.config.n);
  const bool same_a = meta.node_of_a(e1 / nb) == meta.node_of_a(e2 / nb);
  const bool same_b = meta.node_of_b(e1 % nb) == meta.node_of_b(e2 % nb);
  if (same_a && same_b) return CrossingType::B;
  if (same_a || same_b) return CrossingType::N;
  return CrossingType::C;
}

int CrossingCensus::node_pair_slot(int t1, int t2) {
  if (t1 > t2) std::swap(t1, t2);
  // (0,1)->0 (0,2)->1 (0,3)->2 (1,2)->3 (1,3)->4 (2,3)->5
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[t1][t2];
}

CrossingCensus crossing_census(const BipartiteDrawing& d, unsigned threads) {
  if (!d.blowup) throw InvalidSpec("crossing_census requires blow-up metadata");
  const BlowupMetadata& meta = *d.blowup;
  const std::size_t n = meta.config.n;
  const EdgeSoA soa(d);

  // Per-edge node ids, precomputed once.
  std::vector<std::uint8_t> node_a(soa.m), node_b(soa.m);
  for (std::size_t e = 0; e < soa.m; ++e) {
    node_a[e] = static_cast<std::uint8_t>((e / soa.nb) / n);
    node_b[e] = static_cast<std::uint8_t>(4 + (e % soa.nb) / n);
  }

  const unsigned workers = detail::resolve_threads(threads);
  std::vector<CrossingCensus> partial(workers);
  for_each_disjoint_pair(soa, workers, [&](unsigned w) {
    CrossingCensus* cen = &partial[w];
    return [&, cen](std::size_t e1, std::size_t e2) {
      if (!detail::segments_cross_fast(soa.a[e1], soa.b[e1], soa.n[e1], soa.a[e2], soa.b[e2],
                                       soa.n[e2]))
        return;
      ++cen->total;
      const int a1 = node_a[e1], a2 = node_a[e2];
      const int b1 = node_b[e1], b2 = node_b[e2];
      if (a1 == a2 && b1 == b2) {
        ++cen->b;
        ++cen->per_bundle_b[4 * a1 + (b1 - 4)];
      } else if (a1 == a2) {
        ++cen->n;
        ++cen->per_node_n[a1][CrossingCensus::node_pair_slot(b1 - 4, b2 - 4)];
      } else if (b1 == b2) {
        ++cen->n;
        ++cen->per_node_n[b1][CrossingCensus::node_pair_slot(a1, a2)];
      } else {
        ++cen->c;
        int bu1 = 4 * a1 + (b1 - 4), bu2 = 4 * a2 + (b2 - 4);
        if (bu1 > bu2) std::swap(bu1, bu2);
        ++cen->per_pair_c[bu1][bu2];
      }
    };
  });

  CrossingCensus out;
  for (const auto& p : partial) {
    out.total += p.total;
    out.c += p.c;
    out.b += p.b;
    out.n += p.n;
    for (int i = 0; i < 16; ++i) out.per_bundle_b[i] += p.per_bundle_b[i];
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) out.per_pair_c[i][j] += p.per_pair_c[i][j];
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 6; ++j) out.per_node_n[i][j] += p.per_node_n[i][j];
  }
  return out;
}

namespace {

constexpr int kTypeC = 0, kTypeB = 1, kTypeN = 2;

/// Canonical index into kTriangleTypeKeys for an unordered type triple.
int triangle_type_index(int t1, int t2, int t3) {
  char k[3] = {"CBN"[t1], "CBN"[t2], "CBN"[t3]};
  std::sort(k, k + 3);
  for (int i = 0; i < 10; ++i)
    if (kTriangleTypeKeys[i][0] == k[0] && kTriangleTypeKeys[i][1] == k[1] &&
        kTriangleTypeKeys[i][2] == k[2])
      return i;
  return -1;
}

struct TypeTables {
  // [t_uv][t_uw][t_vw] -> census slot
  int idx[3][3][3];
  TypeTables() {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) idx[i][j][k] = triangle_type_index(i, j, k);
  }
};

const TypeTables kTypeTables;

}  // namespace

std::int64_t TriangleCensus::by_type(const std::string& key) const {
  std::string k = key;
  std::sort(k.begin(), k.end());
  for (int i = 0; i < 10; ++i)
    if (k == kTriangleTypeKeys[i]) return counts[i];
  throw std::invalid_argument("unknown triangle type key: " + key);
}

std::map<std::string, std::int64_t> TriangleCensus::as_map() const {
  std::map<std::string, std::int64_t> m;
  for (int i = 0; i < 10; ++i) m[kTriangleTypeKeys[i]] = counts[i];
  return m;
}

namespace {

/// Per-edge crossing type against another edge given blow-up node ids; -1
/// when no metadata (untyped census).
struct NodeIds {
  std::vector<std::uint8_t> a, b;
  bool present = false;

  NodeIds(const CrossingGraph& g, const BlowupMetadata* meta) {
    if (!meta) return;
    present = true;
    const std::size_t nb = 4 * static_cast<std::size_t>(meta->config.n);
    a.resize(g.num_vertices);
    b.resize(g.num_vertices);
    for (std::uint32_t e = 0; e < g.num_vertices; ++e) {
      a[e] = static_cast<std::uint8_t>((e / nb) / meta->config.n);
      b[e] = static_cast<std::uint8_t>(4 + (e % nb) / meta->config.n);
    }
  }

  int type(std::uint32_t e1, std::uint32_t e2) const {
    const bool sa = a[e1] == a[e2], sb = b[e1] == b[e2];
    return (sa && sb) ? kTypeB : ((sa || sb) ? kTypeN : kTypeC);
  }
};

TriangleCensus triangles_bitmatrix(const CrossingGraph& g, const NodeIds& ids, unsigned workers) {
  const std::uint32_t V = g.num_vertices;
  const std::size_t words = (V + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(V) * words, 0);
  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    for (std::uint32_t u = w; u < V; u += nw) {
      std::uint64_t* row = rows.data() + static_cast<std::size_t>(u) * words;
      for (auto it = g.offsets[u]; it < g.offsets[u + 1]; ++it) {
        const std::uint32_t v = g.neighbors[it];
        row[v >> 6] |= 1ull << (v & 63);
      }
    }
  });

  std::vector<TriangleCensus> partial(workers);
  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    TriangleCensus& cen = partial[w];
    for (std::uint32_t u = w; u < V; u += nw) {
      const std::uint64_t* row_u = rows.data() + static_cast<std::size_t>(u) * words;
      for (auto it = g.offsets[u]; it < g.offsets[u + 1]; ++it) {
        const std::uint32_t v = g.neighbors[it];
        if (v <= u) continue;
        const std::uint64_t* row_v = rows.data() + static_cast<std::size_t>(v) * words;
        const int t_uv = ids.present ? ids.type(u, v) : 0;
        // Scan words holding bits > v.
        std::size_t wi = (v + 1) >> 6;
        if (wi >= words) continue;
        std::uint64_t first = row_u[wi] & row_v[wi];
        const std::uint32_t rem = (v + 1) & 63;
        if (rem != 0) first &= ~0ull << rem;
        std::uint64_t cur = first;
        for (;;) {
          while (cur != 0) {
            const std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(cur));
            cur &= cur - 1;
            ++cen.total;
            if (ids.present) {
              const std::uint32_t x = static_cast<std::uint32_t>(wi << 6) + bit;
              ++cen.counts[kTypeTables.idx[t_uv][ids.type(u, x)][ids.type(v, x)]];
            }
          }
          if (++wi >= words) break;
          cur = row_u[wi] & row_v[wi];
        }
      }
    }
  });

  TriangleCensus out;
  out.typed = ids.present;
  for (const auto& p : partial) {
    out.total += p.total;
    for (int i = 0; i < 10; ++i) out.counts[i] += p.counts[i];
  }
  return out;
}

TriangleCensus triangles_merge(const CrossingGraph& g, const NodeIds& ids, unsigned workers) {
  std::vector<TriangleCensus> partial(workers);
  detail::parallel_run(workers, [&](unsigned w, unsigned nw) {
    TriangleCensus& cen = partial[w];
    for (std::uint32_t u = w; u < g.num_vertices; u += nw) {
      const auto u_hi = g.offsets[u + 1];
      for (auto it = g.offsets[u]; it < u_hi; ++it) {
        const std::uint32_t v = g.neighbors[it];
        if (v <= u) continue;
        const int t_uv = ids.present ? ids.type(u, v) : 0;
        // Intersect the > v suffixes of both sorted rows.
        auto iu = std::lower_bound(g.neighbors.begin() + it + 1, g.neighbors.begin() + u_hi, v + 1);
        auto iv = std::lower_bound(g.neighbors.begin() + g.offsets[v],
                                   g.neighbors.begin() + g.offsets[v + 1], v + 1);
        const auto eu = g.neighbors.begin() + u_hi;
        const auto ev = g.neighbors.begin() + g.offsets[v + 1];
        while (iu != eu && iv != ev) {
          if (*iu < *iv) ++iu;
          else if (*iv < *iu) ++iv;
          else {
            ++cen.total;
            if (ids.present) ++cen.counts[kTypeTables.idx[t_uv][ids.type(u, *iu)][ids.type(v, *iu)]];
            ++iu;
            ++iv;
          }
        }
      }
    }
  });
  TriangleCensus out;
  out.typed = ids.present;
  for (const auto& p : partial) {
    out.total += p.total;
    for (int i = 0; i < 10; ++i) out.counts[i] += p.counts[i];
  }
  return out;
}

}  // namespace

TriangleCensus triangle_census(const CrossingGraph& g, const BlowupMetadata* meta,
                               unsigned threads, std::uint32_t bitmatrix_vertex_cap) {
  const NodeIds ids(g, meta);
  const unsigned workers = detail::resolve_threads(threads);
  if (g.num_vertices <= bitmatrix_vertex_cap) return triangles_bitmatrix(g, ids, workers);
  return triangles_merge(g, ids, workers);
}

std::int64_t hom_count_small(const PatternGraph& H, const CrossingGraph& g) {
  H.validate(3);
  const std::uint32_t k = H.k;
  const std::size_t e = H.edges.size();
  if (k == 1 && e == 0) return g.num_vertices;
  if (k == 2 && e == 1) return 2 * static_cast<std::int64_t>(g.num_edges);
  if (k == 3 && e == 2) {
    // Path on 3 vertices: the two edges must share exactly one vertex.
    const auto& [a, b] = H.edges[0];
    const auto& [c, d] = H.edges[1];
    const bool shares = (a == c || a == d || b == c || b == d);
    if (!shares) throw UnsupportedPattern("3-vertex pattern with disjoint edges");
    std::int64_t sum = 0;
    for (std::uint32_t v = 0; v < g.num_vertices; ++v) {
      const std::int64_t deg = static_cast<std::int64_t>(g.degree(v));
      sum += deg * deg;
    }
    return sum;
  }
  if (k == 3 && e == 3) return 6 * triangle_census(g).total;
  throw UnsupportedPattern("hom counts are implemented for K1, K2, P3, K3 only");
}

}  // namespace spherecross
