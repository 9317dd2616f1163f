#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spherecross/drawings.hpp"
#include "spherecross/pattern.hpp"

namespace spherecross {

/// Z(m,n) = floor(n/2) floor((n-1)/2) floor(m/2) floor((m-1)/2), the
/// conjectured crossing number of K_{m,n}.
std::int64_t zarankiewicz(std::int64_t m, std::int64_t n);

/// The crossing graph X of a drawing: one vertex per drawing edge
/// (id = i*|B| + j), adjacent when the arcs cross.
struct CrossingGraph {
  std::uint32_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::vector<std::uint64_t> offsets;    // size num_vertices + 1
  std::vector<std::uint32_t> neighbors;  // sorted within each row

  static CrossingGraph from_edges(std::uint32_t num_vertices,
                                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::uint64_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
};

/// Exact number of crossing edge pairs; pairs sharing a drawing vertex are
/// excluded by index.  threads = 0 uses all hardware threads; the result is
/// independent of the worker count.
std::int64_t count_crossings(const BipartiteDrawing& d, unsigned threads = 0);

CrossingGraph build_crossing_graph(const BipartiteDrawing& d, unsigned threads = 0);

enum class CrossingType : std::uint8_t { C = 0, B = 1, N = 2 };
const char* crossing_type_name(CrossingType t);

/// B when both edges lie in one bundle, N when their bundles share exactly
/// one node, C when the bundles are node-disjoint.
CrossingType classify_crossing(std::size_t e1, std::size_t e2, const BlowupMetadata& meta);

/// Exact crossing census of a blow-up drawing, broken down by type and, for
/// node crossings, by (node, incident bundle pair) — the empirical cro_alpha.
struct CrossingCensus {
  std::int64_t total = 0;
  std::int64_t c = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;

  /// Bundle id = 4*(v-node) + (w-node - 4), v-node in 0..3, w-node in 4..7.
  std::array<std::int64_t, 16> per_bundle_b{};

  /// Bundle-bundle counts for node-disjoint bundle pairs, keyed [b1][b2]
  /// with b1 < b2; nonzero entries correspond to crossings of the base D4.
  std::array<std::array<std::int64_t, 16>, 16> per_pair_c{};

  /// per_node_n[node][slot]: node crossings between the two bundles of the
  /// slot's target pair.  Targets are the four opposite-side nodes in id
  /// order; slot = index of the pair among (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
  std::array<std::array<std::int64_t, 6>, 8> per_node_n{};

  static int node_pair_slot(int t1, int t2);  // targets as 0..3 offsets
};

CrossingCensus crossing_census(const BipartiteDrawing& d, unsigned threads = 0);

/// Triangle counts keyed by the sorted type string over {B,C,N}.
struct TriangleCensus {
  std::int64_t total = 0;
  bool typed = false;                  // true when blow-up metadata was present
  std::array<std::int64_t, 10> counts{};  // canonical key order, see kTriangleTypeKeys

  std::int64_t by_type(const std::string& key) const;  // key is sorted internally
  std::map<std::string, std::int64_t> as_map() const;
};

inline constexpr std::array<const char*, 10> kTriangleTypeKeys = {
    "BBB", "BBC", "BBN", "BCC", "BCN", "BNN", "CCC", "CCN", "CNN", "NNN"};

/// Exact triangle census via adjacency-bitset intersection (sorted-merge
/// fallback above the bitset memory cap).  When meta is present each
/// triangle is tagged by its sorted crossing-type string.
TriangleCensus triangle_census(const CrossingGraph& g, const BlowupMetadata* meta = nullptr,
                               unsigned threads = 0, std::uint32_t bitmatrix_vertex_cap = 20000);

/// Exact homomorphism counts for H in {K1, K2, P3, K3}:
/// hom(K1) = |V|, hom(K2) = 2m, hom(P3) = sum deg^2, hom(K3) = 6 * triangles.
std::int64_t hom_count_small(const PatternGraph& H, const CrossingGraph& g);

}  // namespace spherecross
