#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherecross/geodesic.hpp"
#include "spherecross/measures.hpp"

namespace spherecross {

/// Base configuration for the blow-up drawing D4^(n): an antipodal K_{4,4}
/// on parts {v1, v1bar, v2, v2bar} and {w1, w1bar, w2, w2bar}, a circle of
/// angular radius `radius` at each of the 8 node centers, `n` evenly spaced
/// vertices per node, and one rotation offset per node.
struct BlowupConfig {
  UnitVec v1, v2, w1, w2;
  double radius = 1e-3;
  std::uint32_t n = 1;
  std::array<double, 8> rotation_offsets{};  // node order: v1,v1bar,v2,v2bar,w1,w1bar,w2,w2bar

  /// Offsets k * golden angle; breaks the symmetries that would otherwise
  /// create antipodal vertex pairs or aligned crossings.
  static std::array<double, 8> default_rotation_offsets();

  /// r = min(1e-3, 1/(10n)), shrunk further if the node centers are close;
  /// keeps the drawing in the r << 1/n regime where the bundle counts are
  /// exact.
  static double default_radius(std::uint32_t n, double min_center_distance);

  /// Rejection-samples base points from the uniform measure until the
  /// configuration is valid.  Deterministic in the seed.
  static BlowupConfig random(std::uint64_t seed, std::uint32_t n, double radius = 0.0);

  double min_center_distance() const;  // over distinct node centers
  std::array<UnitVec, 8> node_centers() const;
  void validate() const;  // throws GeneralPositionViolation / InvalidSpec

  std::string to_json() const;
  static BlowupConfig from_json(const std::string& text);
};

struct BlowupMetadata {
  BlowupConfig config;

  std::uint32_t node_of_a(std::size_t i) const { return static_cast<std::uint32_t>(i / config.n); }
  std::uint32_t node_of_b(std::size_t j) const { return 4 + static_cast<std::uint32_t>(j / config.n); }
};

/// A geodesic drawing of the complete bipartite graph on parts A and B.
/// Edge (i, j) is the minor arc partA[i] -- partB[j]; its id is i*|B| + j.
struct BipartiteDrawing {
  std::vector<UnitVec> partA;
  std::vector<UnitVec> partB;
  std::optional<BlowupMetadata> blowup;

  std::size_t num_edges() const { return partA.size() * partB.size(); }
  std::size_t edge_id(std::size_t i, std::size_t j) const { return i * partB.size() + j; }
  GeodesicSegment edge(std::size_t id) const {
    return {partA[id / partB.size()], partB[id % partB.size()]};
  }

  std::string to_json() const;
  static BipartiteDrawing from_json(const std::string& text);
};

/// The four angles of the canonical Figure-type crossing in the base K_{4,4}:
/// alpha at w2 between (v2, v1), beta at v2 between (w2, w1), gamma at v1
/// between (w1, w2), delta at w1 between (v1, v2).
struct AngleQuad {
  double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
  double sum() const { return alpha + beta + gamma + delta; }
};

/// Drawing-level general position: the point checks of
/// general_position_check plus, when the edge count is at most
/// `triple_check_edge_limit`, a census of pairwise crossing points verifying
/// that no three arcs pass through one point (crossing points of pairs with
/// three or more distinct edges separated by angular distance > eps).
GeneralPositionResult drawing_general_position_check(
    const BipartiteDrawing& d, double eps = kEpsGeneralPos,
    std::size_t triple_check_edge_limit = 2500);

/// n independent draws from mu1 and mu2 for the two parts; draws violating
/// general position are rejected and redrawn, with a budget of 100*n redraws
/// before TooManyRejections.
BipartiteDrawing random_bipartite_drawing(const MeasureSpec& mu1, const MeasureSpec& mu2,
                                          std::size_t n, RngStream& rng);

/// The antipodal construction: a drawing of K_{2k,2k} on parts P u antipodes(P)
/// and Q u antipodes(Q), whose crossing count is exactly Z(2k,2k).
/// The base set P u Q must be in general position (the constructed antipodal
/// pairs are exempt from the pairwise test by design).
BipartiteDrawing antipodal_drawing(const std::vector<UnitVec>& P,
                                   const std::vector<UnitVec>& Q);

/// The blow-up drawing D4^(n): 4n + 4n vertices on the node circles, with
/// metadata mapping vertices to nodes and edges to bundles.
BipartiteDrawing blowup_drawing(const BlowupConfig& cfg);

/// Reads off (alpha, beta, gamma, delta) from the base K_{4,4}, relabeling
/// within antipodal pairs until segments w2--v1 and v2--w1 cross.
AngleQuad base_angles(const BlowupConfig& cfg);

/// Pairwise general-position tolerance for a blow-up drawing, derived in
/// closed form from (radius, n, rotation offsets): a quarter of the smallest
/// coincidence / antipodal-pair gap the construction legitimately makes.
double blowup_general_position_eps(const BlowupConfig& cfg);

/// The Theorem-4 measures: mu1 uniform over the four v-circles, mu2 over the
/// four w-circles, each of angular radius cfg.radius.
std::pair<MeasureSpec, MeasureSpec> circles4_measures(const BlowupConfig& cfg);

/// One-parameter family of base configurations interpolating from a
/// near-degenerate configuration (all angles near 0, triangle density near
/// 1/96) at t = 0 to the part-swapped configuration (all angles near pi/2,
/// triangle density near 83/12288) at t = 1.
BlowupConfig sweep_family(double t, std::uint32_t n = 1);

}  // namespace spherecross
