#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spherecross/errors.hpp"
#include "spherecross/vec3.hpp"

namespace spherecross {

/// The minor great-circle arc between two distinct, non-antipodal points.
struct GeodesicSegment {
  UnitVec a;
  UnitVec b;

  GeodesicSegment(const UnitVec& a_, const UnitVec& b_) : a(a_), b(b_) {
    if (std::abs(dot(a, b)) >= 1.0 - kEpsDeg)
      throw DegenerateSegment("segment endpoints coincide or are antipodal");
  }
};

/// Unnormalized normal a x b of the plane containing the great circle of ab.
Vec3 great_circle_normal(const UnitVec& a, const UnitVec& b);

/// True iff p lies on the closed minor arc of s.  The caller is responsible
/// for p being on the great circle of s (within kEpsPlane); otherwise the
/// result is false.
bool point_on_arc(const UnitVec& p, const GeodesicSegment& s);

/// True iff the open minor arcs meet in exactly one interior point.
/// Segments sharing an endpoint (exact coordinate equality) report false, the
/// good-drawing convention.  Throws DegenerateConfiguration when a sign test
/// falls within kEpsSign of zero.
bool segments_cross(const GeodesicSegment& s1, const GeodesicSegment& s2);

/// Angle at v between the geodesics v->u and v->w, in [0, pi]; computed from
/// the tangent vectors at v.
double spherical_angle(const UnitVec& v, const UnitVec& u, const UnitVec& w);

struct GeneralPositionResult {
  enum class Kind { Ok, Antipodal, Collinear, TripleCrossing };
  Kind kind = Kind::Ok;
  std::vector<std::size_t> indices;  // offending point (or edge) indices

  bool ok() const { return kind == Kind::Ok; }
  const char* kind_name() const;
};

/// Checks pairwise non-antipodality (also flags near-coincident pairs) and
/// that no three points lie on one great circle.  Returns the first
/// violation found.  The two tests are
///   min(|p+q|^2, |p-q|^2) / 2 > eps      (equivalent to |p.q| < 1 - eps,
///                                         but stable for tiny gaps)
///   |p . ((q-p) x (r-p))| > eps          (triple product via differences)
GeneralPositionResult general_position_check(std::span<const UnitVec> points,
                                             double eps = kEpsGeneralPos);

namespace detail {

/// general_position_check with separate tolerances for the pairwise test and
/// the triple-product test.  Blow-up drawings need a resolution-derived
/// collinear tolerance: clusters at antipodal node centers are inherently
/// near-coplanar with the origin at the r^2 scale without being degenerate.
GeneralPositionResult general_position_check_impl(std::span<const UnitVec> points,
                                                  double pair_eps, double collinear_eps);

/// Resolves the all-four-signs-zero case: both arcs on one great circle.
/// Returns false (disjoint open arcs never cross) or throws
/// DegenerateConfiguration when the arcs overlap or touch within tolerance.
/// Defined in geodesic.cpp.
bool resolve_same_circle_pair(const Vec3& a1, const Vec3& b1, const Vec3& n1, const Vec3& a2,
                              const Vec3& b2, const Vec3& n2);

/// Plain-array crossing test used by the counting kernels.  Algebraically
/// identical to segments_cross: d1..d4 are the four orientation signs and
/// the arc-containment conditions reduce to sign patterns on them.
/// Throws DegenerateConfiguration on ambiguous sign tests.
inline bool segments_cross_fast(const Vec3& a1, const Vec3& b1, const Vec3& n1,
                                const Vec3& a2, const Vec3& b2, const Vec3& n2) {
  const double d1 = dot(n1, a2);
  const double d2 = dot(n1, b2);
  const double d3 = dot(n2, a1);
  const double d4 = dot(n2, b1);
  const bool z1 = std::abs(d1) < kEpsSign, z2 = std::abs(d2) < kEpsSign;
  const bool z3 = std::abs(d3) < kEpsSign, z4 = std::abs(d4) < kEpsSign;
  if (z1 || z2 || z3 || z4) {
    if (z1 && z2 && z3 && z4) return resolve_same_circle_pair(a1, b1, n1, a2, b2, n2);
    // Structural zeros: an exactly coincident or antipodal endpoint class
    // places an endpoint on the other great circle; two distinct circles
    // meet only at that class, so the open minor arcs cannot cross.
    const auto same_class = [](const Vec3& p, const Vec3& q) { return p == q || p == -q; };
    if (same_class(a1, a2) || same_class(a1, b2) || same_class(b1, a2) || same_class(b1, b2))
      return false;
    throw DegenerateConfiguration("crossing sign test within tolerance of zero");
  }
  if (d1 * d2 >= 0.0 || d3 * d4 >= 0.0) return false;
  // Both straddle conditions hold; the arcs cross iff the candidate circle
  // intersection lands on matching sides: sign(d1) == sign(d4).
  return (d1 > 0.0) == (d4 > 0.0);
}

}  // namespace detail

}  // namespace spherecross
