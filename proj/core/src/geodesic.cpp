#include "spherecross/geodesic.hpp"

#include <algorithm>
#include <cmath>

namespace spherecross {

const char* GeneralPositionResult::kind_name() const {
  switch (kind) {
    case Kind::Ok: return "Ok";
    case Kind::Antipodal: return "Antipodal";
    case Kind::Collinear: return "Collinear";
    case Kind::TripleCrossing: return "TripleCrossing";
  }
  return "?";
}

Vec3 great_circle_normal(const UnitVec& a, const UnitVec& b) {
  const Vec3 n = cross(a, b);
  if (norm(n) < kEpsDeg)
    throw DegenerateSegment("endpoints coincide or are antipodal");
  return n;
}

bool point_on_arc(const UnitVec& p, const GeodesicSegment& s) {
  const Vec3 n = cross(s.a, s.b);
  return dot(cross(s.a.vec(), p.vec()), n) >= 0.0 &&
         dot(cross(p.vec(), s.b.vec()), n) >= 0.0;
}

namespace detail {

bool resolve_same_circle_pair(const Vec3& a1, const Vec3& b1, const Vec3& n1, const Vec3& a2,
                              const Vec3& b2, const Vec3& n2) {
  // Signed angular position of x along the circle with normal n, measured
  // from a; the arc (a, b) occupies positions (0, len) with len < pi.
  constexpr double kAngTol = 1e-12;
  const auto inside = [&](const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& n) {
    const Vec3 nh = normalized(n);
    const double len = std::atan2(dot(cross(a, b), nh), dot(a, b));
    const double theta = std::atan2(dot(cross(a, x), nh), dot(a, x));
    if (theta > kAngTol && theta < len - kAngTol) return true;
    if (theta < -kAngTol || theta > len + kAngTol) return false;
    throw DegenerateConfiguration("collinear arcs touch within tolerance");
  };
  if (inside(a2, a1, b1, n1) || inside(b2, a1, b1, n1) || inside(a1, a2, b2, n2) ||
      inside(b1, a2, b2, n2))
    throw DegenerateConfiguration("overlapping arcs on one great circle");
  return false;
}

}  // namespace detail

bool segments_cross(const GeodesicSegment& s1, const GeodesicSegment& s2) {
  // Good-drawing convention: segments sharing an endpoint never cross.
  if (s1.a == s2.a || s1.a == s2.b || s1.b == s2.a || s1.b == s2.b) return false;

  const Vec3 n1 = cross(s1.a, s1.b);
  const Vec3 n2 = cross(s2.a, s2.b);
  const double d1 = dot(n1, s2.a.vec());
  const double d2 = dot(n1, s2.b.vec());
  const double d3 = dot(n2, s1.a.vec());
  const double d4 = dot(n2, s1.b.vec());
  const bool z1 = std::abs(d1) < kEpsSign, z2 = std::abs(d2) < kEpsSign;
  const bool z3 = std::abs(d3) < kEpsSign, z4 = std::abs(d4) < kEpsSign;
  if (z1 || z2 || z3 || z4) {
    if (z1 && z2 && z3 && z4)
      return detail::resolve_same_circle_pair(s1.a.vec(), s1.b.vec(), n1, s2.a.vec(), s2.b.vec(),
                                              n2);
    // An exactly antipodal endpoint pair places the endpoint on the other
    // great circle; distinct circles meet only there, so no interior
    // crossing is possible.
    const auto anti = [](const UnitVec& p, const UnitVec& q) { return p.vec() == (-q).vec(); };
    if (anti(s1.a, s2.a) || anti(s1.a, s2.b) || anti(s1.b, s2.a) || anti(s1.b, s2.b))
      return false;
    throw DegenerateConfiguration("crossing sign test within tolerance of zero");
  }
  if (d1 * d2 >= 0.0 || d3 * d4 >= 0.0) return false;

  const UnitVec p = UnitVec::of(cross(n1, n2));
  if (point_on_arc(p, s1) && point_on_arc(p, s2)) return true;
  const UnitVec q = -p;
  return point_on_arc(q, s1) && point_on_arc(q, s2);
}

double spherical_angle(const UnitVec& v, const UnitVec& u, const UnitVec& w) {
  const Vec3 tu = u.vec() - v.vec() * dot(u, v);
  const Vec3 tw = w.vec() - v.vec() * dot(w, v);
  const double nu = norm(tu);
  const double nw = norm(tw);
  if (nu < kEpsDeg || nw < kEpsDeg)
    throw DegenerateSegment("direction point is (anti)parallel to the vertex");
  const double c = std::clamp(dot(tu, tw) / (nu * nw), -1.0, 1.0);
  return std::acos(c);
}

namespace detail {

GeneralPositionResult general_position_check_impl(std::span<const UnitVec> points,
                                                  double pair_eps, double collinear_eps) {
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec3 sum = points[i].vec() + points[j].vec();
      const Vec3 dif = points[i].vec() - points[j].vec();
      if (0.5 * std::min(norm2(sum), norm2(dif)) <= pair_eps)
        return {GeneralPositionResult::Kind::Antipodal, {i, j}};
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vec3 dq = points[j].vec() - points[i].vec();
      for (std::size_t l = j + 1; l < k; ++l) {
        const Vec3 dr = points[l].vec() - points[i].vec();
        if (std::abs(dot(points[i].vec(), cross(dq, dr))) <= collinear_eps)
          return {GeneralPositionResult::Kind::Collinear, {i, j, l}};
      }
    }
  }
  return {};
}

}  // namespace detail

GeneralPositionResult general_position_check(std::span<const UnitVec> points, double eps) {
  return detail::general_position_check_impl(points, eps, eps);
}

}  // namespace spherecross
