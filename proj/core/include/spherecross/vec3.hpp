#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace spherecross {

// Tolerances used throughout the geometric predicates.  Unit-scale data in
// double precision has round-off near 1e-16; these leave several orders of
// headroom.
inline constexpr double kEpsNorm = 1e-12;   // |p|^2 - 1 for unit vectors
inline constexpr double kEpsSign = 1e-12;   // orientation sign tests
inline constexpr double kEpsPlane = 1e-10;  // point-on-great-circle slack
inline constexpr double kEpsDeg = 1e-12;    // degenerate segment detection
inline constexpr double kEpsGeneralPos = 1e-12;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

  constexpr bool operator==(const Vec3& o) const = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

constexpr double norm2(const Vec3& a) { return dot(a, a); }

inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  return a * (1.0 / n);
}

/// A point on the unit sphere S^2.  The constructor enforces
/// |x^2+y^2+z^2 - 1| <= kEpsNorm; use UnitVec::of to normalize first.
class UnitVec {
 public:
  UnitVec() : v_(1.0, 0.0, 0.0) {}

  explicit UnitVec(const Vec3& v) : v_(v) {
    if (std::abs(norm2(v) - 1.0) > kEpsNorm)
      throw std::invalid_argument("UnitVec: coordinates are not unit length");
  }
  UnitVec(double x, double y, double z) : UnitVec(Vec3{x, y, z}) {}

  static UnitVec of(const Vec3& v) { return UnitVec(normalized(v)); }

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVec operator-() const {
    UnitVec r;
    r.v_ = -v_;
    return r;
  }

  bool operator==(const UnitVec& o) const { return v_ == o.v_; }

 private:
  Vec3 v_;
};

inline double dot(const UnitVec& a, const UnitVec& b) { return dot(a.vec(), b.vec()); }
inline Vec3 cross(const UnitVec& a, const UnitVec& b) { return cross(a.vec(), b.vec()); }

/// Angular (geodesic) distance between two unit vectors, in [0, pi].
/// atan2 of the cross/dot pair is accurate for both tiny and near-pi angles,
/// where acos(dot) loses up to half the digits.
inline double angular_distance(const UnitVec& a, const UnitVec& b) {
  return std::atan2(norm(cross(a.vec(), b.vec())), dot(a, b));
}

inline UnitVec antipode(const UnitVec& p) { return -p; }

}  // namespace spherecross
