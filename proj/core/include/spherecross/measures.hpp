#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spherecross/errors.hpp"
#include "spherecross/rng.hpp"
#include "spherecross/vec3.hpp"

namespace spherecross {

/// A sampleable probability measure on S^2.
///
///  - UniformSphere: the rotation-invariant measure.
///  - CircleFamily:  pick one of the listed centers uniformly, then a point
///    uniformly by arc length on the circle of angular radius `radius`
///    about it.
///  - Symmetrized:   draw from `inner`, then replace the point by its
///    antipode with probability 1/2.
struct MeasureSpec {
  enum class Kind { UniformSphere, CircleFamily, Symmetrized };

  Kind kind = Kind::UniformSphere;
  std::vector<UnitVec> centers;        // CircleFamily
  double radius = 0.0;                 // CircleFamily, angular, in (0, pi/2)
  std::shared_ptr<MeasureSpec> inner;  // Symmetrized

  static MeasureSpec uniform() { return {}; }
  static MeasureSpec circles(std::vector<UnitVec> centers, double radius);
  static MeasureSpec symmetrized(MeasureSpec inner);

  void validate() const;  // throws InvalidSpec

  std::string to_json() const;
  static MeasureSpec from_json(const std::string& text);
};

/// Uniform point on S^2: z uniform on [-1,1], azimuth uniform on [0,2pi).
UnitVec sample_uniform_sphere(RngStream& rng);

UnitVec sample_measure(const MeasureSpec& spec, RngStream& rng);

/// Structural check: true for UniformSphere, Symmetrized{...}, and
/// CircleFamily whose center multiset is closed under the antipodal map.
bool is_antipodally_symmetric(const MeasureSpec& spec);

/// Orthonormal in-plane frame (e1, e2) for the circle about `c`, with
/// e1 x e2 = c so that increasing angle runs counterclockwise seen from
/// outside the sphere along +c.  Deterministic in c.
std::pair<Vec3, Vec3> circle_frame(const UnitVec& c);

/// Point at angle theta on the circle of angular radius r about c.
UnitVec circle_point(const UnitVec& c, double r, double theta);

}  // namespace spherecross
