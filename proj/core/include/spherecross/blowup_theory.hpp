#pragma once

#include <cstdint>
#include <utility>

#include "spherecross/drawings.hpp"

namespace spherecross {

/// Exact rational, converted to floating point only at use sites.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Leading-order node-crossing count between two bundles meeting at angle
/// alpha: (pi - alpha) / (2 pi) * n^4.
double predicted_cro(double alpha, std::uint32_t n);

/// Closed-form per-type crossing counts for D4^(n) in the r << 1/n regime.
/// C and B are exact; N is the sum of predicted_cro over the node-incident
/// bundle pairs (two alpha-type and two (pi-alpha)-type pairs per node).
struct PredictedCrossingCensus {
  double c = 0.0;
  double b = 0.0;
  double n = 0.0;
  double total() const { return c + b + n; }
};

PredictedCrossingCensus predicted_crossing_census(const AngleQuad& q, std::uint32_t n);

/// Leading-order (n^6) per-type triangle counts, plus the exact integer
/// forms known for BBB and CCB.  total is the sum of the four leading-order
/// type counts and equals the aggregate
///   [(a^2+b^2+c^2+d^2 - pi(a+b+c+d))/pi^2
///    + (2pi-a-d)(2pi-c-b)/(2 pi^2) + 46/9] n^6.
struct TrianglePrediction {
  double cnn = 0.0;
  double bbb = 0.0;
  double ccb = 0.0;
  double bnn = 0.0;
  double total = 0.0;
  std::int64_t bbb_exact = 0;  // 16 * C(n,3)^2
  std::int64_t ccb_exact = 0;  // 8 * C(n,2)^2 * n^2
};

TrianglePrediction predicted_triangle_census(const AngleQuad& q, std::uint32_t n);

/// The limiting triangle density of the blow-up sequence (r -> 0):
///   3/(2^12 pi^2) [(2pi-a-d)(2pi-c-b) + 2(a^2+b^2+c^2+d^2)
///                  - 2pi(a+b+c+d)] + 23/(3 * 2^10).
double t_k3_formula(const AngleQuad& q);

/// The attainable open interval of triangle densities, (83/12288, 128/12288).
std::pair<Ratio, Ratio> t_k3_bounds();

/// Angle-sum constraint satisfied by every realizable quad: sum < 2 pi,
/// with the boundary admitted within 1e-12 (it is a limit configuration).
bool angle_sum_ok(const AngleQuad& q);

}  // namespace spherecross
