#include "spherecross/blowup_theory.hpp"

#include <cmath>
#include <numbers>

namespace spherecross {

namespace {

constexpr double kPi = std::numbers::pi;

void check_angle(double a) {
  if (!(a > 0.0) || !(a < kPi)) throw DomainError("angle must lie in (0, pi)");
}

void check_quad(const AngleQuad& q) {
  check_angle(q.alpha);
  check_angle(q.beta);
  check_angle(q.gamma);
  check_angle(q.delta);
}

double binom2(std::uint32_t n) { return 0.5 * n * (n - 1.0); }

std::int64_t binom2_i(std::int64_t n) { return n * (n - 1) / 2; }
std::int64_t binom3_i(std::int64_t n) { return n * (n - 1) * (n - 2) / 6; }

}  // namespace

double predicted_cro(double alpha, std::uint32_t n) {
  check_angle(alpha);
  const double n4 = std::pow(static_cast<double>(n), 4);
  return (kPi - alpha) / (2.0 * kPi) * n4;
}

PredictedCrossingCensus predicted_crossing_census(const AngleQuad& q, std::uint32_t n) {
  check_quad(q);
  PredictedCrossingCensus out;
  const double n4 = std::pow(static_cast<double>(n), 4);
  out.c = 4.0 * n4;
  out.b = 16.0 * binom2(n) * binom2(n);
  // Each of the 8 nodes carries two bundle pairs at its angle and two at the
  // complement; node pairs share the angle of their antipodal partner.
  for (const double x : {q.alpha, q.beta, q.gamma, q.delta})
    out.n += 2.0 * (2.0 * predicted_cro(x, n) + 2.0 * predicted_cro(kPi - x, n));
  return out;
}

TrianglePrediction predicted_triangle_census(const AngleQuad& q, std::uint32_t n) {
  check_quad(q);
  TrianglePrediction out;
  const double n2 = static_cast<double>(n) * n;
  const double n6 = n2 * n2 * n2;

  const double cro_a = predicted_cro(q.alpha, n);
  const double cro_b = predicted_cro(q.beta, n);
  const double cro_g = predicted_cro(q.gamma, n);
  const double cro_d = predicted_cro(q.delta, n);
  out.cnn = 2.0 / n2 * (cro_a + cro_d) * (cro_g + cro_b);
  out.bbb = 4.0 / 9.0 * n6;
  out.ccb = 2.0 * n6;
  const double s2 = q.alpha * (q.alpha - kPi) + q.beta * (q.beta - kPi) +
                    q.gamma * (q.gamma - kPi) + q.delta * (q.delta - kPi);
  out.bnn = s2 / (kPi * kPi) * n6 + 8.0 / 3.0 * n6;
  out.total = out.cnn + out.bbb + out.ccb + out.bnn;

  const std::int64_t ni = n;
  out.bbb_exact = 16 * binom3_i(ni) * binom3_i(ni);
  out.ccb_exact = 8 * binom2_i(ni) * binom2_i(ni) * ni * ni;
  return out;
}

double t_k3_formula(const AngleQuad& q) {
  check_quad(q);
  const double sum = q.sum();
  const double sq = q.alpha * q.alpha + q.beta * q.beta + q.gamma * q.gamma + q.delta * q.delta;
  const double lens = (2.0 * kPi - q.alpha - q.delta) * (2.0 * kPi - q.gamma - q.beta);
  return 3.0 / (4096.0 * kPi * kPi) * (lens + 2.0 * sq - 2.0 * kPi * sum) + 23.0 / 3072.0;
}

std::pair<Ratio, Ratio> t_k3_bounds() { return {Ratio{83, 12288}, Ratio{128, 12288}}; }

// The boundary sum = 2pi is admitted within round-off: the all-right-angles
// quad is the limit of realizable configurations.
bool angle_sum_ok(const AngleQuad& q) { return q.sum() < 2.0 * std::numbers::pi + 1e-12; }

}  // namespace spherecross
