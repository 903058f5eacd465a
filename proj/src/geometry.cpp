#include "fropt/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fropt/error.hpp"

namespace fropt {

namespace {
constexpr double kPi = std::numbers::pi;
}

PropagationGeometry geometry_from_z(double z, double r_a, double wavelength) {
  if (!(z > 0.0)) fail(ErrorCode::NonpositiveDistance, "propagation distance must be positive");
  if (!(wavelength > 0.0)) fail(ErrorCode::InvalidSpec, "wavelength must be positive");
  if (r_a == 0.0) fail(ErrorCode::InvalidSpec, "R_A must be nonzero");

  const double mu = z / r_a;
  if (!(mu > 0.0) || !(mu < 2.0))
    fail(ErrorCode::OutOfBranch,
         "mu = z/R_A = " + std::to_string(mu) + " outside the photon branch (0, 2)");

  PropagationGeometry g;
  g.z = z;
  g.r_a = r_a;
  g.wavelength = wavelength;
  g.mu = mu;
  g.epsilon = std::sqrt(mu / (2.0 - mu));
  // cos(alpha) = 1 - mu and sin(alpha) = mu/eps = sqrt(mu(2-mu)) follow from
  // cot(alpha) = eps(1-mu)/mu with cos(alpha) + eps sin(alpha) = 1.
  const double cos_a = 1.0 - mu;
  const double sin_a = std::sqrt(mu * (2.0 - mu));
  g.alpha = std::atan2(sin_a, cos_a);
  g.r_b = -r_a;
  g.scale = std::sqrt(wavelength * g.epsilon * r_a);
  return g;
}

PropagationGeometry geometry_from_z_flat(double z, double wavelength) {
  return geometry_from_z(z, z / kFlatInputMu, wavelength);
}

PellatSolution pellat_geometry(double z, double r_a, double r_b, double wavelength) {
  if (!(z > 0.0)) fail(ErrorCode::NonpositiveDistance, "propagation distance must be positive");
  if (!(wavelength > 0.0)) fail(ErrorCode::InvalidSpec, "wavelength must be positive");
  if (r_a == 0.0 || !std::isfinite(r_a)) fail(ErrorCode::InvalidSpec, "R_A must be finite nonzero");
  if (r_b == 0.0) fail(ErrorCode::InvalidSpec, "R_B must be nonzero");

  const double mu = z / r_a;
  const double t = 1.0 / r_b + 1.0 / z;
  const double one_minus_mu = 1.0 - mu;

  PellatSolution sol;
  constexpr double kDegenerate = 1e-13;
  if (std::abs(t) * z < kDegenerate) {
    // 1/R_B + 1/z = 0 forces mu = 1 (eq. residual vanishes identically); any
    // epsilon satisfies the system there, take the photon-branch value 1.
    if (std::abs(one_minus_mu) > 1e-10)
      fail(ErrorCode::NoRealSolution, "R_B = -z requires z = R_A");
    sol.alpha = kPi / 2.0;
    sol.epsilon = 1.0;
    return sol;
  }
  if (std::abs(one_minus_mu) < kDegenerate)
    fail(ErrorCode::NoRealSolution, "mu = 1 requires R_B = -z");

  const double denom = one_minus_mu * (1.0 - t * mu * r_a * one_minus_mu);
  const double eps2 = t * mu * r_a * mu * mu / denom;
  if (!(eps2 > 0.0) || !std::isfinite(eps2))
    fail(ErrorCode::NoRealSolution, "no real nonzero epsilon for these curvatures");

  sol.epsilon = std::sqrt(eps2);
  const double cot = sol.epsilon * one_minus_mu / mu;
  sol.alpha = std::atan2(1.0, cot);  // sin(alpha) > 0 branch

  // Residual checks against the defining relations.
  const double sin_a = std::sin(sol.alpha);
  const double denom_ss = mu * mu + eps2 * one_minus_mu * one_minus_mu;
  const double res_ss = std::abs(sin_a * sin_a - mu * mu / denom_ss);
  const double res_r = std::abs(t - eps2 * one_minus_mu / (mu * r_a * denom_ss)) /
                       (std::abs(t) + 1.0 / z);
  if (res_ss > 1e-10 || res_r > 1e-10)
    fail(ErrorCode::NoRealSolution, "root does not satisfy the curvature relations");
  return sol;
}

MassTerm MassTerm::from_wavelength(double wavelength) {
  if (!(wavelength > 0.0)) fail(ErrorCode::InvalidSpec, "wavelength must be positive");
  MassTerm m;
  m.k = 2.0 * kPi / wavelength;
  m.m_lambda = kHbar * m.k / kLightSpeed;
  return m;
}

double q_to_x(double q, double alpha, const MassTerm& mass) {
  if (!(alpha > 0.0)) fail(ErrorCode::NonpositiveOrder, "alpha must be positive");
  return std::sqrt(alpha / mass.m_lambda) * q;
}

double x_to_q(double x, double alpha, const MassTerm& mass) {
  if (!(alpha > 0.0)) fail(ErrorCode::NonpositiveOrder, "alpha must be positive");
  return std::sqrt(mass.m_lambda / alpha) * x;
}

ReducedSignal reduce_field(const SampledField& field, const PropagationGeometry& geom) {
  validate_field(field);
  ReducedSignal signal;
  signal.samples = field.samples;
  signal.dp = field.dx / geom.scale;
  signal.p0 = field.x0 / geom.scale;
  return signal;
}

SampledField unreduce_field(const ReducedSignal& signal, const PropagationGeometry& geom) {
  // cos(alpha) + eps sin(alpha) == 1 on the photon branch; divide by the
  // computed value so the general relabeling stays honest.
  const double d = std::cos(geom.alpha) + geom.epsilon * std::sin(geom.alpha);
  SampledField field;
  field.samples = signal.samples;
  field.dx = signal.dp * geom.scale / d;
  field.x0 = signal.p0 * geom.scale / d;
  field.wavelength = geom.wavelength;
  field.curvature = Curvature::finite(geom.r_b);
  return field;
}

}  // namespace fropt
