#pragma once

#include "fropt/field.hpp"
#include "fropt/frft_types.hpp"

namespace fropt {

// Physical constants (SI).
inline constexpr double kHbar = 1.054571817e-34;   // J s
inline constexpr double kLightSpeed = 2.99792458e8;  // m/s

// Stand-in mu for collimated (flat R_A) inputs when a geometry record is
// requested; the propagators themselves use the exact flat-input form.
inline constexpr double kFlatInputMu = 1e-6;

// The (z, R_A, lambda) -> (mu, epsilon, alpha, R_B, scale) dictionary on the
// photon branch: epsilon^2 = mu/(2-mu), cos(alpha) = 1-mu,
// sin(alpha) = sqrt(mu(2-mu)), R_B = -R_A, scale = sqrt(lambda eps R_A).
struct PropagationGeometry {
  double z = 0.0;
  double r_a = 0.0;
  double wavelength = 0.0;
  double mu = 0.0;
  double epsilon = 0.0;
  double alpha = 0.0;
  double r_b = 0.0;
  double scale = 0.0;  // meters per reduced unit
};

PropagationGeometry geometry_from_z(double z, double r_a, double wavelength);

// Flat-illumination convention: reports the mu -> 0 limit at R_A = z/kFlatInputMu.
PropagationGeometry geometry_from_z_flat(double z, double wavelength);

// General Fresnel <-> FrFT correspondence for arbitrary output curvature R_B:
// epsilon is the real nonzero root of
//   1/R_B + 1/z = eps^2 (1-mu) / (mu R_A [mu^2 + eps^2 (1-mu)^2]).
struct PellatSolution {
  double alpha = 0.0;
  double epsilon = 0.0;
};

PellatSolution pellat_geometry(double z, double r_a, double r_b, double wavelength);

// Oscillator "mass" m_lambda = hbar k / c with k = 2 pi / lambda.
struct MassTerm {
  double m_lambda = 0.0;  // kg
  double k = 0.0;         // 1/m

  static MassTerm from_wavelength(double wavelength);
};

// x^2 = (alpha / m_lambda) q^2 scaling between the canonical position q
// (units m sqrt(kg)) and the transverse position x (meters).
double q_to_x(double q, double alpha, const MassTerm& mass);
double x_to_q(double x, double alpha, const MassTerm& mass);

// Pure relabeling rho = x / scale; amplitudes are copied verbatim.
ReducedSignal reduce_field(const SampledField& field, const PropagationGeometry& geom);

// Inverse relabeling x = scale * sigma / (cos(alpha) + eps sin(alpha)); the
// result is referenced to the output sphere R_B.
SampledField unreduce_field(const ReducedSignal& signal, const PropagationGeometry& geom);

}  // namespace fropt
