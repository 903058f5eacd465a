#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

namespace fropt {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double norm(const Vec3& v);
inline Vec3 mirror_z(const Vec3& v) { return {v.x, v.y, -v.z}; }

enum class MirrorSign { plus, minus };

struct Dirac {};
struct GaussianCloud {
  double sigma = 0.0;  // meters
};
struct UniformBall {
  double radius = 0.0;  // meters
};

// Unit-integral source density rho(|u|); mirror symmetry comes from the
// purely radial profile. The screen-plane Green constant -4\pi is dropped
// throughout, so the sifting identity holds with rho normalized to 1.
struct SourceDistribution {
  std::variant<Dirac, GaussianCloud, UniformBall> shape;

  bool is_dirac() const { return std::holds_alternative<Dirac>(shape); }
  // Quadrature support radius: 8 sigma for the gaussian (tail < 1e-13 of the
  // integral), the ball radius otherwise, 0 for dirac.
  double support_radius() const;
  // Radial Fourier transform rho_hat(k) = int rho(u) e^{i k.u} d^3u.
  double char_function(double k) const;
};

SourceDistribution parse_distribution(const std::string& text);  // "dirac" | "gaussian:sigma=..." | "ball:a=..."

// G+-(r, r') = e^{ik|r-r'|}/|r-r'| +- e^{ik|r-~r'|}/|r-~r'| with ~r' the
// z-mirror of r'.
std::complex<double> spherical_g(const Vec3& r, const Vec3& rp, double k, MirrorSign sign);

// Generalized kernel of the finite source: integral of rho(u) G+-(r+u, r')
// over the source cloud around the field point. Dirac reduces to spherical_g
// exactly. err_estimate (optional) receives the node-refinement difference.
std::complex<double> generalized_g(const SourceDistribution& dist, const Vec3& r,
                                   const Vec3& rp, double k, MirrorSign sign,
                                   double* err_estimate = nullptr);

// |int U(r') rho(r - r') dv' - U(r)|, the residual of the sifting identity.
double sifting_residual(const SourceDistribution& dist,
                        const std::function<std::complex<double>(const Vec3&)>& u,
                        const Vec3& r, double k_scale);

struct KernelShapeReport {
  std::vector<double> x;                      // transverse positions, meters
  std::vector<std::complex<double>> dgdn;     // normal derivative on Sigma
  std::vector<double> phase;                  // unwrapped from the axis outward
  double phase_rms_vs_spherical = 0.0;        // radians
  double phase_rms_vs_parabolic = 0.0;        // radians
};

// Unwrapped phase of dG-/dn' (source point on Sigma at the origin) along the
// line (x, 0, z), least-squares fitted (free constant) against the spherical
// phase k*r and the parabolic phase k*(z + x^2/2z).
KernelShapeReport kernel_shape_compare(const SourceDistribution& dist, double z,
                                       double half_window, std::size_t n_points, double k);

}  // namespace fropt
