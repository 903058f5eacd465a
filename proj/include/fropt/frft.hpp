#pragma once

#include <complex>

#include "fropt/frft_types.hpp"

namespace fropt {

// Orders below this |sin(alpha)| are flagged near-singular; the single-step
// kernels refuse them and frft_composed splits off a pi/2 factor instead.
inline constexpr double kSinMin = 0.05;

// Order reduced to the principal interval (-pi, pi].
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha_raw);

  double alpha() const { return alpha_; }
  bool near_singular() const;

 private:
  double alpha_;
};

// Left-hand side of the chirp Nyquist guard dp^2 * n * max(|cot|, 1/|sin|);
// inputs with lhs > kAliasGuard are rejected as AliasedInput.
inline constexpr double kAliasGuard = 4.0;
double aliasing_guard_lhs(const ReducedSignal& signal, double alpha);

// Transform kernel value (Namias normalization, unit-determinant branch):
//   A_alpha * exp(i pi [(rho^2 + sigma^2) cot(alpha) - 2 rho sigma / sin(alpha)])
// with A_alpha = exp(i (alpha/2 - sgn(sin) pi/4)) / sqrt(|sin|), so that
// F_0 = identity, F_{pi/2} = unitary Fourier transform, and additivity is
// exact. The kernel as printed in the optics literature differs by a global
// e^{-i alpha/2}; propagators apply that factor explicitly where the Fresnel
// correspondence needs it.
std::complex<double> frft_kernel(double rho, double sigma, double alpha);

// Direct O(N^2) quadrature of the kernel; output grid equals the input grid.
ReducedSignal frft_reference(const ReducedSignal& signal, const FractionalOrder& order);

// Chirp-multiply / scaled-Fourier / chirp-multiply (Bluestein) factorization
// of the same sum, O(N log N); equals frft_reference to FFT roundoff.
ReducedSignal frft_fast(const ReducedSignal& signal, const FractionalOrder& order);

// Total transform: exact identity at alpha = 0, exact (wrapped) parity at
// alpha = pi, a single fast pass for alpha in +-[pi/4, 3pi/4], and a pi/2
// split otherwise.
ReducedSignal frft_composed(const ReducedSignal& signal, const FractionalOrder& order);

// Harmonic-oscillator transition amplitude
//   (omega / (2 pi i hbar sin(omega t)))^{1/2}
//     * exp[(i/2hbar) omega ((q_i^2+q_f^2) cot(omega t) - 2 q_i q_f / sin(omega t))]
std::complex<double> harmonic_kernel(double q_i, double q_f, double omega, double t,
                                     double hbar);

// Evolves psi(q, 0) to psi(q, t) under the oscillator Hamiltonian by the
// reduced-variable transform with rho = sqrt(omega / 2 pi hbar) q.
ReducedSignal propagate_q(const ReducedSignal& psi_q, double omega, double t, double hbar);

}  // namespace fropt
