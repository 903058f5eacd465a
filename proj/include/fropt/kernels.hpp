#pragma once

#include <complex>
#include <cstddef>

// Hot inner loops shared by the quadrature propagators. Each kernel has a
// scalar reference implementation and an AVX2+FMA variant; the active one is
// picked at runtime from CPU features (or forced, for equivalence tests).
// Scalar and SIMD paths are equivalence-tested, not bitwise-identical: the
// vector path carries its own sincos with a different rounding pattern.

namespace fropt::kernels {

enum class Isa { automatic, scalar, avx2 };

// Forcing an unavailable ISA falls back to scalar.
void force_isa(Isa isa);
const char* active_isa();

// out[j] = exp(i*(a*j^2 + b*j + c)), j = 0..n-1
void cis_quad(std::complex<double>* out, std::size_t n, double a, double b, double c);

// sum_j (re[j] + i*im[j]) * exp(i*(a*j^2 + b*j + c))
std::complex<double> chirp_accum(const double* re, const double* im, std::size_t n,
                                 double a, double b, double c);

// Rayleigh-Sommerfeld row:
//   sum_j (re[j] + i*im[j]) * (z/r)/sqrt(r) * exp(i*k*d^2/(r+z))
// with d = d0 - j*dx and r = sqrt(z^2 + d^2). The phase is k*(r-z) computed
// in the cancellation-free form d^2/(r+z).
std::complex<double> rs_accum(const double* re, const double* im, std::size_t n,
                              double d0, double dx, double z, double k);

namespace detail {
void cis_quad_scalar(std::complex<double>* out, std::size_t n, double a, double b, double c);
std::complex<double> chirp_accum_scalar(const double* re, const double* im, std::size_t n,
                                        double a, double b, double c);
std::complex<double> rs_accum_scalar(const double* re, const double* im, std::size_t n,
                                     double d0, double dx, double z, double k);
#if defined(__x86_64__) || defined(_M_X64)
void cis_quad_avx2(std::complex<double>* out, std::size_t n, double a, double b, double c);
std::complex<double> chirp_accum_avx2(const double* re, const double* im, std::size_t n,
                                      double a, double b, double c);
std::complex<double> rs_accum_avx2(const double* re, const double* im, std::size_t n,
                                   double d0, double dx, double z, double k);
#endif
}  // namespace detail

}  // namespace fropt::kernels
