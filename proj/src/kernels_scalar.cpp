#include <cmath>

#include "fropt/kernels.hpp"

namespace fropt::kernels::detail {

// Phase evaluated as fma(fma(a, j, b), j, c) so scalar and vector paths share
// the same polynomial ordering; the remaining difference is the sincos itself.

void cis_quad_scalar(std::complex<double>* out, std::size_t n, double a, double b, double c) {
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(i);
    const double phase = std::fma(std::fma(a, j, b), j, c);
    out[i] = {std::cos(phase), std::sin(phase)};
  }
}

std::complex<double> chirp_accum_scalar(const double* re, const double* im, std::size_t n,
                                        double a, double b, double c) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double j = static_cast<double>(i);
    const double phase = std::fma(std::fma(a, j, b), j, c);
    const double cs = std::cos(phase);
    const double sn = std::sin(phase);
    acc_re += re[i] * cs - im[i] * sn;
    acc_im += re[i] * sn + im[i] * cs;
  }
  return {acc_re, acc_im};
}

std::complex<double> rs_accum_scalar(const double* re, const double* im, std::size_t n,
                                     double d0, double dx, double z, double k) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fma(-dx, static_cast<double>(i), d0);
    const double d2 = d * d;
    const double r = std::sqrt(std::fma(z, z, d2));
    const double phase = k * (d2 / (r + z));
    const double amp = z / (r * std::sqrt(r));
    const double cs = amp * std::cos(phase);
    const double sn = amp * std::sin(phase);
    acc_re += re[i] * cs - im[i] * sn;
    acc_im += re[i] * sn + im[i] * cs;
  }
  return {acc_re, acc_im};
}

}  // namespace fropt::kernels::detail
