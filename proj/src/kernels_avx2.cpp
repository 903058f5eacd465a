#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "fropt/kernels.hpp"

namespace fropt::kernels::detail {

namespace {

// Cody-Waite pi/2 triple; FMA keeps each subtraction to one rounding.
constexpr double kPio2A = 1.5707963267948966;
constexpr double kPio2B = 6.123233995736766e-17;
constexpr double kPio2C = -1.4973849048591698e-33;
constexpr double kTwoOverPi = 0.6366197723675814;
// Reduction is accurate for |x| below ~2^26; larger arguments take the libm path.
constexpr double kMaxVecArg = 67108864.0;

// fdlibm kernel polynomial coefficients on [-pi/4, pi/4].
constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

struct SinCos4 {
  __m256d s;
  __m256d c;
};

inline SinCos4 sincos4(__m256d x) {
  const __m256d q = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fmadd_pd(q, _mm256_set1_pd(-kPio2A), x);
  r = _mm256_fmadd_pd(q, _mm256_set1_pd(-kPio2B), r);
  r = _mm256_fmadd_pd(q, _mm256_set1_pd(-kPio2C), r);

  const __m256d r2 = _mm256_mul_pd(r, r);

  __m256d sp = _mm256_set1_pd(kS6);
  sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kS5));
  sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kS4));
  sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kS3));
  sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kS2));
  sp = _mm256_fmadd_pd(sp, r2, _mm256_set1_pd(kS1));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(sp, r2), r, r);

  __m256d cp = _mm256_set1_pd(kC6);
  cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kC5));
  cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kC4));
  cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kC3));
  cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kC2));
  cp = _mm256_fmadd_pd(cp, r2, _mm256_set1_pd(kC1));
  const __m256d r4 = _mm256_mul_pd(r2, r2);
  __m256d cos_r = _mm256_fmadd_pd(cp, r4, _mm256_fnmadd_pd(r2, _mm256_set1_pd(0.5),
                                                           _mm256_set1_pd(1.0)));

  // Quadrant fixup: q mod 4 decides swap and sign flips.
  const __m128i qi = _mm256_cvtpd_epi32(q);
  const __m256i q64 = _mm256_cvtepi32_epi64(qi);
  const __m256i bit0 = _mm256_and_si256(q64, _mm256_set1_epi64x(1));
  const __m256i bit1 = _mm256_and_si256(_mm256_srli_epi64(q64, 1), _mm256_set1_epi64x(1));
  const __m256d swap_mask =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit0, _mm256_set1_epi64x(1)));
  const __m256d sin_sign =
      _mm256_castsi256_pd(_mm256_slli_epi64(bit1, 63));
  const __m256d cos_sign =
      _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_xor_si256(bit0, bit1), 63));

  SinCos4 out;
  out.s = _mm256_xor_pd(_mm256_blendv_pd(sin_r, cos_r, swap_mask), sin_sign);
  out.c = _mm256_xor_pd(_mm256_blendv_pd(cos_r, sin_r, swap_mask), cos_sign);
  return out;
}

inline __m256d phase4(std::size_t i, __m256d a, __m256d b, __m256d c) {
  const double j0 = static_cast<double>(i);
  const __m256d j = _mm256_add_pd(_mm256_set1_pd(j0), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
  return _mm256_fmadd_pd(_mm256_fmadd_pd(a, j, b), j, c);
}

inline bool args_in_range(__m256d phase) {
  const __m256d abs = _mm256_andnot_pd(_mm256_set1_pd(-0.0), phase);
  return _mm256_movemask_pd(_mm256_cmp_pd(abs, _mm256_set1_pd(kMaxVecArg), _CMP_GE_OQ)) == 0;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cis_quad_avx2(std::complex<double>* out, std::size_t n, double a, double b, double c) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d phase = phase4(i, va, vb, vc);
    if (!args_in_range(phase)) break;
    const SinCos4 sc = sincos4(phase);
    // interleave (cos, sin) pairs into complex layout
    const __m256d lo = _mm256_unpacklo_pd(sc.c, sc.s);  // c0 s0 c2 s2
    const __m256d hi = _mm256_unpackhi_pd(sc.c, sc.s);  // c1 s1 c3 s3
    _mm256_storeu_pd(reinterpret_cast<double*>(out + i), _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(reinterpret_cast<double*>(out + i + 2),
                     _mm256_permute2f128_pd(lo, hi, 0x31));
  }
  for (; i < n; ++i) {
    const double j = static_cast<double>(i);
    const double phase = std::fma(std::fma(a, j, b), j, c);
    out[i] = {std::cos(phase), std::sin(phase)};
  }
}

std::complex<double> chirp_accum_avx2(const double* re, const double* im, std::size_t n,
                                      double a, double b, double c) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vc = _mm256_set1_pd(c);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d phase = phase4(i, va, vb, vc);
    if (!args_in_range(phase)) break;
    const SinCos4 sc = sincos4(phase);
    const __m256d vre = _mm256_loadu_pd(re + i);
    const __m256d vim = _mm256_loadu_pd(im + i);
    acc_re = _mm256_fmadd_pd(vre, sc.c, _mm256_fnmadd_pd(vim, sc.s, acc_re));
    acc_im = _mm256_fmadd_pd(vre, sc.s, _mm256_fmadd_pd(vim, sc.c, acc_im));
  }
  double sum_re = hsum(acc_re);
  double sum_im = hsum(acc_im);
  for (; i < n; ++i) {
    const double j = static_cast<double>(i);
    const double phase = std::fma(std::fma(a, j, b), j, c);
    const double cs = std::cos(phase);
    const double sn = std::sin(phase);
    sum_re += re[i] * cs - im[i] * sn;
    sum_im += re[i] * sn + im[i] * cs;
  }
  return {sum_re, sum_im};
}

std::complex<double> rs_accum_avx2(const double* re, const double* im, std::size_t n,
                                   double d0, double dx, double z, double k) {
  const __m256d vd0 = _mm256_set1_pd(d0);
  const __m256d vdx = _mm256_set1_pd(dx);
  const __m256d vz = _mm256_set1_pd(z);
  const __m256d vk = _mm256_set1_pd(k);
  const __m256d vz2 = _mm256_set1_pd(z * z);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const double j0 = static_cast<double>(i);
    const __m256d j = _mm256_add_pd(_mm256_set1_pd(j0), _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
    const __m256d d = _mm256_fnmadd_pd(vdx, j, vd0);
    const __m256d d2 = _mm256_mul_pd(d, d);
    const __m256d r = _mm256_sqrt_pd(_mm256_add_pd(vz2, d2));
    const __m256d phase =
        _mm256_mul_pd(vk, _mm256_div_pd(d2, _mm256_add_pd(r, vz)));
    if (!args_in_range(phase)) break;
    const __m256d amp = _mm256_div_pd(vz, _mm256_mul_pd(r, _mm256_sqrt_pd(r)));
    const SinCos4 sc = sincos4(phase);
    const __m256d cs = _mm256_mul_pd(amp, sc.c);
    const __m256d sn = _mm256_mul_pd(amp, sc.s);
    const __m256d vre = _mm256_loadu_pd(re + i);
    const __m256d vim = _mm256_loadu_pd(im + i);
    acc_re = _mm256_fmadd_pd(vre, cs, _mm256_fnmadd_pd(vim, sn, acc_re));
    acc_im = _mm256_fmadd_pd(vre, sn, _mm256_fmadd_pd(vim, cs, acc_im));
  }
  double sum_re = hsum(acc_re);
  double sum_im = hsum(acc_im);
  for (; i < n; ++i) {
    const double d = std::fma(-dx, static_cast<double>(i), d0);
    const double d2 = d * d;
    const double r = std::sqrt(std::fma(z, z, d2));
    const double phase = k * (d2 / (r + z));
    const double amp = z / (r * std::sqrt(r));
    const double cs = amp * std::cos(phase);
    const double sn = amp * std::sin(phase);
    sum_re += re[i] * cs - im[i] * sn;
    sum_im += re[i] * sn + im[i] * cs;
  }
  return {sum_re, sum_im};
}

}  // namespace fropt::kernels::detail

#endif  // x86_64
