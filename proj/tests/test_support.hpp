#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "fropt/fft.hpp"
#include "fropt/frft_types.hpp"

namespace testsup {

inline constexpr double kPi = std::numbers::pi;

// Deterministic generator for test data (same engine the counting module
// documents, reimplemented here so tests stay independent of the library).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
  double normal() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * kPi * v);
  }
  std::complex<double> cnormal() { return {normal(), normal()}; }

 private:
  std::uint64_t state_;
};

inline fropt::ReducedSignal centered_grid(std::size_t n, double dp) {
  fropt::ReducedSignal s;
  s.dp = dp;
  s.p0 = -std::floor(static_cast<double>(n) / 2.0) * dp;
  s.samples.assign(n, {0.0, 0.0});
  return s;
}

inline fropt::ReducedSignal canonical_grid(std::size_t n) {
  return centered_grid(n, 1.0 / std::sqrt(static_cast<double>(n)));
}

// Random complex signal confined to a phase-space disk: white noise shaped by
// a gaussian envelope in space, low-passed, and re-windowed. r_frac is the
// disk radius as a fraction of the grid's half-extent.
inline fropt::ReducedSignal admissible_signal(std::size_t n, double dp, std::uint64_t seed,
                                              double r_frac = 0.2) {
  fropt::ReducedSignal s = centered_grid(n, dp);
  Rng rng(seed);
  const double extent = static_cast<double>(n) * dp;
  const double sr = r_frac * extent / 2.0;  // spatial radius
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = s.coord(j);
    s.samples[j] = rng.cnormal() * std::exp(-rho * rho / (2.0 * (sr / 2.0) * (sr / 2.0)));
  }
  // band-limit with a gaussian in frequency (wrap-around FFT frequencies)
  const std::size_t L = fropt::next_pow2(n);
  std::vector<std::complex<double>> buf(L, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) buf[j] = s.samples[j];
  fropt::Fft fft(L);
  fft.forward(buf.data());
  const double br = r_frac / (2.0 * dp);
  for (std::size_t j = 0; j < L; ++j) {
    double nu = static_cast<double>(j) / (static_cast<double>(L) * dp);
    if (j > L / 2) nu -= 1.0 / dp;
    buf[j] *= std::exp(-nu * nu / (2.0 * (br / 2.0) * (br / 2.0)));
  }
  fft.inverse(buf.data());
  double norm2 = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = s.coord(j);
    s.samples[j] = buf[j] * std::exp(-rho * rho / (2.0 * sr * sr));
    norm2 += std::norm(s.samples[j]);
  }
  const double scale = 1.0 / std::sqrt(norm2 * dp);
  for (auto& u : s.samples) u *= scale;
  return s;
}

inline double rel_l2(const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b) {
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += std::norm(a[i] - b[i]);
    ref += std::norm(b[i]);
  }
  return std::sqrt(diff / ref);
}

inline double rel_l2_intensity(const std::vector<std::complex<double>>& a,
                               const std::vector<std::complex<double>>& b) {
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::norm(a[i]) - std::norm(b[i]);
    diff += d * d;
    ref += std::norm(b[i]) * std::norm(b[i]);
  }
  return std::sqrt(diff / ref);
}

// O(N^2) quadrature of the plain Fourier kernel exp(-2 pi i rho sigma); on
// the canonical grid this is the centered unitary DFT.
inline fropt::ReducedSignal dft_oracle(const fropt::ReducedSignal& in) {
  const std::size_t n = in.size();
  fropt::ReducedSignal out = in;
  for (std::size_t m = 0; m < n; ++m) {
    std::complex<double> acc{0.0, 0.0};
    const double sigma = in.coord(m);
    for (std::size_t j = 0; j < n; ++j) {
      const double angle = -2.0 * kPi * in.coord(j) * sigma;
      acc += in.samples[j] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out.samples[m] = acc * in.dp;
  }
  return out;
}

}  // namespace testsup
