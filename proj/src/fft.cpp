#include "fropt/fft.hpp"

#include <cmath>
#include <numbers>

#include "fropt/error.hpp"
#include "fropt/kernels.hpp"

namespace fropt {

namespace {
constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Fft::Fft(std::size_t n) : n_(n) {
  if (!is_pow2(n)) fail(ErrorCode::InvalidSpec, "FFT size must be a power of two");
  bitrev_.resize(n);
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    bitrev_[i] = r;
  }
  twiddle_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    twiddle_[k] = {std::cos(ang), std::sin(ang)};
  }
}

void Fft::transform(std::complex<double>* data, bool conjugate) const {
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t j = bitrev_[i];
    if (j > i) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        std::complex<double> w = twiddle_[k * step];
        if (conjugate) w = std::conj(w);
        const std::complex<double> odd = data[start + k + half] * w;
        const std::complex<double> even = data[start + k];
        data[start + k] = even + odd;
        data[start + k + half] = even - odd;
      }
    }
  }
}

void Fft::forward(std::complex<double>* data) const { transform(data, false); }

void Fft::inverse(std::complex<double>* data) const {
  transform(data, true);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

std::vector<std::complex<double>> chirp_cross_sum(std::span<const std::complex<double>> x,
                                                  double w) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const std::size_t L = next_pow2(2 * n - 1);
  const Fft fft(L);

  // b_d = exp(+i*pi*w*d^2), symmetric in d, wrapped into length L.
  std::vector<std::complex<double>> b(L, {0.0, 0.0});
  std::vector<std::complex<double>> chirp(n);
  kernels::cis_quad(chirp.data(), n, kPi * w, 0.0, 0.0);
  b[0] = chirp[0];
  for (std::size_t d = 1; d < n; ++d) {
    b[d] = chirp[d];
    b[L - d] = chirp[d];
  }

  // a_j = x_j * exp(-i*pi*w*j^2), zero-padded.
  std::vector<std::complex<double>> a(L, {0.0, 0.0});
  std::vector<std::complex<double>> down(n);
  kernels::cis_quad(down.data(), n, -kPi * w, 0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * down[j];

  fft.forward(a.data());
  fft.forward(b.data());
  for (std::size_t i = 0; i < L; ++i) a[i] *= b[i];
  fft.inverse(a.data());

  std::vector<std::complex<double>> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = down[m] * a[m];
  return out;
}

void dft(std::complex<double>* data, std::size_t n, bool inverse) {
  if (n == 0) return;
  if (is_pow2(n)) {
    const Fft fft(n);
    if (inverse) {
      fft.inverse(data);
    } else {
      fft.forward(data);
    }
    return;
  }
  std::span<const std::complex<double>> in(data, n);
  if (!inverse) {
    auto out = chirp_cross_sum(in, 1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) data[i] = out[i];
  } else {
    auto out = chirp_cross_sum(in, -1.0 / static_cast<double>(n));
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) data[i] = out[i] * scale;
  }
}

}  // namespace fropt
