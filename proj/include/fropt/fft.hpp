#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fropt {

// Iterative radix-2 transform with precomputed twiddles. Forward kernel is
// exp(-2*pi*i*j*m/n); inverse includes the 1/n factor.
class Fft {
 public:
  explicit Fft(std::size_t n);

  void forward(std::complex<double>* data) const;
  void inverse(std::complex<double>* data) const;

  std::size_t size() const { return n_; }

 private:
  void transform(std::complex<double>* data, bool conjugate) const;

  std::size_t n_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // exp(-2*pi*i*k/n), k < n/2
};

std::size_t next_pow2(std::size_t n);

// y_m = sum_j x_j exp(-2*pi*i*w*j*m) for m = 0..n-1 and arbitrary real w,
// via Bluestein's factorization (j*m = (j^2 + m^2 - (j-m)^2)/2) and a
// zero-padded circular convolution. With w = 1/n this is the plain DFT.
std::vector<std::complex<double>> chirp_cross_sum(std::span<const std::complex<double>> x,
                                                  double w);

// Length-n DFT/IDFT for any n (pow2 fast path, Bluestein otherwise).
void dft(std::complex<double>* data, std::size_t n, bool inverse);

}  // namespace fropt
