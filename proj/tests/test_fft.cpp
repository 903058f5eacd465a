#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "fropt/error.hpp"
#include "fropt/fft.hpp"
#include "test_support.hpp"

using namespace fropt;

namespace {

std::vector<std::complex<double>> naive_dft(const std::vector<std::complex<double>>& x,
                                            bool inverse) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t m = 0; m < n; ++m) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sign * 2.0 * testsup::kPi *
                         static_cast<double>((j * m) % n) / static_cast<double>(n);
      acc += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    if (inverse) acc /= static_cast<double>(n);
    out[m] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("radix-2 FFT matches the naive DFT") {
  for (const std::size_t n : {2u, 8u, 64u, 256u}) {
    testsup::Rng rng(n);
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = rng.cnormal();
    auto y = x;
    Fft fft(n);
    fft.forward(y.data());
    const auto ref = naive_dft(x, false);
    CHECK(testsup::rel_l2(y, ref) < 1e-12);
    fft.inverse(y.data());
    CHECK(testsup::rel_l2(y, x) < 1e-12);
  }
}

TEST_CASE("FFT rejects non-power-of-two sizes") {
  CHECK_THROWS_AS(Fft(48), Error);
}

TEST_CASE("chirp_cross_sum with w = 1/n equals the DFT") {
  const std::size_t n = 96;  // not a power of two
  testsup::Rng rng(7);
  std::vector<std::complex<double>> x(n);
  for (auto& v : x) v = rng.cnormal();
  const auto got = chirp_cross_sum(x, 1.0 / static_cast<double>(n));
  const auto ref = naive_dft(x, false);
  CHECK(testsup::rel_l2(got, ref) < 1e-12);
}

TEST_CASE("dft handles arbitrary lengths with round trip") {
  for (const std::size_t n : {5u, 96u, 128u, 321u}) {
    testsup::Rng rng(n * 13);
    std::vector<std::complex<double>> x(n);
    for (auto& v : x) v = rng.cnormal();
    auto y = x;
    dft(y.data(), n, false);
    const auto ref = naive_dft(x, false);
    CHECK(testsup::rel_l2(y, ref) < 1e-11);
    dft(y.data(), n, true);
    CHECK(testsup::rel_l2(y, x) < 1e-11);
  }
}
