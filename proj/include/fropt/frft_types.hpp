#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fropt {

// Complex signal over a dimensionless coordinate rho_j = p0 + j*dp.
struct ReducedSignal {
  std::vector<std::complex<double>> samples;
  double dp = 0.0;
  double p0 = 0.0;

  std::size_t size() const { return samples.size(); }
  double coord(std::size_t j) const { return p0 + static_cast<double>(j) * dp; }
};

}  // namespace fropt
