#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fropt/field.hpp"

namespace fropt {

// splitmix64: documented 64-bit generator; one independent stream per scan
// position derived from (seed, index) so sampling order never matters.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double next_double();  // uniform in (0, 1)

 private:
  std::uint64_t state_;
};

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

// Exact Poisson sampling: Knuth's product method, chunked through the
// additivity Poisson(a+b) = Poisson(a) + Poisson(b) to avoid exp underflow
// at large means.
std::uint64_t poisson_sample(double mean, SplitMix64& rng);

inline constexpr const char* kRngName = "splitmix64-knuth";

// Trapezoidal integral of |field|^2 over [center - width/2, center + width/2].
double integrate_detector(const SampledField& field_at_z, double center, double width);

struct DetectorScan {
  std::vector<double> positions;  // meters
  double detector_width = 0.0;    // meters
  double dwell_time = 0.0;        // seconds
  double rate_scale = 0.0;        // counts / (intensity * second)
  std::uint64_t seed = 0;
  std::string rng_name = kRngName;
  std::vector<double> expected;        // mean counts per position
  std::vector<std::uint64_t> counts;   // Poisson draws
};

DetectorScan simulate_scan(const SampledField& field_at_z, std::vector<double> positions,
                           double detector_width, double dwell_time, double rate_scale,
                           std::uint64_t seed);

struct ChiSquare {
  double statistic = 0.0;
  std::size_t dof = 0;

  double per_dof() const { return statistic / static_cast<double>(dof); }
};

// Pearson chi^2 of counts against the model window integrals (rescaled to the
// observed total); adjacent bins below an expectation of 5 are merged.
ChiSquare chi_square_fit(const DetectorScan& scan, const std::vector<double>& model);

// Kolmogorov-Smirnov distance between the two normalized cumulative profiles.
double ks_distance(const std::vector<std::uint64_t>& counts, const std::vector<double>& model);

}  // namespace fropt
