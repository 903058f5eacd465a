#include "fropt/counting.hpp"

#include <algorithm>
#include <cmath>

#include "fropt/error.hpp"

namespace fropt {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  // 53 random bits into (0, 1); the +0.5 offset keeps 0 out.
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  // One splitmix step over a seed/index mix; streams are as independent as
  // the generator's avalanche.
  SplitMix64 mixer(seed ^ (0xA0761D6478BD642Full * (index + 1)));
  return mixer.next();
}

std::uint64_t poisson_sample(double mean, SplitMix64& rng) {
  if (!(mean >= 0.0)) fail(ErrorCode::InvalidSpec, "Poisson mean must be >= 0");
  std::uint64_t total = 0;
  constexpr double kChunk = 500.0;  // e^-500 is still a normal double
  while (mean > kChunk) {
    total += poisson_sample(kChunk, rng);
    mean -= kChunk;
  }
  const double threshold = std::exp(-mean);
  double product = rng.next_double();
  std::uint64_t count = 0;
  while (product > threshold) {
    ++count;
    product *= rng.next_double();
  }
  return total + count;
}

double integrate_detector(const SampledField& field_at_z, double center, double width) {
  validate_field(field_at_z);
  if (!(width > 0.0)) fail(ErrorCode::InvalidSpec, "detector width must be positive");
  const double lo = center - width / 2.0;
  const double hi = center + width / 2.0;
  if (lo < field_at_z.x0 || hi > field_at_z.window_end())
    fail(ErrorCode::OutOfWindow, "detector window extends outside the field grid");

  // Piecewise-linear intensity integrated exactly over [lo, hi].
  const auto intensity = [&](std::size_t j) { return std::norm(field_at_z.samples[j]); };
  const auto value_at = [&](double x) {
    const double t = (x - field_at_z.x0) / field_at_z.dx;
    std::size_t j = static_cast<std::size_t>(t);
    if (j >= field_at_z.size() - 1) j = field_at_z.size() - 2;
    const double frac = t - static_cast<double>(j);
    return intensity(j) * (1.0 - frac) + intensity(j + 1) * frac;
  };

  const double t_lo = (lo - field_at_z.x0) / field_at_z.dx;
  const double t_hi = (hi - field_at_z.x0) / field_at_z.dx;
  const std::size_t first = static_cast<std::size_t>(std::ceil(t_lo - 1e-12));
  const std::size_t last = static_cast<std::size_t>(std::floor(t_hi + 1e-12));

  if (first > last) {
    // window inside a single cell
    return 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }

  double acc = 0.0;
  const double x_first = field_at_z.x0 + static_cast<double>(first) * field_at_z.dx;
  if (x_first > lo) acc += 0.5 * (value_at(lo) + intensity(first)) * (x_first - lo);
  for (std::size_t j = first; j < last; ++j)
    acc += 0.5 * (intensity(j) + intensity(j + 1)) * field_at_z.dx;
  const double x_last = field_at_z.x0 + static_cast<double>(last) * field_at_z.dx;
  if (hi > x_last) acc += 0.5 * (intensity(last) + value_at(hi)) * (hi - x_last);
  return acc;
}

DetectorScan simulate_scan(const SampledField& field_at_z, std::vector<double> positions,
                           double detector_width, double dwell_time, double rate_scale,
                           std::uint64_t seed) {
  if (!(dwell_time > 0.0)) fail(ErrorCode::InvalidSpec, "dwell time must be positive");
  if (rate_scale < 0.0) fail(ErrorCode::InvalidSpec, "rate scale must be >= 0");

  DetectorScan scan;
  scan.positions = std::move(positions);
  scan.detector_width = detector_width;
  scan.dwell_time = dwell_time;
  scan.rate_scale = rate_scale;
  scan.seed = seed;
  scan.expected.resize(scan.positions.size());
  scan.counts.resize(scan.positions.size());
  for (std::size_t i = 0; i < scan.positions.size(); ++i) {
    const double window = integrate_detector(field_at_z, scan.positions[i], detector_width);
    scan.expected[i] = rate_scale * dwell_time * window;
    SplitMix64 rng(derive_stream_seed(seed, i));
    scan.counts[i] = poisson_sample(scan.expected[i], rng);
  }
  return scan;
}

ChiSquare chi_square_fit(const DetectorScan& scan, const std::vector<double>& model) {
  if (model.size() != scan.counts.size())
    fail(ErrorCode::InvalidSpec, "model length does not match the scan");
  double model_total = 0.0;
  std::uint64_t count_total = 0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (model[i] < 0.0) fail(ErrorCode::InvalidSpec, "model entries must be >= 0");
    model_total += model[i];
    count_total += scan.counts[i];
  }
  if (count_total == 0 && model_total == 0.0) return {0.0, 1};
  if (!(model_total > 0.0)) fail(ErrorCode::DegenerateModel, "model sums to zero");

  const double scale = static_cast<double>(count_total) / model_total;
  constexpr double kMinExpected = 5.0;
  double statistic = 0.0;
  std::size_t bins = 0;
  double exp_acc = 0.0;
  double obs_acc = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    exp_acc += model[i] * scale;
    obs_acc += static_cast<double>(scan.counts[i]);
    if (exp_acc >= kMinExpected) {
      const double d = obs_acc - exp_acc;
      statistic += d * d / exp_acc;
      ++bins;
      exp_acc = 0.0;
      obs_acc = 0.0;
    }
  }
  if (bins == 0) fail(ErrorCode::DegenerateModel, "all expectations below the merge threshold");
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    // fold the remainder into the last bin
    const double d = obs_acc - exp_acc;
    if (exp_acc > 0.0) statistic += d * d / exp_acc;
  }
  ChiSquare result;
  result.statistic = statistic;
  result.dof = (bins > 1) ? bins - 1 : 1;
  return result;
}

double ks_distance(const std::vector<std::uint64_t>& counts, const std::vector<double>& model) {
  if (counts.size() != model.size() || counts.empty())
    fail(ErrorCode::InvalidSpec, "profiles must have equal nonzero length");
  double count_total = 0.0;
  double model_total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    count_total += static_cast<double>(counts[i]);
    model_total += model[i];
  }
  if (!(count_total > 0.0) || !(model_total > 0.0))
    fail(ErrorCode::DegenerateModel, "profiles must have positive totals");
  double cum_c = 0.0;
  double cum_m = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    cum_c += static_cast<double>(counts[i]) / count_total;
    cum_m += model[i] / model_total;
    worst = std::max(worst, std::abs(cum_c - cum_m));
  }
  return worst;
}

}  // namespace fropt
