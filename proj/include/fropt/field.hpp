#pragma once

#include <complex>
#include <cstddef>
#include <variant>
#include <vector>

namespace fropt {

// Signed wavefront curvature radius, or flat (R = infinity). Stored tagged so
// no 1/inf arithmetic ever happens; positive radius means the center lies in
// the propagation direction.
class Curvature {
 public:
  static Curvature flat() { return Curvature(); }
  static Curvature finite(double radius_m);

  bool is_flat() const { return flat_; }
  double radius() const;           // throws for flat
  double inverse() const { return flat_ ? 0.0 : 1.0 / radius_; }

  bool operator==(const Curvature&) const = default;

 private:
  Curvature() = default;
  bool flat_ = true;
  double radius_ = 0.0;
};

// Uniformly sampled complex transverse amplitude; coordinates are
// x_j = x0 + j*dx. One-dimensional throughout.
struct SampledField {
  std::vector<std::complex<double>> samples;
  double dx = 0.0;          // grid pitch, meters
  double x0 = 0.0;          // first sample coordinate, meters
  double wavelength = 0.0;  // meters
  Curvature curvature = Curvature::flat();

  std::size_t size() const { return samples.size(); }
  double coord(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
  double window_end() const { return coord(size() - 1); }
};

// Validates the grid invariants (n >= 2, dx > 0, lambda > 0).
void validate_field(const SampledField& field);

// sum |u_j|^2 * dx
double energy(const SampledField& field);
double energy(const std::vector<std::complex<double>>& samples, double pitch);

struct RectSlit {
  double width = 0.0;  // full width, meters; edge samples on |x| == width/2 take value 1
};
struct Gaussian {
  double waist = 0.0;  // 1/e^2 intensity radius; amplitude exp(-x^2/w^2)
};
struct GaussianPair {
  double waist = 0.0;
  double separation = 0.0;      // peak-to-peak
  double relative_phase = 0.0;  // radians, applied to the -separation/2 lobe
};
struct CustomSamples {
  std::vector<std::complex<double>> samples;
};

struct SourceSpec {
  std::variant<RectSlit, Gaussian, GaussianPair, CustomSamples> shape;
  double amplitude = 1.0;
};

// Half-width of the declared support used by the window check; Gaussians use
// 3 waists past the outermost peak.
double source_support_halfwidth(const SourceSpec& spec);

SampledField render_source(const SourceSpec& spec, std::size_t n, double dx, double x0,
                           double wavelength);

// Linear interpolation onto the new grid; the target window must lie inside
// the source window. An identical grid returns a verbatim copy.
SampledField resample(const SampledField& field, std::size_t n, double dx, double x0);

}  // namespace fropt
