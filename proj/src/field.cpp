#include "fropt/field.hpp"

#include <cmath>
#include <string>

#include "fropt/error.hpp"

namespace fropt {

Curvature Curvature::finite(double radius_m) {
  if (radius_m == 0.0 || !std::isfinite(radius_m))
    fail(ErrorCode::InvalidSpec, "curvature radius must be finite and nonzero");
  Curvature c;
  c.flat_ = false;
  c.radius_ = radius_m;
  return c;
}

double Curvature::radius() const {
  if (flat_) fail(ErrorCode::InvalidSpec, "flat curvature has no finite radius");
  return radius_;
}

void validate_field(const SampledField& field) {
  if (field.size() < 2) fail(ErrorCode::InvalidSpec, "field needs at least 2 samples");
  if (!(field.dx > 0.0)) fail(ErrorCode::InvalidSpec, "grid pitch must be positive");
  if (!(field.wavelength > 0.0)) fail(ErrorCode::InvalidSpec, "wavelength must be positive");
}

double energy(const std::vector<std::complex<double>>& samples, double pitch) {
  double acc = 0.0;
  for (const auto& u : samples) acc += std::norm(u);
  return acc * pitch;
}

double energy(const SampledField& field) { return energy(field.samples, field.dx); }

double source_support_halfwidth(const SourceSpec& spec) {
  struct Visitor {
    double operator()(const RectSlit& s) const { return s.width / 2.0; }
    double operator()(const Gaussian& s) const { return 3.0 * s.waist; }
    double operator()(const GaussianPair& s) const {
      return s.separation / 2.0 + 3.0 * s.waist;
    }
    double operator()(const CustomSamples&) const { return 0.0; }
  };
  return std::visit(Visitor{}, spec.shape);
}

namespace {

void validate_spec(const SourceSpec& spec) {
  if (const auto* r = std::get_if<RectSlit>(&spec.shape)) {
    if (!(r->width > 0.0)) fail(ErrorCode::InvalidSpec, "rect_slit width must be positive");
  } else if (const auto* g = std::get_if<Gaussian>(&spec.shape)) {
    if (!(g->waist > 0.0)) fail(ErrorCode::InvalidSpec, "gaussian waist must be positive");
  } else if (const auto* p = std::get_if<GaussianPair>(&spec.shape)) {
    if (!(p->waist > 0.0)) fail(ErrorCode::InvalidSpec, "gaussian_pair waist must be positive");
    if (p->separation < 0.0) fail(ErrorCode::InvalidSpec, "separation must be >= 0");
  }
}

}  // namespace

SampledField render_source(const SourceSpec& spec, std::size_t n, double dx, double x0,
                           double wavelength) {
  validate_spec(spec);
  if (n < 2 || !(dx > 0.0)) fail(ErrorCode::InvalidSpec, "invalid render grid");
  if (!(wavelength > 0.0)) fail(ErrorCode::InvalidSpec, "wavelength must be positive");

  SampledField field;
  field.dx = dx;
  field.x0 = x0;
  field.wavelength = wavelength;
  field.curvature = Curvature::flat();

  if (const auto* c = std::get_if<CustomSamples>(&spec.shape)) {
    if (c->samples.size() != n)
      fail(ErrorCode::InvalidSpec, "custom sample count does not match grid");
    field.samples = c->samples;
    if (spec.amplitude != 1.0)
      for (auto& u : field.samples) u *= spec.amplitude;
    return field;
  }

  const double half_support = source_support_halfwidth(spec);
  const double x_end = x0 + static_cast<double>(n - 1) * dx;
  if (x0 > -half_support || x_end < half_support)
    fail(ErrorCode::GridTooNarrow, "grid window [" + std::to_string(x0) + ", " +
                                       std::to_string(x_end) + "] does not contain support +-" +
                                       std::to_string(half_support));

  field.samples.resize(n);
  const double amp = spec.amplitude;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x0 + static_cast<double>(j) * dx;
    if (const auto* r = std::get_if<RectSlit>(&spec.shape)) {
      field.samples[j] = (std::abs(x) <= r->width / 2.0) ? amp : 0.0;
    } else if (const auto* g = std::get_if<Gaussian>(&spec.shape)) {
      field.samples[j] = amp * std::exp(-(x * x) / (g->waist * g->waist));
    } else {
      const auto& p = std::get<GaussianPair>(spec.shape);
      const double w2 = p.waist * p.waist;
      const double xp = x - p.separation / 2.0;
      const double xm = x + p.separation / 2.0;
      const std::complex<double> lobe_minus =
          std::polar(1.0, p.relative_phase) * std::exp(-(xm * xm) / w2);
      field.samples[j] = amp * (std::exp(-(xp * xp) / w2) + lobe_minus);
    }
  }
  return field;
}

SampledField resample(const SampledField& field, std::size_t n, double dx, double x0) {
  validate_field(field);
  if (n < 2 || !(dx > 0.0)) fail(ErrorCode::InvalidSpec, "invalid resample grid");

  SampledField out;
  out.dx = dx;
  out.x0 = x0;
  out.wavelength = field.wavelength;
  out.curvature = field.curvature;

  if (n == field.size() && dx == field.dx && x0 == field.x0) {
    out.samples = field.samples;
    return out;
  }

  const double x_end = x0 + static_cast<double>(n - 1) * dx;
  if (x0 < field.x0 || x_end > field.window_end())
    fail(ErrorCode::OutOfRange, "target grid extends outside the source window");

  out.samples.resize(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double x = x0 + static_cast<double>(m) * dx;
    const double t = (x - field.x0) / field.dx;
    std::size_t j = static_cast<std::size_t>(t);
    if (j >= field.size() - 1) j = field.size() - 2;
    const double frac = t - static_cast<double>(j);
    out.samples[m] = field.samples[j] * (1.0 - frac) + field.samples[j + 1] * frac;
  }
  return out;
}

}  // namespace fropt
