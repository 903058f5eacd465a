#include "fropt/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fropt/error.hpp"
#include "fropt/fft.hpp"
#include "fropt/frft.hpp"
#include "fropt/geometry.hpp"
#include "fropt/kernels.hpp"

namespace fropt {

namespace {

constexpr double kPi = std::numbers::pi;

// The input chirp e^{i(k/2)(1/z - 1/R_A)x'^2} must stay below the grid
// Nyquist rate across the window; critically sampled one-step grids sit at
// lhs = 1/2, so allow up to 2x coarser before calling it aliased.
void check_input_chirp(const SampledField& field, double z) {
  const double chirp_rate = std::abs(1.0 / z - field.curvature.inverse());
  const double x_max = std::max(std::abs(field.x0), std::abs(field.window_end()));
  const double lhs = chirp_rate * x_max * field.dx / field.wavelength;
  if (lhs > 1.0 + 1e-9)
    fail(ErrorCode::AliasedInput,
         "input quadratic phase exceeds the grid Nyquist rate (lhs = " +
             std::to_string(lhs) + ")");
}

SampledField fresnel_transform(const SampledField& field, double z, bool include_input_chirp) {
  validate_field(field);
  if (!(z > 0.0)) fail(ErrorCode::NonpositiveDistance, "z must be positive");
  if (include_input_chirp) check_input_chirp(field, z);

  const std::size_t n = field.size();
  const double lam = field.wavelength;
  const double k = 2.0 * kPi / lam;
  const double dx = field.dx;
  const double x0 = field.x0;
  const double dX = lam * z / (static_cast<double>(n) * dx);
  const double X0 = -std::floor(static_cast<double>(n) / 2.0) * dX;

  // g_j = U_j e^{i(k/2)(1/z - 1/R_A) x_j^2} e^{-i beta j}, with the linear
  // phases that realign the off-center grids onto the plain DFT.
  const double c2 = include_input_chirp ? (1.0 / z - field.curvature.inverse()) : 0.0;
  const double beta = 2.0 * kPi * X0 * dx / (lam * z);
  std::vector<std::complex<double>> work(n);
  {
    const double a = 0.5 * k * c2 * dx * dx;
    const double b = k * c2 * x0 * dx - beta;
    const double c = 0.5 * k * c2 * x0 * x0;
    kernels::cis_quad(work.data(), n, a, b, c);
    for (std::size_t j = 0; j < n; ++j) work[j] *= field.samples[j];
  }
  dft(work.data(), n, false);

  // Output chirp e^{i k x_m^2 / 2z} and the grid-offset linear phases.
  const double gamma = 2.0 * kPi * x0 * dX / (lam * z);
  const double phi0 = 2.0 * kPi * X0 * x0 / (lam * z);
  SampledField out;
  out.dx = dX;
  out.x0 = X0;
  out.wavelength = lam;
  out.curvature = Curvature::flat();
  out.samples.resize(n);
  {
    const double a = 0.5 * k * dX * dX / z;
    const double b = k * X0 * dX / z - gamma;
    const double c = 0.5 * k * X0 * X0 / z - phi0;
    kernels::cis_quad(out.samples.data(), n, a, b, c);
  }
  const std::complex<double> pref = std::polar(dx / std::sqrt(lam * z), -kPi / 4.0);
  for (std::size_t m = 0; m < n; ++m) out.samples[m] = pref * out.samples[m] * work[m];
  return out;
}

}  // namespace

SampledField fresnel_direct(const SampledField& field, double z) {
  return fresnel_transform(field, z, true);
}

SampledField fraunhofer(const SampledField& field, double z) {
  return fresnel_transform(field, z, false);
}

SampledField fresnel_via_frft(const SampledField& field, double z, double r_a) {
  validate_field(field);
  const PropagationGeometry geom = geometry_from_z(z, r_a, field.wavelength);

  // Re-reference the input onto sphere A; exact, not an approximation.
  SampledField referenced = field;
  const double dc = 1.0 / r_a - field.curvature.inverse();
  if (dc != 0.0) {
    const double k = 2.0 * kPi / field.wavelength;
    std::vector<std::complex<double>> chirp(field.size());
    const double a = 0.5 * k * dc * field.dx * field.dx;
    const double b = k * dc * field.x0 * field.dx;
    const double c = 0.5 * k * dc * field.x0 * field.x0;
    kernels::cis_quad(chirp.data(), field.size(), a, b, c);
    for (std::size_t j = 0; j < field.size(); ++j) referenced.samples[j] *= chirp[j];
    referenced.curvature = Curvature::finite(r_a);
  }

  ReducedSignal reduced = reduce_field(referenced, geom);
  ReducedSignal transformed = frft_composed(reduced, FractionalOrder(geom.alpha));
  // e^{-i alpha/2}: the Fresnel integral carries the paper-normalized kernel.
  const std::complex<double> phase = std::polar(1.0, -0.5 * geom.alpha);
  for (auto& u : transformed.samples) u *= phase;
  return unreduce_field(transformed, geom);
}

SampledField rayleigh_sommerfeld(const SampledField& field, double z,
                                 const RsOptions& options) {
  validate_field(field);
  if (!(z > 0.0)) fail(ErrorCode::NonpositiveDistance, "z must be positive");
  const double k = 2.0 * kPi / field.wavelength;
  if (k * z < 100.0)
    fail(ErrorCode::KrTooSmall,
         "k*z = " + std::to_string(k * z) + " < 100; asymptotic kernel invalid");
  if (options.oversample < 1) fail(ErrorCode::InvalidSpec, "oversample must be >= 1");
  if (!field.curvature.is_flat())
    fail(ErrorCode::InvalidSpec, "oracle takes plane-referenced input");

  // Midpoint subdivision of each input cell: preserves sum(u)*dx exactly for
  // piecewise-constant data and resolves the kernel chirp.
  const std::size_t n = field.size();
  const int ov = options.oversample;
  const std::size_t nf = n * static_cast<std::size_t>(ov);
  const double dxf = field.dx / ov;
  const double xf0 = field.x0 - field.dx / 2.0 + dxf / 2.0;
  std::vector<double> re(nf);
  std::vector<double> im(nf);
  for (std::size_t j = 0; j < n; ++j)
    for (int t = 0; t < ov; ++t) {
      re[j * ov + t] = field.samples[j].real();
      im[j * ov + t] = field.samples[j].imag();
    }

  SampledField out;
  out.dx = field.dx;
  out.x0 = field.x0;
  out.wavelength = field.wavelength;
  out.curvature = Curvature::flat();
  out.samples.resize(n);
  const std::complex<double> pref = std::polar(dxf / std::sqrt(field.wavelength), -kPi / 4.0);
  for (std::size_t m = 0; m < n; ++m) {
    const double xm = field.x0 + static_cast<double>(m) * field.dx;
    out.samples[m] = pref * kernels::rs_accum(re.data(), im.data(), nf, xm - xf0, dxf, z, k);
  }
  return out;
}

std::vector<double> local_maxima(const std::vector<double>& values, double x0, double dx,
                                 double prominence_fraction) {
  std::vector<double> out;
  if (values.size() < 3) return out;
  const double peak = *std::max_element(values.begin(), values.end());
  if (!(peak > 0.0)) return out;
  const std::size_t n = values.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    if (!(values[m] > values[m - 1] && values[m] >= values[m + 1])) continue;
    // prominence: drop to the higher of the two flanking valley floors before
    // a taller sample is reached
    double left_min = values[m];
    bool left_open = true;
    for (std::size_t j = m; j-- > 0;) {
      if (values[j] > values[m]) {
        left_open = false;
        break;
      }
      left_min = std::min(left_min, values[j]);
    }
    double right_min = values[m];
    bool right_open = true;
    for (std::size_t j = m + 1; j < n; ++j) {
      if (values[j] > values[m]) {
        right_open = false;
        break;
      }
      right_min = std::min(right_min, values[j]);
    }
    double floor;
    if (left_open && right_open)
      floor = std::min(left_min, right_min);  // global maximum
    else if (left_open)
      floor = right_min;
    else if (right_open)
      floor = left_min;
    else
      floor = std::max(left_min, right_min);
    if (values[m] - floor < prominence_fraction * peak) continue;
    const double denom = values[m - 1] - 2.0 * values[m] + values[m + 1];
    const double shift = (denom != 0.0) ? 0.5 * (values[m - 1] - values[m + 1]) / denom : 0.0;
    out.push_back(x0 + (static_cast<double>(m) + shift) * dx);
  }
  return out;
}

FieldComparison compare_fields(const SampledField& a, const SampledField& b) {
  validate_field(a);
  validate_field(b);
  const double lo = std::max(a.x0, b.x0);
  const double hi = std::min(a.window_end(), b.window_end());
  if (!(lo < hi)) fail(ErrorCode::GridMismatch, "field windows do not overlap");

  // Evaluate both intensities on a's grid restricted to the overlap.
  const std::size_t m_lo = static_cast<std::size_t>(std::ceil((lo - a.x0) / a.dx - 1e-9));
  const std::size_t m_hi = static_cast<std::size_t>(std::floor((hi - a.x0) / a.dx + 1e-9));
  if (m_hi <= m_lo + 1) fail(ErrorCode::GridMismatch, "overlap narrower than two samples");
  const std::size_t count = m_hi - m_lo + 1;

  std::vector<double> ia(count);
  std::vector<double> ib(count);
  const bool same_grid = (a.size() == b.size()) &&
                         std::abs(a.dx - b.dx) <= 1e-9 * a.dx &&
                         std::abs(a.x0 - b.x0) <= 1e-9 * a.dx;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t m = m_lo + i;
    ia[i] = std::norm(a.samples[m]);
    if (same_grid) {
      ib[i] = std::norm(b.samples[m]);
    } else {
      const double x = a.x0 + static_cast<double>(m) * a.dx;
      const double t = (x - b.x0) / b.dx;
      std::size_t j = static_cast<std::size_t>(std::max(0.0, t));
      if (j >= b.size() - 1) j = b.size() - 2;
      const double frac = t - static_cast<double>(j);
      ib[i] = std::norm(b.samples[j]) * (1.0 - frac) + std::norm(b.samples[j + 1]) * frac;
    }
  }

  FieldComparison cmp;
  double diff2 = 0.0;
  double ref2 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double d = ia[i] - ib[i];
    diff2 += d * d;
    ref2 += ib[i] * ib[i];
    cmp.max_abs_intensity_diff = std::max(cmp.max_abs_intensity_diff, std::abs(d));
  }
  cmp.rel_l2_intensity = (ref2 > 0.0) ? std::sqrt(diff2 / ref2) : std::sqrt(diff2);

  const double ox0 = a.x0 + static_cast<double>(m_lo) * a.dx;
  const std::vector<double> ma = local_maxima(ia, ox0, a.dx);
  const std::vector<double> mb = local_maxima(ib, ox0, a.dx);
  // mutual nearest-neighbor pairing
  for (std::size_t i = 0; i < ma.size(); ++i) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const double d = std::abs(ma[i] - mb[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    if (mb.empty()) break;
    bool mutual = true;
    for (std::size_t i2 = 0; i2 < ma.size(); ++i2)
      if (std::abs(ma[i2] - mb[best]) < best_d) {
        mutual = false;
        break;
      }
    if (mutual) {
      cmp.extrema_offsets.push_back(ma[i] - mb[best]);
      ++cmp.matched_extrema;
    } else {
      ++cmp.unmatched_a;
    }
  }
  cmp.unmatched_b = mb.size() - cmp.matched_extrema;
  return cmp;
}

}  // namespace fropt
