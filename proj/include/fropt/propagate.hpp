#pragma once

#include <cstddef>
#include <vector>

#include "fropt/field.hpp"

namespace fropt {

// One-step Fresnel integral (chirp * FFT * chirp on the native grid):
//   U(x,z) = (1/(i lam z))^{1/2} e^{i k x^2 / 2z}
//            * int e^{i (k/2)(1/z - 1/R_A) x'^2} e^{-i (k/z) x x'} U(x',0) dx'
// with the constant e^{ikz} dropped. R_A is the input field's curvature
// (flat contributes nothing). Output pitch is lam*z/(n*dx); the result is
// referenced to a flat surface and conserves energy exactly (Parseval).
SampledField fresnel_direct(const SampledField& field, double z);

// Far-field special case: same transform without the input quadratic phase.
SampledField fraunhofer(const SampledField& field, double z);

// reduce -> F_alpha -> unreduce route through the fractional transform. r_a
// picks the metaxial reference sphere (the output is referenced to
// R_B = -r_a); a flat-referenced input is re-referenced exactly by the
// quadratic phase e^{+i k x'^2 / 2 R_A} first, so any admissible r_a yields
// the same intensity.
SampledField fresnel_via_frft(const SampledField& field, double z, double r_a);

struct RsOptions {
  int oversample = 4;  // midpoint subdivisions per input cell
};

// Direct-integration Rayleigh-Sommerfeld oracle (first kind, large-kr
// asymptotic line kernel):
//   U(x,z) = (1/(i lam))^{1/2} sum U(x') (z/r) e^{i k (r - z)} / sqrt(r) dx'
// with r = sqrt(z^2 + (x-x')^2); e^{ikz} dropped to match fresnel_direct.
// Output grid equals the input grid. O(N^2).
SampledField rayleigh_sommerfeld(const SampledField& field, double z,
                                 const RsOptions& options = {});

struct FieldComparison {
  double rel_l2_intensity = 0.0;
  double max_abs_intensity_diff = 0.0;
  std::vector<double> extrema_offsets;  // meters, one per mutually paired maximum
  std::size_t matched_extrema = 0;
  std::size_t unmatched_a = 0;
  std::size_t unmatched_b = 0;
};

// Intensity-based comparison over the common window (b resampled onto a's
// grid when they differ). Local maxima are prominence-filtered and paired
// mutually-nearest; global phases never matter.
FieldComparison compare_fields(const SampledField& a, const SampledField& b);

// Prominence-filtered local maxima of a sampled curve, positions refined by
// parabolic interpolation. Shared by compare_fields and the test suites.
std::vector<double> local_maxima(const std::vector<double>& values, double x0, double dx,
                                 double prominence_fraction = 0.02);

}  // namespace fropt
