#include "fropt/frft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fropt/error.hpp"
#include "fropt/fft.hpp"
#include "fropt/kernels.hpp"

namespace fropt {

namespace {

constexpr double kPi = std::numbers::pi;

double reduce_principal(double alpha) {
  double r = std::fmod(alpha, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  if (r > kPi) r -= 2.0 * kPi;
  return r;
}

std::complex<double> unit_phase(double alpha, double sin_a) {
  const double sign = (sin_a >= 0.0) ? 1.0 : -1.0;
  return std::polar(1.0, 0.5 * alpha - sign * kPi / 4.0);
}

void check_single_step(const ReducedSignal& signal, double alpha) {
  if (signal.size() < 2 || !(signal.dp > 0.0))
    fail(ErrorCode::InvalidSpec, "reduced signal needs n >= 2 and dp > 0");
  const double sin_a = std::sin(alpha);
  if (std::abs(sin_a) < kSinMin)
    fail(ErrorCode::NearSingularOrder,
         "|sin(alpha)| = " + std::to_string(std::abs(sin_a)) +
             " < " + std::to_string(kSinMin) + "; use frft_composed");
  const double lhs = aliasing_guard_lhs(signal, alpha);
  if (lhs > kAliasGuard)
    fail(ErrorCode::AliasedInput,
         "chirp Nyquist guard violated: dp^2*n*max(|cot|,1/|sin|) = " + std::to_string(lhs));
}

ReducedSignal parity(const ReducedSignal& signal) {
  // Wrapped reversal: out_j = in_{(n-j) mod n}. This is exactly F_{pi/2}
  // applied twice on the centered grid; for even n the lone edge sample
  // rho_0 = -(n/2) dp is its own periodic mirror.
  ReducedSignal out;
  out.dp = signal.dp;
  out.p0 = signal.p0;
  const std::size_t n = signal.size();
  out.samples.resize(n);
  out.samples[0] = signal.samples[0];
  for (std::size_t j = 1; j < n; ++j) out.samples[j] = signal.samples[n - j];
  return out;
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha_raw) : alpha_(reduce_principal(alpha_raw)) {}

bool FractionalOrder::near_singular() const { return std::abs(std::sin(alpha_)) < kSinMin; }

double aliasing_guard_lhs(const ReducedSignal& signal, double alpha) {
  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  const double inv_sin = 1.0 / std::abs(sin_a);
  const double cot = std::abs(cos_a) * inv_sin;
  return signal.dp * signal.dp * static_cast<double>(signal.size()) * std::max(cot, inv_sin);
}

std::complex<double> frft_kernel(double rho, double sigma, double alpha) {
  const double sin_a = std::sin(alpha);
  if (sin_a == 0.0) fail(ErrorCode::NearSingularOrder, "kernel undefined at sin(alpha) = 0");
  const double cot = std::cos(alpha) / sin_a;
  const double phase = kPi * ((rho * rho + sigma * sigma) * cot - 2.0 * rho * sigma / sin_a);
  return unit_phase(alpha, sin_a) / std::sqrt(std::abs(sin_a)) * std::polar(1.0, phase);
}

ReducedSignal frft_reference(const ReducedSignal& signal, const FractionalOrder& order) {
  const double alpha = order.alpha();
  check_single_step(signal, alpha);

  const std::size_t n = signal.size();
  const double dp = signal.dp;
  const double p0 = signal.p0;
  const double sin_a = std::sin(alpha);
  const double cot = std::cos(alpha) / sin_a;
  const std::complex<double> pref =
      unit_phase(alpha, sin_a) / std::sqrt(std::abs(sin_a)) * dp;

  std::vector<double> re(n);
  std::vector<double> im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = signal.samples[j].real();
    im[j] = signal.samples[j].imag();
  }

  ReducedSignal out;
  out.dp = dp;
  out.p0 = p0;
  out.samples.resize(n);
  const double a = kPi * cot * dp * dp;
  for (std::size_t m = 0; m < n; ++m) {
    const double sigma = p0 + static_cast<double>(m) * dp;
    const double b = 2.0 * kPi * dp * (cot * p0 - sigma / sin_a);
    const double c = kPi * (cot * (p0 * p0 + sigma * sigma) - 2.0 * p0 * sigma / sin_a);
    out.samples[m] = pref * kernels::chirp_accum(re.data(), im.data(), n, a, b, c);
  }
  return out;
}

ReducedSignal frft_fast(const ReducedSignal& signal, const FractionalOrder& order) {
  const double alpha = order.alpha();
  check_single_step(signal, alpha);

  const std::size_t n = signal.size();
  const double dp = signal.dp;
  const double p0 = signal.p0;
  const double sin_a = std::sin(alpha);
  const double cot = std::cos(alpha) / sin_a;
  const double w = dp * dp / sin_a;

  // Pre-phase on f_j: pi cot rho_j^2 - 2 pi (p0 dp / sin) j - pi w j^2.
  std::vector<std::complex<double>> work(n);
  {
    const double a = kPi * cot * dp * dp - kPi * w;
    const double b = 2.0 * kPi * p0 * dp * (cot - 1.0 / sin_a);
    const double c = kPi * cot * p0 * p0;
    kernels::cis_quad(work.data(), n, a, b, c);
    for (std::size_t j = 0; j < n; ++j) work[j] *= signal.samples[j];
  }

  // Circular convolution with the up-chirp e^{i pi w d^2}.
  const std::size_t L = next_pow2(2 * n - 1);
  const Fft fft(L);
  std::vector<std::complex<double>> a_pad(L, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) a_pad[j] = work[j];
  std::vector<std::complex<double>> b_pad(L, {0.0, 0.0});
  {
    std::vector<std::complex<double>> chirp(n);
    kernels::cis_quad(chirp.data(), n, kPi * w, 0.0, 0.0);
    b_pad[0] = chirp[0];
    for (std::size_t d = 1; d < n; ++d) {
      b_pad[d] = chirp[d];
      b_pad[L - d] = chirp[d];
    }
  }
  fft.forward(a_pad.data());
  fft.forward(b_pad.data());
  for (std::size_t i = 0; i < L; ++i) a_pad[i] *= b_pad[i];
  fft.inverse(a_pad.data());

  // Post-phase on m plus the constant -2 pi p0^2 / sin, then the prefactor.
  ReducedSignal out;
  out.dp = dp;
  out.p0 = p0;
  out.samples.resize(n);
  {
    const double a = kPi * cot * dp * dp - kPi * w;
    const double b = 2.0 * kPi * p0 * dp * (cot - 1.0 / sin_a);
    const double c = kPi * cot * p0 * p0 - 2.0 * kPi * p0 * p0 / sin_a;
    kernels::cis_quad(out.samples.data(), n, a, b, c);
  }
  const std::complex<double> pref =
      unit_phase(alpha, sin_a) / std::sqrt(std::abs(sin_a)) * dp;
  for (std::size_t m = 0; m < n; ++m) out.samples[m] = pref * out.samples[m] * a_pad[m];
  return out;
}

ReducedSignal frft_composed(const ReducedSignal& signal, const FractionalOrder& order) {
  const double alpha = order.alpha();
  if (alpha == 0.0) return signal;
  if (alpha == kPi) return parity(signal);

  const double sin_a = std::sin(alpha);
  const double cos_a = std::cos(alpha);
  if (std::abs(sin_a) >= std::sqrt(0.5) && std::abs(cos_a) <= std::abs(sin_a))
    return frft_fast(signal, FractionalOrder(alpha));

  const double half = (alpha > 0.0) ? kPi / 2.0 : -kPi / 2.0;
  const ReducedSignal mid = frft_fast(signal, FractionalOrder(half));
  return frft_fast(mid, FractionalOrder(alpha - half));
}

std::complex<double> harmonic_kernel(double q_i, double q_f, double omega, double t,
                                     double hbar) {
  if (!(omega > 0.0) || !(hbar > 0.0))
    fail(ErrorCode::InvalidSpec, "omega and hbar must be positive");
  const double sin_wt = std::sin(omega * t);
  if (sin_wt == 0.0) fail(ErrorCode::SingularTime, "sin(omega t) = 0");
  const double cot = std::cos(omega * t) / sin_wt;
  const std::complex<double> i_unit{0.0, 1.0};
  const std::complex<double> pref =
      std::sqrt(omega / (2.0 * kPi * i_unit * hbar * sin_wt));
  const double phase =
      0.5 * (omega / hbar) * ((q_i * q_i + q_f * q_f) * cot - 2.0 * q_i * q_f / sin_wt);
  return pref * std::polar(1.0, phase);
}

ReducedSignal propagate_q(const ReducedSignal& psi_q, double omega, double t, double hbar) {
  if (!(omega > 0.0) || !(hbar > 0.0))
    fail(ErrorCode::InvalidSpec, "omega and hbar must be positive");
  const double lambda_q = std::sqrt(2.0 * kPi * hbar / omega);  // q = lambda_q * rho
  const FractionalOrder order(omega * t);

  // The sqrt(lambda_q) amplitude normalization of the reduced wavefunction
  // cancels through the linear transform, so only the grid is relabeled.
  ReducedSignal reduced;
  reduced.dp = psi_q.dp / lambda_q;
  reduced.p0 = psi_q.p0 / lambda_q;
  reduced.samples = psi_q.samples;

  ReducedSignal evolved = frft_composed(reduced, order);

  // The oscillator kernel carries e^{-i alpha/2} relative to the
  // unit-determinant transform branch.
  const std::complex<double> phase = std::polar(1.0, -0.5 * order.alpha());
  ReducedSignal out;
  out.dp = psi_q.dp;
  out.p0 = psi_q.p0;
  out.samples = std::move(evolved.samples);
  for (auto& u : out.samples) u *= phase;
  return out;
}

}  // namespace fropt
