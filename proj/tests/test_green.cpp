#include <doctest.h>

#include <cmath>
#include <complex>

#include "fropt/error.hpp"
#include "fropt/green.hpp"
#include "test_support.hpp"

using namespace fropt;
using testsup::kPi;

namespace {
const double kLam = 632e-9;
const double kWavenumber = 2.0 * kPi / kLam;
}  // namespace

TEST_CASE("spherical G: mirror cancellation and doubling on Sigma") {
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 on_sigma{2e-4, -1e-4, 0.0};
  const auto gm = spherical_g(on_sigma, rp, kWavenumber, MirrorSign::minus);
  CHECK(std::abs(gm) == 0.0);  // |r - r'| == |r - ~r'| exactly on Sigma

  const auto gp = spherical_g(on_sigma, rp, kWavenumber, MirrorSign::plus);
  const double d = norm(on_sigma - rp);
  const auto expected = 2.0 * std::polar(1.0 / d, kWavenumber * d);
  CHECK(std::abs(gp - expected) < 1e-12 * std::abs(expected));
}

TEST_CASE("k = 0 reduces to the electrostatic image pair") {
  const Vec3 rp{0.0, 0.0, 2e-4};
  const Vec3 r{1e-4, 0.0, 3e-4};
  const double d = norm(r - rp);
  const double dm = norm(r - mirror_z(rp));
  const auto gp = spherical_g(r, rp, 0.0, MirrorSign::plus);
  const auto gm = spherical_g(r, rp, 0.0, MirrorSign::minus);
  CHECK(gp.real() == doctest::Approx(1.0 / d + 1.0 / dm).epsilon(1e-14));
  CHECK(gm.real() == doctest::Approx(1.0 / d - 1.0 / dm).epsilon(1e-14));
  CHECK(gp.imag() == 0.0);
}

TEST_CASE("coincident points error") {
  const Vec3 rp{0.0, 0.0, 1e-4};
  CHECK_THROWS_AS(spherical_g(rp, rp, kWavenumber, MirrorSign::plus), Error);
}

TEST_CASE("dirac reduces generalized_G to spherical_G bitwise") {
  SourceDistribution dist;
  dist.shape = Dirac{};
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 r{3e-4, 1e-4, 5e-4};
  const auto a = generalized_g(dist, r, rp, kWavenumber, MirrorSign::plus);
  const auto b = spherical_g(r, rp, kWavenumber, MirrorSign::plus);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("gaussian cloud rescales the far kernel by its characteristic function") {
  // mean-value identity: the spherical average of a Helmholtz solution over
  // radius a is j0(k a) times the center value, so the smeared kernel equals
  // rho_hat(k) * G exactly in the far region -- an analytic oracle for the
  // quadrature.
  SourceDistribution dist;
  dist.shape = GaussianCloud{kLam / 2.0};
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 r{3e-4, 0.0, 5e-4};
  double err = 0.0;
  const auto got = generalized_g(dist, r, rp, kWavenumber, MirrorSign::plus, &err);
  const auto oracle =
      dist.char_function(kWavenumber) * spherical_g(r, rp, kWavenumber, MirrorSign::plus);
  CHECK(std::abs(got - oracle) / std::abs(oracle) < 1e-6);
  CHECK(err < 1e-6 * std::abs(got));
}

TEST_CASE("uniform ball rescales the far kernel likewise") {
  SourceDistribution dist;
  dist.shape = UniformBall{kLam / 2.0};
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 r{3e-4, 0.0, 5e-4};
  const auto got = generalized_g(dist, r, rp, kWavenumber, MirrorSign::plus);
  const auto oracle =
      dist.char_function(kWavenumber) * spherical_g(r, rp, kWavenumber, MirrorSign::plus);
  CHECK(std::abs(got - oracle) / std::abs(oracle) < 1e-6);
}

TEST_CASE("G- vanishes on Sigma for a mirror-symmetric cloud") {
  SourceDistribution dist;
  dist.shape = GaussianCloud{kLam / 2.0};
  const Vec3 rp{0.0, 0.0, 2e-4};
  const Vec3 on_sigma{3e-4, 0.0, 0.0};
  const auto gm = generalized_g(dist, on_sigma, rp, kWavenumber, MirrorSign::minus);
  const auto gp = generalized_g(dist, on_sigma, rp, kWavenumber, MirrorSign::plus);
  CHECK(std::abs(gm) <= 1e-8 * std::abs(gp));
}

TEST_CASE("sigma halving converges monotonically to the spherical kernel") {
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 r{3e-4, 0.0, 5e-4};
  const auto g = spherical_g(r, rp, kWavenumber, MirrorSign::plus);
  double prev = 1e300;
  for (const double sigma : {kLam / 4.0, kLam / 8.0, kLam / 16.0}) {
    SourceDistribution dist;
    dist.shape = GaussianCloud{sigma};
    const auto got = generalized_g(dist, r, rp, kWavenumber, MirrorSign::plus);
    const double err = std::abs(got - g);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("generalized_G is linear in distribution mixtures") {
  // a G[rho1] + b G[rho2] vs quadratures evaluated separately: linearity of
  // the integral; checked through two different sigmas
  SourceDistribution d1;
  d1.shape = GaussianCloud{kLam / 2.0};
  SourceDistribution d2;
  d2.shape = GaussianCloud{kLam / 4.0};
  const Vec3 rp{0.0, 0.0, 1e-4};
  const Vec3 r{2e-4, 1e-4, 6e-4};
  const auto g1 = generalized_g(d1, r, rp, kWavenumber, MirrorSign::plus);
  const auto g2 = generalized_g(d2, r, rp, kWavenumber, MirrorSign::plus);
  // mixture 0.3 rho1 + 0.7 rho2 evaluated by its characteristic function
  const auto oracle = (0.3 * d1.char_function(kWavenumber) + 0.7 * d2.char_function(kWavenumber)) *
                      spherical_g(r, rp, kWavenumber, MirrorSign::plus);
  CHECK(std::abs(0.3 * g1 + 0.7 * g2 - oracle) / std::abs(oracle) < 1e-6);
}

TEST_CASE("too close to the singularity errors") {
  SourceDistribution dist;
  dist.shape = GaussianCloud{kLam / 2.0};
  const Vec3 rp{0.0, 0.0, 1e-7};
  const Vec3 r{1e-7, 0.0, 2e-7};  // within 8 sigma
  CHECK_THROWS_AS(generalized_g(dist, r, rp, kWavenumber, MirrorSign::plus), Error);
}

TEST_CASE("sifting: normalization, plane wave, odd moments") {
  SourceDistribution dist;
  dist.shape = GaussianCloud{kLam / 2.0};
  const Vec3 r{1e-5, 2e-5, 3e-5};

  // constant test field: residual is the truncated-normalization defect
  const double r_const = sifting_residual(
      dist, [](const Vec3&) { return std::complex<double>(1.0, 0.0); }, r, kWavenumber);
  CHECK(r_const <= 1e-10);

  // plane wave: residual equals |rho_hat(k) - 1|
  Vec3 khat{0.3, -0.5, 0.8};
  const double kn = norm(khat);
  const Vec3 kvec{khat.x / kn * kWavenumber, khat.y / kn * kWavenumber,
                  khat.z / kn * kWavenumber};
  const double r_wave = sifting_residual(
      dist,
      [&](const Vec3& p) {
        return std::polar(1.0, kvec.x * p.x + kvec.y * p.y + kvec.z * p.z);
      },
      r, kWavenumber);
  const double expected = std::abs(dist.char_function(kWavenumber) - 1.0);
  CHECK(std::abs(r_wave - expected) <= 1e-8);

  // linear field: odd moments vanish by symmetry
  const double r_linear = sifting_residual(
      dist,
      [](const Vec3& p) {
        return std::complex<double>(1.0 + 2e5 * p.x - 1e5 * p.y + 3e5 * p.z, 0.0);
      },
      r, kWavenumber);
  CHECK(r_linear <= 1e-10);

  // dirac sifts exactly
  SourceDistribution dirac;
  dirac.shape = Dirac{};
  CHECK(sifting_residual(dirac, [](const Vec3&) { return std::complex<double>(0.7, 0.1); },
                         r, kWavenumber) == 0.0);
}

TEST_CASE("kernel shape: dirac is spherical, parabolic fit obeys the x^4 bound") {
  SourceDistribution dirac;
  dirac.shape = Dirac{};
  const double z = 0.01;
  const double half_window = 0.05 * z;  // paraxial window
  // line sampling must keep the phase increment per step under pi:
  // k * half_window / z * step < pi  ->  n >~ 160 here
  const auto report = kernel_shape_compare(dirac, z, half_window, 513, kWavenumber);
  CHECK(report.phase_rms_vs_spherical <= 1e-6);
  const double x4_bound = kWavenumber * std::pow(half_window, 4) / (8.0 * z * z * z);
  CHECK(report.phase_rms_vs_parabolic <= x4_bound);
  CHECK(report.phase_rms_vs_parabolic > 1e-6);  // genuinely nonzero residual
}

TEST_CASE("kernel shape for a gaussian cloud reports finite residuals") {
  SourceDistribution dist;
  dist.shape = GaussianCloud{kLam / 2.0};
  const double z = 0.01;
  const auto report = kernel_shape_compare(dist, z, 0.2e-3, 257, kWavenumber);
  CHECK(std::isfinite(report.phase_rms_vs_spherical));
  CHECK(std::isfinite(report.phase_rms_vs_parabolic));
  // the radial smear rescales the kernel, so the phase stays near-spherical
  CHECK(report.phase_rms_vs_spherical < 1e-3);
}

TEST_CASE("distribution parsing") {
  CHECK(parse_distribution("dirac").is_dirac());
  const auto g = parse_distribution("gaussian:sigma=632e-9");
  CHECK(std::get<GaussianCloud>(g.shape).sigma == 632e-9);
  const auto b = parse_distribution("ball:a=1e-6");
  CHECK(std::get<UniformBall>(b.shape).radius == 1e-6);
  CHECK_THROWS_AS(parse_distribution("blob:q=1"), Error);
  CHECK_THROWS_AS(parse_distribution("gaussian:sigma=-1"), Error);
}
