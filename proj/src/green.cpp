#include "fropt/green.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fropt/error.hpp"

namespace fropt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSupportSigmas = 8.0;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

struct QuadRule {
  // radial shells: radius and weight (rho(r) 4 pi r^2 w_GL), weights sum to
  // the truncated rho normalization (~1)
  std::vector<double> radius;
  std::vector<double> radial_weight;
  // unit directions with angular-average weights (sum = 1)
  std::vector<Vec3> dir;
  std::vector<double> dir_weight;
};

QuadRule build_rule(const SourceDistribution& dist, double k, int refine) {
  const double r_max = dist.support_radius();
  const double kr = k * r_max;
  const std::size_t nr = static_cast<std::size_t>(std::max(24.0, std::ceil(0.75 * kr) + 12.0)) +
                         12 * refine;
  const std::size_t nth = static_cast<std::size_t>(std::max(16.0, std::ceil(0.75 * kr) + 8.0)) +
                          8 * refine;
  const std::size_t nph = 2 * nth;

  QuadRule rule;
  std::vector<double> tn;
  std::vector<double> tw;
  gauss_legendre(nr, tn, tw);
  rule.radius.resize(nr);
  rule.radial_weight.resize(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    const double r = 0.5 * r_max * (tn[i] + 1.0);
    const double w = 0.5 * r_max * tw[i];
    double rho;
    if (const auto* g = std::get_if<GaussianCloud>(&dist.shape)) {
      const double s2 = g->sigma * g->sigma;
      rho = std::pow(2.0 * kPi * s2, -1.5) * std::exp(-r * r / (2.0 * s2));
    } else {
      const auto& b = std::get<UniformBall>(dist.shape);
      rho = 3.0 / (4.0 * kPi * b.radius * b.radius * b.radius);
    }
    rule.radius[i] = r;
    rule.radial_weight[i] = w * rho * 4.0 * kPi * r * r;
  }

  std::vector<double> cn;
  std::vector<double> cw;
  gauss_legendre(nth, cn, cw);
  rule.dir.reserve(nth * nph);
  rule.dir_weight.reserve(nth * nph);
  for (std::size_t it = 0; it < nth; ++it) {
    const double ct = cn[it];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    for (std::size_t ip = 0; ip < nph; ++ip) {
      const double phi = 2.0 * kPi * static_cast<double>(ip) / static_cast<double>(nph);
      rule.dir.push_back({st * std::cos(phi), st * std::sin(phi), ct});
      // (1/4pi) dOmega = (1/2) dcos * (1/2pi) dphi
      rule.dir_weight.push_back(0.5 * cw[it] / static_cast<double>(nph));
    }
  }
  return rule;
}

template <typename F>
std::complex<double> smear(const QuadRule& rule, const Vec3& center, F&& f) {
  std::complex<double> total{0.0, 0.0};
  for (std::size_t i = 0; i < rule.radius.size(); ++i) {
    const double a = rule.radius[i];
    std::complex<double> shell{0.0, 0.0};
    for (std::size_t d = 0; d < rule.dir.size(); ++d) {
      const Vec3 p{center.x + a * rule.dir[d].x, center.y + a * rule.dir[d].y,
                   center.z + a * rule.dir[d].z};
      shell += rule.dir_weight[d] * f(p);
    }
    total += rule.radial_weight[i] * shell;
  }
  return total;
}

std::complex<double> half_space_kernel(const Vec3& p, const Vec3& rp, const Vec3& rpm,
                                       double k, MirrorSign sign) {
  const double d = norm(p - rp);
  const double dm = norm(p - rpm);
  if (d == 0.0 || dm == 0.0) fail(ErrorCode::CoincidentPoints, "field point hits a source");
  const std::complex<double> direct = std::polar(1.0 / d, k * d);
  const std::complex<double> image = std::polar(1.0 / dm, k * dm);
  return (sign == MirrorSign::plus) ? direct + image : direct - image;
}

}  // namespace

double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double SourceDistribution::support_radius() const {
  if (const auto* g = std::get_if<GaussianCloud>(&shape)) return kSupportSigmas * g->sigma;
  if (const auto* b = std::get_if<UniformBall>(&shape)) return b->radius;
  return 0.0;
}

double SourceDistribution::char_function(double k) const {
  if (const auto* g = std::get_if<GaussianCloud>(&shape))
    return std::exp(-0.5 * k * k * g->sigma * g->sigma);
  if (const auto* b = std::get_if<UniformBall>(&shape)) {
    const double ka = k * b->radius;
    if (std::abs(ka) < 1e-4) return 1.0 - ka * ka / 10.0;
    return 3.0 * (std::sin(ka) - ka * std::cos(ka)) / (ka * ka * ka);
  }
  return 1.0;
}

SourceDistribution parse_distribution(const std::string& text) {
  SourceDistribution dist;
  if (text == "dirac") {
    dist.shape = Dirac{};
    return dist;
  }
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  double value = 0.0;
  if (colon != std::string::npos) {
    const auto eq = text.find('=', colon);
    if (eq == std::string::npos)
      fail(ErrorCode::SchemaError, "expected kind:param=value, got '" + text + "'");
    try {
      value = std::stod(text.substr(eq + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::SchemaError, "bad numeric value in '" + text + "'");
    }
  }
  if (kind == "gaussian") {
    if (!(value > 0.0)) fail(ErrorCode::SchemaError, "gaussian needs sigma > 0");
    dist.shape = GaussianCloud{value};
  } else if (kind == "ball") {
    if (!(value > 0.0)) fail(ErrorCode::SchemaError, "ball needs a > 0");
    dist.shape = UniformBall{value};
  } else {
    fail(ErrorCode::SchemaError, "unknown distribution '" + kind + "'");
  }
  return dist;
}

std::complex<double> spherical_g(const Vec3& r, const Vec3& rp, double k, MirrorSign sign) {
  return half_space_kernel(r, rp, mirror_z(rp), k, sign);
}

std::complex<double> generalized_g(const SourceDistribution& dist, const Vec3& r,
                                   const Vec3& rp, double k, MirrorSign sign,
                                   double* err_estimate) {
  if (dist.is_dirac()) {
    if (err_estimate) *err_estimate = 0.0;
    return spherical_g(r, rp, k, sign);
  }
  const double guard = dist.support_radius();
  const Vec3 rpm = mirror_z(rp);
  if (norm(r - rp) < guard || norm(r - rpm) < guard)
    fail(ErrorCode::TooCloseToSingularity,
         "field point within the source support of a singularity");

  const auto eval = [&](int refine) {
    const QuadRule rule = build_rule(dist, k, refine);
    return smear(rule, r,
                 [&](const Vec3& p) { return half_space_kernel(p, rp, rpm, k, sign); });
  };
  const std::complex<double> coarse = eval(0);
  const std::complex<double> fine = eval(1);
  const double err = std::abs(fine - coarse);
  if (err_estimate) *err_estimate = err;
  const double magnitude = std::abs(fine);
  // The minus kernel legitimately cancels to ~0 on Sigma; only enforce the
  // relative error bound when there is something to resolve.
  const double floor = std::abs(spherical_g(r, rp, k, MirrorSign::plus)) * 1e-12;
  if (magnitude > floor && err > 1e-6 * magnitude + floor)
    fail(ErrorCode::QuadratureNotConverged,
         "estimated error " + std::to_string(err) + " vs |G| = " + std::to_string(magnitude));
  return fine;
}

double sifting_residual(const SourceDistribution& dist,
                        const std::function<std::complex<double>(const Vec3&)>& u,
                        const Vec3& r, double k_scale) {
  if (dist.is_dirac()) return 0.0;
  const QuadRule rule = build_rule(dist, k_scale, 1);
  const std::complex<double> smeared = smear(rule, r, u);
  return std::abs(smeared - u(r));
}

KernelShapeReport kernel_shape_compare(const SourceDistribution& dist, double z,
                                       double half_window, std::size_t n_points, double k) {
  if (!(z > 0.0)) fail(ErrorCode::NonpositiveDistance, "z must be positive");
  if (n_points < 8) fail(ErrorCode::InvalidSpec, "need at least 8 line samples");

  // d/dn' of G- at the source point r' = 0 on Sigma, as a function of the
  // field point: -2 z_p (ik - 1/d) e^{ikd} / d^2 with d = |p|.
  const auto dgdn_point = [&](const Vec3& p) {
    const double d = norm(p);
    if (d == 0.0) fail(ErrorCode::CoincidentPoints, "field point on the source");
    const std::complex<double> ik{0.0, k};
    return -2.0 * p.z * (ik - 1.0 / d) * std::polar(1.0 / (d * d), k * d);
  };

  KernelShapeReport report;
  report.x.resize(n_points);
  report.dgdn.resize(n_points);
  const double step = 2.0 * half_window / static_cast<double>(n_points - 1);
  const bool smeared = !dist.is_dirac();
  QuadRule rule;
  if (smeared) rule = build_rule(dist, k, 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = -half_window + static_cast<double>(i) * step;
    const Vec3 r{x, 0.0, z};
    report.x[i] = x;
    report.dgdn[i] = smeared ? smear(rule, r, dgdn_point) : dgdn_point(r);
  }

  // Unwrap from the axis outward.
  report.phase.resize(n_points);
  std::size_t axis = 0;
  for (std::size_t i = 1; i < n_points; ++i)
    if (std::abs(report.x[i]) < std::abs(report.x[axis])) axis = i;
  report.phase[axis] = std::arg(report.dgdn[axis]);
  const auto unwrap_step = [&](std::size_t from, std::size_t to) {
    double ph = std::arg(report.dgdn[to]);
    while (ph - report.phase[from] > kPi) ph -= 2.0 * kPi;
    while (ph - report.phase[from] < -kPi) ph += 2.0 * kPi;
    report.phase[to] = ph;
  };
  for (std::size_t i = axis + 1; i < n_points; ++i) unwrap_step(i - 1, i);
  for (std::size_t i = axis; i-- > 0;) unwrap_step(i + 1, i);

  // Least-squares fit with a free constant = mean residual removal.
  const auto fit_rms = [&](const std::function<double(double)>& model) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) mean += report.phase[i] - model(report.x[i]);
    mean /= static_cast<double>(n_points);
    double rss = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
      const double res = report.phase[i] - model(report.x[i]) - mean;
      rss += res * res;
    }
    return std::sqrt(rss / static_cast<double>(n_points));
  };
  report.phase_rms_vs_spherical =
      fit_rms([&](double x) { return k * std::sqrt(z * z + x * x); });
  report.phase_rms_vs_parabolic =
      fit_rms([&](double x) { return k * (z + x * x / (2.0 * z)); });
  return report;
}

}  // namespace fropt
