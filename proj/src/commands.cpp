#include "fropt/commands.hpp"

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "fropt/counting.hpp"
#include "fropt/error.hpp"
#include "fropt/field_io.hpp"
#include "fropt/frft.hpp"
#include "fropt/geometry.hpp"
#include "fropt/green.hpp"
#include "fropt/kernels.hpp"
#include "fropt/propagate.hpp"

namespace fropt {

namespace {

constexpr double kPi = std::numbers::pi;

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

SampledField propagate_by_method(const Scenario& scenario, const std::string& method) {
  const SampledField input = render_scenario_field(scenario);
  if (method == "fresnel") return fresnel_direct(input, scenario.z);
  if (method == "frft") return fresnel_via_frft(input, scenario.z, scenario.r_a_frft);
  if (method == "rs") return rayleigh_sommerfeld(input, scenario.z);
  if (method == "fraunhofer") return fraunhofer(input, scenario.z);
  fail(ErrorCode::SchemaError, "unknown method '" + method + "'");
}

ReducedSignal scenario_reduced_input(const Scenario& scenario) {
  // Reduced-domain rendering for the sweep: the source profile relabeled by
  // the Fourier-plane scale s = sqrt(lambda * R_A).
  const double s = std::sqrt(scenario.wavelength * scenario.r_a_frft);
  const std::size_t n = scenario.sweep_n ? scenario.sweep_n : 2048;
  const double dp = 1.0 / std::sqrt(static_cast<double>(n));
  const double p0 = -std::floor(static_cast<double>(n) / 2.0) * dp;
  SampledField field =
      render_source(scenario.source, n, dp * s, p0 * s, scenario.wavelength);
  ReducedSignal reduced;
  reduced.samples = std::move(field.samples);
  reduced.dp = dp;
  reduced.p0 = p0;
  return reduced;
}

}  // namespace

nlohmann::json geometry_record(double z, const Curvature& r_a, double wavelength) {
  const PropagationGeometry g = r_a.is_flat()
                                    ? geometry_from_z_flat(z, wavelength)
                                    : geometry_from_z(z, r_a.radius(), wavelength);
  nlohmann::json j;
  j["z_m"] = g.z;
  j["R_A_m"] = g.r_a;
  j["mu"] = g.mu;
  j["epsilon"] = g.epsilon;
  j["alpha_rad"] = g.alpha;
  j["R_B_m"] = g.r_b;
  j["scale_m"] = g.scale;
  if (r_a.is_flat()) j["flat_input_mu"] = kFlatInputMu;
  return j;
}

nlohmann::json run_propagate(const PropagateRequest& request) {
  const SampledField out = propagate_by_method(request.scenario, request.method);
  const std::string file = "field_" + request.method + ".csv";
  write_field_csv(out, join_path(request.out_dir, file));

  nlohmann::json summary;
  summary["scenario"] = request.scenario.name;
  summary["method"] = request.method;
  summary["field_csv"] = file;
  summary["n"] = out.size();
  summary["dx_m"] = out.dx;
  summary["energy"] = energy(out);
  summary["isa"] = kernels::active_isa();

  if (request.compare_with) {
    const SampledField other = propagate_by_method(request.scenario, *request.compare_with);
    const FieldComparison cmp = compare_fields(out, other);
    nlohmann::json metrics;
    metrics["method_a"] = request.method;
    metrics["method_b"] = *request.compare_with;
    metrics["rel_l2_intensity"] = cmp.rel_l2_intensity;
    metrics["max_abs_intensity_diff"] = cmp.max_abs_intensity_diff;
    metrics["extrema_offsets_m"] = cmp.extrema_offsets;
    metrics["matched_extrema"] = cmp.matched_extrema;
    metrics["unmatched_a"] = cmp.unmatched_a;
    metrics["unmatched_b"] = cmp.unmatched_b;
    write_text_file(join_path(request.out_dir, "metrics.json"), metrics.dump(2) + "\n");
    summary["metrics"] = metrics;
  }
  return summary;
}

nlohmann::json run_sweep(const SweepRequest& request) {
  const Scenario& scenario = request.scenario;
  if (scenario.sweep_fractions.empty())
    fail(ErrorCode::SchemaError, "scenario has no sweep fractions");
  const ReducedSignal input = scenario_reduced_input(scenario);

  nlohmann::json summary;
  summary["scenario"] = scenario.name;
  auto& runs = summary["runs"] = nlohmann::json::array();
  for (const double frac : scenario.sweep_fractions) {
    const double alpha = frac * kPi / 2.0;
    const ReducedSignal out = frft_composed(input, FractionalOrder(alpha));
    std::ostringstream name;
    name << "sweep_alpha_" << format_double(frac) << ".csv";
    write_reduced_csv(out, join_path(request.out_dir, name.str()));
    nlohmann::json run;
    run["fraction_of_half_pi"] = frac;
    run["alpha_rad"] = alpha;
    run["csv"] = name.str();
    run["energy"] = energy(out.samples, out.dp);
    runs.push_back(run);
  }
  summary["input_energy"] = energy(input.samples, input.dp);
  write_text_file(join_path(request.out_dir, "sweep_summary.json"), summary.dump(2) + "\n");
  return summary;
}

nlohmann::json run_counts(const CountsRequest& request) {
  const Scenario& scenario = request.scenario;
  if (!(scenario.detector.width > 0.0) || !(scenario.detector.dwell > 0.0) ||
      !(scenario.detector.step > 0.0) || !(scenario.detector.span > 0.0))
    fail(ErrorCode::SchemaError, "/detector: width_m, dwell_s, step_m, span_m required");

  const SampledField at_z = fresnel_direct(render_scenario_field(scenario), scenario.z);

  std::vector<double> positions;
  for (double x = -scenario.detector.span; x <= scenario.detector.span + 1e-15;
       x += scenario.detector.step)
    positions.push_back(x);

  double window_total = 0.0;
  for (const double x : positions)
    window_total += integrate_detector(at_z, x, scenario.detector.width);
  if (!(window_total > 0.0)) fail(ErrorCode::DegenerateModel, "no intensity in the scan range");
  const double rate_scale =
      request.total_counts / (window_total * scenario.detector.dwell);

  const DetectorScan scan =
      simulate_scan(at_z, positions, scenario.detector.width, scenario.detector.dwell,
                    rate_scale, request.seed);
  write_scan_csv(scan, join_path(request.out_dir, "counts.csv"),
                 join_path(request.out_dir, "counts_meta.json"));

  std::uint64_t total = 0;
  for (const auto c : scan.counts) total += c;
  const ChiSquare chi = chi_square_fit(scan, scan.expected);

  nlohmann::json summary;
  summary["scenario"] = scenario.name;
  summary["seed"] = request.seed;
  summary["rng"] = scan.rng_name;
  summary["positions"] = positions.size();
  summary["total_counts"] = total;
  summary["rate_scale"] = rate_scale;
  summary["ks_distance"] = ks_distance(scan.counts, scan.expected);
  summary["chi2_per_dof"] = chi.per_dof();
  summary["isa"] = kernels::active_isa();
  return summary;
}

nlohmann::json run_green_kernel(const GreenKernelRequest& request) {
  const SourceDistribution dist = parse_distribution(request.rho);
  const double k = 2.0 * kPi / request.wavelength;
  const KernelShapeReport report =
      kernel_shape_compare(dist, request.z, request.half_window, request.n_points, k);

  std::string csv = "x_m,re,im,phase_rad\n";
  for (std::size_t i = 0; i < report.x.size(); ++i) {
    csv += format_double(report.x[i]);
    csv += ',';
    csv += format_double(report.dgdn[i].real());
    csv += ',';
    csv += format_double(report.dgdn[i].imag());
    csv += ',';
    csv += format_double(report.phase[i]);
    csv += '\n';
  }
  write_text_file(join_path(request.out_dir, "green_kernel.csv"), csv);

  nlohmann::json summary;
  summary["rho"] = request.rho;
  summary["z_m"] = request.z;
  summary["half_window_m"] = request.half_window;
  summary["phase_rms_vs_spherical_rad"] = report.phase_rms_vs_spherical;
  summary["phase_rms_vs_parabolic_rad"] = report.phase_rms_vs_parabolic;
  write_text_file(join_path(request.out_dir, "green_report.json"), summary.dump(2) + "\n");
  return summary;
}

nlohmann::json run_frft(const FrftRequest& request) {
  ReducedSignal input;
  if (!request.input_csv.empty()) {
    // reduced CSV: coordinate, re, im (header row); grid from the coordinates
    const std::string text = read_text_file(request.input_csv);
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    std::vector<double> coords;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      std::istringstream cells(line);
      std::string c, re, im;
      std::getline(cells, c, ',');
      std::getline(cells, re, ',');
      std::getline(cells, im, ',');
      coords.push_back(parse_double(c));
      input.samples.emplace_back(parse_double(re), parse_double(im));
    }
    if (coords.size() < 2) fail(ErrorCode::SchemaError, "need at least two samples");
    input.p0 = coords.front();
    input.dp = (coords.back() - coords.front()) / static_cast<double>(coords.size() - 1);
    if (!(input.dp > 0.0)) fail(ErrorCode::SchemaError, "coordinates must increase");
  } else {
    const std::size_t n = request.demo_n;
    input.dp = 1.0 / std::sqrt(static_cast<double>(n));
    input.p0 = -std::floor(static_cast<double>(n) / 2.0) * input.dp;
    input.samples.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double rho = input.coord(j);
      input.samples[j] = std::exp(-kPi * rho * rho);
    }
  }

  const FractionalOrder order(request.alpha);
  ReducedSignal out;
  if (request.method == "reference")
    out = frft_reference(input, order);
  else if (request.method == "fast")
    out = frft_fast(input, order);
  else if (request.method == "composed")
    out = frft_composed(input, order);
  else
    fail(ErrorCode::SchemaError, "unknown frft method '" + request.method + "'");

  write_reduced_csv(out, join_path(request.out_dir, "frft_out.csv"));
  nlohmann::json summary;
  summary["alpha_rad"] = order.alpha();
  summary["method"] = request.method;
  summary["n"] = out.size();
  summary["energy_in"] = energy(input.samples, input.dp);
  summary["energy_out"] = energy(out.samples, out.dp);
  summary["isa"] = kernels::active_isa();
  return summary;
}

}  // namespace fropt
