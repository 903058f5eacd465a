#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fropt/commands.hpp"
#include "fropt/error.hpp"
#include "fropt/field_io.hpp"
#include "fropt/kernels.hpp"
#include "fropt/scenario.hpp"

namespace {

int exit_code_for(fropt::ErrorCode code) {
  switch (code) {
    case fropt::ErrorCode::SchemaError:
      return 2;
    default:
      return 1;  // numerical-contract failure
  }
}

void apply_isa_env() {
  if (const char* isa = std::getenv("FROPT_ISA")) {
    const std::string v(isa);
    if (v == "scalar")
      fropt::kernels::force_isa(fropt::kernels::Isa::scalar);
    else if (v == "avx2")
      fropt::kernels::force_isa(fropt::kernels::Isa::avx2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_isa_env();

  CLI::App app{"fropt: fractional-Fourier wave-optics propagation engine"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  app.add_option("--out", out_dir, "output directory")->capture_default_str();

  // geometry
  auto* geo = app.add_subcommand("geometry", "print the (z, R_A) -> (mu, eps, alpha, R_B) record");
  double geo_z = 0.0;
  std::string geo_ra = "flat";
  double geo_lambda = 632e-9;
  geo->add_option("--z", geo_z, "propagation distance, m")->required();
  geo->add_option("--ra", geo_ra, "input curvature radius, m, or 'flat'")->required();
  geo->add_option("--lambda", geo_lambda, "wavelength, m")->capture_default_str();

  // propagate
  auto* prop = app.add_subcommand("propagate", "propagate a scenario field");
  std::string prop_scenario = "paper-slit";
  std::string prop_method = "fresnel";
  std::string prop_compare;
  double prop_z_override = 0.0;
  prop->add_option("--scenario", prop_scenario, "built-in name or JSON path")
      ->capture_default_str();
  prop->add_option("--method", prop_method, "fresnel | frft | rs | fraunhofer")
      ->capture_default_str();
  prop->add_option("--compare-with", prop_compare, "second method; writes metrics.json");
  prop->add_option("--z", prop_z_override, "override propagation distance, m");

  // frft
  auto* frf = app.add_subcommand("frft", "fractional Fourier transform of a reduced signal");
  double frft_alpha = 0.0;
  std::string frft_input;
  std::string frft_method = "composed";
  std::size_t frft_n = 512;
  frf->add_option("--alpha", frft_alpha, "order, radians")->required();
  frf->add_option("--input", frft_input, "reduced-signal CSV (coord,re,im)");
  frf->add_option("--method", frft_method, "reference | fast | composed")
      ->capture_default_str();
  frf->add_option("--n", frft_n, "demo-signal size when no input is given")
      ->capture_default_str();

  // green-kernel
  auto* green = app.add_subcommand("green-kernel", "generalized Green kernel shape report");
  fropt::GreenKernelRequest green_req;
  green->add_option("--rho", green_req.rho, "dirac | gaussian:sigma=S | ball:a=A")
      ->capture_default_str();
  green->add_option("--z", green_req.z, "plane distance, m")->required();
  green->add_option("--window", green_req.half_window, "transverse half-window, m")->required();
  green->add_option("--n", green_req.n_points, "line samples")->capture_default_str();
  green->add_option("--lambda", green_req.wavelength, "wavelength, m")->capture_default_str();

  // counts
  auto* counts = app.add_subcommand("counts", "photon-counting scan of a scenario");
  std::string counts_scenario = "paper-slit";
  std::uint64_t counts_seed = 42;
  double counts_total = 1e5;
  counts->add_option("--scenario", counts_scenario, "built-in name or JSON path")
      ->capture_default_str();
  counts->add_option("--seed", counts_seed, "RNG seed")->capture_default_str();
  counts->add_option("--total", counts_total, "expected total counts")->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "fractional-order sweep (one CSV per alpha)");
  std::string sweep_scenario = "young";
  std::string sweep_alphas;
  sweep->add_option("--scenario", sweep_scenario, "built-in name or JSON path")
      ->capture_default_str();
  sweep->add_option("--alphas", sweep_alphas,
                    "comma-separated fractions of pi/2 (default from the scenario)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    nlohmann::json err;
    err["error"] = {{"code", "Usage"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    nlohmann::json summary;
    if (*geo) {
      fropt::Curvature ra = fropt::Curvature::flat();
      if (geo_ra != "flat") ra = fropt::Curvature::finite(fropt::parse_double(geo_ra));
      summary = fropt::geometry_record(geo_z, ra, geo_lambda);
    } else if (*prop) {
      fropt::PropagateRequest req;
      req.scenario = fropt::load_scenario(prop_scenario);
      if (prop_z_override > 0.0) req.scenario.z = prop_z_override;
      req.method = prop_method;
      if (!prop_compare.empty()) req.compare_with = prop_compare;
      req.out_dir = out_dir;
      summary = fropt::run_propagate(req);
    } else if (*frf) {
      fropt::FrftRequest req;
      req.alpha = frft_alpha;
      req.input_csv = frft_input;
      req.method = frft_method;
      req.demo_n = frft_n;
      req.out_dir = out_dir;
      summary = fropt::run_frft(req);
    } else if (*green) {
      green_req.out_dir = out_dir;
      summary = fropt::run_green_kernel(green_req);
    } else if (*counts) {
      fropt::CountsRequest req;
      req.scenario = fropt::load_scenario(counts_scenario);
      req.seed = counts_seed;
      req.total_counts = counts_total;
      req.out_dir = out_dir;
      summary = fropt::run_counts(req);
    } else if (*sweep) {
      fropt::SweepRequest req;
      req.scenario = fropt::load_scenario(sweep_scenario);
      if (!sweep_alphas.empty()) {
        req.scenario.sweep_fractions.clear();
        std::string token;
        std::istringstream ss(sweep_alphas);
        while (std::getline(ss, token, ','))
          req.scenario.sweep_fractions.push_back(fropt::parse_double(token));
      }
      req.out_dir = out_dir;
      summary = fropt::run_sweep(req);
    }
    std::cout << summary.dump(2) << "\n";
    return 0;
  } catch (const fropt::Error& e) {
    nlohmann::json err;
    err["error"] = {{"code", fropt::error_code_name(e.code())}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
