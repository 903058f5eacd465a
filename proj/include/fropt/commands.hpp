#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fropt/scenario.hpp"

namespace fropt {

// Subcommand implementations shared by the CLI front end and the test
// suites. Each returns the summary JSON it prints and writes its data files
// under out_dir.

nlohmann::json geometry_record(double z, const Curvature& r_a, double wavelength);

struct PropagateRequest {
  Scenario scenario;
  std::string method = "fresnel";          // fresnel | frft | rs | fraunhofer
  std::optional<std::string> compare_with; // second method for the metrics file
  std::string out_dir = ".";
};
nlohmann::json run_propagate(const PropagateRequest& request);

struct SweepRequest {
  Scenario scenario;
  std::string out_dir = ".";
};
nlohmann::json run_sweep(const SweepRequest& request);

struct CountsRequest {
  Scenario scenario;
  std::uint64_t seed = 0;
  double total_counts = 1e5;  // calibrates rate_scale
  std::string out_dir = ".";
};
nlohmann::json run_counts(const CountsRequest& request);

struct GreenKernelRequest {
  std::string rho = "dirac";
  double z = 0.0;
  double half_window = 0.0;
  std::size_t n_points = 257;
  double wavelength = 632e-9;
  std::string out_dir = ".";
};
nlohmann::json run_green_kernel(const GreenKernelRequest& request);

struct FrftRequest {
  std::string input_csv;      // reduced-signal CSV (coord, re, im); empty -> demo gaussian
  std::size_t demo_n = 512;   // canonical grid size for the demo signal
  double alpha = 0.0;         // radians
  std::string method = "composed";  // reference | fast | composed
  std::string out_dir = ".";
};
nlohmann::json run_frft(const FrftRequest& request);

}  // namespace fropt
