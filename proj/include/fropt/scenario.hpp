#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fropt/field.hpp"

namespace fropt {

struct GridSpec {
  std::size_t n = 0;
  double dx = 0.0;
  double x0 = 0.0;
};

struct DetectorSpec {
  double width = 0.0;   // meters
  double dwell = 0.0;   // seconds
  double step = 0.0;    // scan step, meters
  double span = 0.0;    // scan half-span, meters
};

// A fully explicit run configuration. Built-ins:
//   paper-slit: 1.905 mm slit, lambda 632 nm, z = 96.84 cm, 50 um detector,
//               10 ms dwell, scan +-5 mm in 50 um steps
//   young:      gaussian pair, 0.6 mm waist (1/e^2), 4 mm separation,
//               R_A = 5 m, z = R_A (Fourier plane)
struct Scenario {
  std::string name;
  double wavelength = 0.0;
  double z = 0.0;
  double r_a_frft = 0.0;   // metaxial reference sphere for the FrFT route
  Curvature illumination = Curvature::flat();
  SourceSpec source;
  GridSpec grid;
  DetectorSpec detector;
  std::vector<double> sweep_fractions;  // of pi/2
  std::size_t sweep_n = 0;              // reduced-grid size for the sweep
};

Scenario builtin_scenario(const std::string& name);
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::string& name_or_path);
nlohmann::json scenario_to_json(const Scenario& scenario);

// Renders the scenario source on the scenario grid (illumination curvature
// applied as the field's reference).
SampledField render_scenario_field(const Scenario& scenario);

}  // namespace fropt
