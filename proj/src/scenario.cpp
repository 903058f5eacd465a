#include "fropt/scenario.hpp"

#include <cmath>
#include <fstream>

#include "fropt/error.hpp"
#include "fropt/field_io.hpp"

namespace fropt {

namespace {

GridSpec centered_critical_grid(std::size_t n, double wavelength, double z) {
  GridSpec grid;
  grid.n = n;
  grid.dx = std::sqrt(wavelength * z / static_cast<double>(n));
  grid.x0 = -std::floor(static_cast<double>(n) / 2.0) * grid.dx;
  return grid;
}

double require_positive(const nlohmann::json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number())
    fail(ErrorCode::SchemaError, std::string(where) + "/" + key + ": required number");
  const double v = j[key].get<double>();
  if (!(v > 0.0))
    fail(ErrorCode::SchemaError, std::string(where) + "/" + key + ": must be > 0");
  return v;
}

}  // namespace

Scenario builtin_scenario(const std::string& name) {
  Scenario s;
  s.name = name;
  if (name == "paper-slit") {
    s.wavelength = 632e-9;
    s.z = 0.9684;
    s.source.shape = RectSlit{1.905e-3};
    s.grid = centered_critical_grid(8192, s.wavelength, s.z);
    s.r_a_frft = s.z;
    s.detector = {50e-6, 10e-3, 50e-6, 5e-3};
    s.sweep_fractions = {0.8, 0.85, 0.9, 0.95, 1.0};
    s.sweep_n = 2048;
  } else if (name == "young") {
    s.wavelength = 632e-9;
    s.r_a_frft = 5.0;
    s.z = s.r_a_frft;  // mu = 1, Fourier plane
    s.source.shape = GaussianPair{0.6e-3, 4e-3, 0.0};
    s.grid = centered_critical_grid(4096, s.wavelength, s.z);
    s.detector = {50e-6, 10e-3, 50e-6, 5e-3};
    s.sweep_fractions = {0.8, 0.85, 0.9, 0.95, 1.0};
    s.sweep_n = 2048;
  } else {
    fail(ErrorCode::SchemaError, "unknown scenario '" + name + "'");
  }
  return s;
}

Scenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::SchemaError, "/: scenario must be an object");
  Scenario s;
  if (j.contains("base")) {
    if (!j["base"].is_string()) fail(ErrorCode::SchemaError, "/base: must be a string");
    s = builtin_scenario(j["base"].get<std::string>());
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(ErrorCode::SchemaError, "/name: must be a string");
    s.name = j["name"].get<std::string>();
  }
  if (j.contains("lambda_m")) s.wavelength = require_positive(j, "lambda_m", "");
  if (j.contains("z_m")) s.z = require_positive(j, "z_m", "");
  if (j.contains("r_a_m")) s.r_a_frft = require_positive(j, "r_a_m", "");
  if (j.contains("illumination")) s.illumination = curvature_from_json(j["illumination"]);
  if (j.contains("source")) s.source = source_spec_from_json(j["source"]);
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object()) fail(ErrorCode::SchemaError, "/grid: must be an object");
    if (g.contains("n")) {
      if (!g["n"].is_number_unsigned() || g["n"].get<std::size_t>() < 2)
        fail(ErrorCode::SchemaError, "/grid/n: integer >= 2 required");
      s.grid.n = g["n"].get<std::size_t>();
    }
    if (g.contains("dx_m")) s.grid.dx = require_positive(g, "dx_m", "/grid");
    if (g.contains("x0_m")) {
      if (!g["x0_m"].is_number()) fail(ErrorCode::SchemaError, "/grid/x0_m: required number");
      s.grid.x0 = g["x0_m"].get<double>();
    }
    if (!g.contains("dx_m") && s.grid.n >= 2 && s.wavelength > 0.0 && s.z > 0.0)
      s.grid = centered_critical_grid(s.grid.n, s.wavelength, s.z);
  }
  if (j.contains("detector")) {
    const auto& d = j["detector"];
    if (!d.is_object()) fail(ErrorCode::SchemaError, "/detector: must be an object");
    if (d.contains("width_m")) s.detector.width = require_positive(d, "width_m", "/detector");
    if (d.contains("dwell_s")) s.detector.dwell = require_positive(d, "dwell_s", "/detector");
    if (d.contains("step_m")) s.detector.step = require_positive(d, "step_m", "/detector");
    if (d.contains("span_m")) s.detector.span = require_positive(d, "span_m", "/detector");
  }
  if (j.contains("sweep")) {
    const auto& w = j["sweep"];
    if (!w.is_object()) fail(ErrorCode::SchemaError, "/sweep: must be an object");
    if (w.contains("fractions_of_half_pi")) {
      if (!w["fractions_of_half_pi"].is_array())
        fail(ErrorCode::SchemaError, "/sweep/fractions_of_half_pi: must be an array");
      s.sweep_fractions.clear();
      for (const auto& f : w["fractions_of_half_pi"]) {
        if (!f.is_number())
          fail(ErrorCode::SchemaError, "/sweep/fractions_of_half_pi: numbers required");
        s.sweep_fractions.push_back(f.get<double>());
      }
    }
    if (w.contains("n")) {
      if (!w["n"].is_number_unsigned())
        fail(ErrorCode::SchemaError, "/sweep/n: integer required");
      s.sweep_n = w["n"].get<std::size_t>();
    }
  }
  if (!(s.wavelength > 0.0)) fail(ErrorCode::SchemaError, "/lambda_m: required");
  if (!(s.z > 0.0)) fail(ErrorCode::SchemaError, "/z_m: required");
  if (s.grid.n < 2) fail(ErrorCode::SchemaError, "/grid/n: required");
  if (!(s.grid.dx > 0.0)) fail(ErrorCode::SchemaError, "/grid/dx_m: required");
  if (s.r_a_frft == 0.0) s.r_a_frft = s.z;
  return s;
}

Scenario load_scenario(const std::string& name_or_path) {
  if (name_or_path == "paper-slit" || name_or_path == "young")
    return builtin_scenario(name_or_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(name_or_path));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::SchemaError, std::string("scenario JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

nlohmann::json scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["lambda_m"] = s.wavelength;
  j["z_m"] = s.z;
  j["r_a_m"] = s.r_a_frft;
  j["illumination"] = curvature_to_json(s.illumination);
  j["source"] = source_spec_to_json(s.source);
  j["grid"] = {{"n", s.grid.n}, {"dx_m", s.grid.dx}, {"x0_m", s.grid.x0}};
  j["detector"] = {{"width_m", s.detector.width},
                   {"dwell_s", s.detector.dwell},
                   {"step_m", s.detector.step},
                   {"span_m", s.detector.span}};
  j["sweep"] = {{"fractions_of_half_pi", s.sweep_fractions}, {"n", s.sweep_n}};
  return j;
}

SampledField render_scenario_field(const Scenario& s) {
  SampledField field = render_source(s.source, s.grid.n, s.grid.dx, s.grid.x0, s.wavelength);
  field.curvature = s.illumination;
  return field;
}

}  // namespace fropt
