#include "fropt/field_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "fropt/error.hpp"

namespace fropt {

std::string format_double(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{}) fail(ErrorCode::SchemaError, "not a number: '" + text + "'");
  return value;
}

nlohmann::json source_spec_to_json(const SourceSpec& spec) {
  nlohmann::json j;
  if (const auto* r = std::get_if<RectSlit>(&spec.shape)) {
    j["type"] = "rect_slit";
    j["width_m"] = r->width;
  } else if (const auto* g = std::get_if<Gaussian>(&spec.shape)) {
    j["type"] = "gaussian";
    j["waist_m"] = g->waist;
  } else if (const auto* p = std::get_if<GaussianPair>(&spec.shape)) {
    j["type"] = "gaussian_pair";
    j["waist_m"] = p->waist;
    j["separation_m"] = p->separation;
    j["relative_phase_rad"] = p->relative_phase;
  } else {
    const auto& c = std::get<CustomSamples>(spec.shape);
    j["type"] = "custom";
    auto& arr = j["samples"] = nlohmann::json::array();
    for (const auto& u : c.samples) arr.push_back({u.real(), u.imag()});
  }
  if (spec.amplitude != 1.0) j["amplitude"] = spec.amplitude;
  return j;
}

namespace {

double require_number(const nlohmann::json& j, const char* key, const char* where) {
  if (!j.contains(key) || !j[key].is_number())
    fail(ErrorCode::SchemaError, std::string(where) + "/" + key + ": required number");
  return j[key].get<double>();
}

}  // namespace

SourceSpec source_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail(ErrorCode::SchemaError, "/source/type: required string");
  SourceSpec spec;
  const std::string type = j["type"].get<std::string>();
  if (type == "rect_slit") {
    spec.shape = RectSlit{require_number(j, "width_m", "/source")};
  } else if (type == "gaussian") {
    spec.shape = Gaussian{require_number(j, "waist_m", "/source")};
  } else if (type == "gaussian_pair") {
    GaussianPair p;
    p.waist = require_number(j, "waist_m", "/source");
    p.separation = require_number(j, "separation_m", "/source");
    p.relative_phase =
        j.contains("relative_phase_rad") ? require_number(j, "relative_phase_rad", "/source") : 0.0;
    spec.shape = p;
  } else if (type == "custom") {
    if (!j.contains("samples") || !j["samples"].is_array())
      fail(ErrorCode::SchemaError, "/source/samples: required array");
    CustomSamples c;
    for (const auto& entry : j["samples"]) {
      if (!entry.is_array() || entry.size() != 2)
        fail(ErrorCode::SchemaError, "/source/samples: entries must be [re, im]");
      c.samples.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    spec.shape = std::move(c);
  } else {
    fail(ErrorCode::SchemaError, "/source/type: unknown type '" + type + "'");
  }
  if (j.contains("amplitude")) spec.amplitude = require_number(j, "amplitude", "/source");
  return spec;
}

nlohmann::json curvature_to_json(const Curvature& c) {
  if (c.is_flat()) return "flat";
  return c.radius();
}

Curvature curvature_from_json(const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "flat") return Curvature::flat();
  if (j.is_number()) return Curvature::finite(j.get<double>());
  fail(ErrorCode::SchemaError, "curvature: expected \"flat\" or a number");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::SchemaError, "cannot open for writing: " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SchemaError, "cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_field_csv(const SampledField& field, const std::string& path, bool with_intensity) {
  std::string csv = with_intensity ? "x_m,re,im,intensity\n" : "x_m,re,im\n";
  for (std::size_t j = 0; j < field.size(); ++j) {
    csv += format_double(field.coord(j));
    csv += ',';
    csv += format_double(field.samples[j].real());
    csv += ',';
    csv += format_double(field.samples[j].imag());
    if (with_intensity) {
      csv += ',';
      csv += format_double(std::norm(field.samples[j]));
    }
    csv += '\n';
  }
  write_text_file(path, csv);

  nlohmann::json meta;
  meta["n"] = field.size();
  meta["dx_m"] = field.dx;
  meta["x0_m"] = field.x0;
  meta["lambda_m"] = field.wavelength;
  meta["curvature_radius_m"] = curvature_to_json(field.curvature);
  write_text_file(path + ".meta.json", meta.dump(2) + "\n");
}

SampledField read_field_csv(const std::string& path) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(read_text_file(path + ".meta.json"));
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::SchemaError, std::string("sidecar: ") + e.what());
  }
  SampledField field;
  field.dx = require_number(meta, "dx_m", "/meta");
  field.x0 = require_number(meta, "x0_m", "/meta");
  field.wavelength = require_number(meta, "lambda_m", "/meta");
  if (!meta.contains("curvature_radius_m"))
    fail(ErrorCode::SchemaError, "/meta/curvature_radius_m: required");
  field.curvature = curvature_from_json(meta["curvature_radius_m"]);

  const std::string csv = read_text_file(path);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string x, re, im;
    std::getline(cells, x, ',');
    std::getline(cells, re, ',');
    std::getline(cells, im, ',');
    field.samples.emplace_back(parse_double(re), parse_double(im));
  }
  if (meta.contains("n") && meta["n"].get<std::size_t>() != field.size())
    fail(ErrorCode::SchemaError, "/meta/n: does not match the CSV row count");
  validate_field(field);
  return field;
}

void write_reduced_csv(const ReducedSignal& signal, const std::string& path,
                       const std::string& coord_name) {
  std::string csv = coord_name + ",re,im,intensity\n";
  for (std::size_t j = 0; j < signal.size(); ++j) {
    csv += format_double(signal.coord(j));
    csv += ',';
    csv += format_double(signal.samples[j].real());
    csv += ',';
    csv += format_double(signal.samples[j].imag());
    csv += ',';
    csv += format_double(std::norm(signal.samples[j]));
    csv += '\n';
  }
  write_text_file(path, csv);
}

void write_scan_csv(const DetectorScan& scan, const std::string& csv_path,
                    const std::string& meta_path) {
  std::string csv = "position_m,expected,counts\n";
  for (std::size_t i = 0; i < scan.positions.size(); ++i) {
    csv += format_double(scan.positions[i]);
    csv += ',';
    csv += format_double(scan.expected[i]);
    csv += ',';
    csv += std::to_string(scan.counts[i]);
    csv += '\n';
  }
  write_text_file(csv_path, csv);

  nlohmann::json meta;
  meta["seed"] = scan.seed;
  meta["rng"] = scan.rng_name;
  meta["rate_scale"] = scan.rate_scale;
  meta["dwell_s"] = scan.dwell_time;
  meta["detector_width_m"] = scan.detector_width;
  write_text_file(meta_path, meta.dump(2) + "\n");
}

}  // namespace fropt
