#pragma once

#include <string>

#include <json.hpp>

#include "fropt/counting.hpp"
#include "fropt/field.hpp"
#include "fropt/frft_types.hpp"

namespace fropt {

// All numeric text I/O goes through to_chars/from_chars: locale-independent,
// shortest round-trip representation.
std::string format_double(double value);
double parse_double(const std::string& text);

nlohmann::json source_spec_to_json(const SourceSpec& spec);
SourceSpec source_spec_from_json(const nlohmann::json& j);

nlohmann::json curvature_to_json(const Curvature& c);
Curvature curvature_from_json(const nlohmann::json& j);

// CSV columns x_m, re, im[, intensity]; grid metadata goes to the sidecar
// "<path>.meta.json" as {n, dx_m, x0_m, lambda_m, curvature_radius_m}.
void write_field_csv(const SampledField& field, const std::string& path,
                     bool with_intensity = true);
SampledField read_field_csv(const std::string& path);

// Reduced signals use the same layout with a "sigma" coordinate column.
void write_reduced_csv(const ReducedSignal& signal, const std::string& path,
                       const std::string& coord_name = "sigma");

// CSV columns position_m, expected, counts; metadata JSON alongside.
void write_scan_csv(const DetectorScan& scan, const std::string& csv_path,
                    const std::string& meta_path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace fropt
