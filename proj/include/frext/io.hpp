// io.hpp
//
// CSV/JSON exchange: curve specs, arc functions, plane fields, experiment
// reports.

#pragma once

#include <string>
#include <vector>

#include "frext/fields.hpp"

#include "json.hpp"

namespace frext {

using json = nlohmann::json;

// {"kind": "circle"|"parabola"|"perturbed_parabola"|"curvature_samples", ...}
CurveSpec curve_spec_from_json(const json& j);
json curve_spec_to_json(const CurveSpec& spec);

// CSV (s, Re f, Im f); the first column is the arc parameter (arclength for
// curvature-built arcs, y for graph arcs).
void write_arc_function_csv(const std::string& path, const ArcFunction& f);

// CSV (x, t, Re, Im)
void write_complex_field_csv(const std::string& path, const ComplexField& field);
// CSV (u, v, value)
void write_real_field_csv(const std::string& path, const RealField& field);

void write_text_file(const std::string& path, const std::string& content);

// fixed shortest-roundtrip formatting so identical runs emit identical bytes
std::string format_double(double v);

}  // namespace frext
