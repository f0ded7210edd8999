#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bergman/density.hpp"
#include "bergman/extremal.hpp"
#include "bergman/logconvex.hpp"
#include "bergman/poly.hpp"
#include "bergman/regularity.hpp"
#include "bergman/space.hpp"
#include "bergman/weights.hpp"

namespace bergman {

// All writers are deterministic: fixed field order and %.17g floats, so
// identical inputs produce byte-identical output. Non-finite numbers are
// emitted as JSON null.

// %.17g rendering (shortest text that round-trips a double at full precision
// is not required; 17 significant digits always round-trip).
std::string format_double(double v);

// JSON scalar helpers.
std::string json_number(double v);              // %.17g, non-finite -> "null"
std::string json_string(const std::string& s);  // quoted + escaped

// Polynomial as a JSON array of [re, im] pairs.
std::string poly_to_json(const Poly& f);
// Accepts either the bare array form or an object with a "coefficients" key
// (as written by solution_to_json). Throws std::invalid_argument on malformed
// input with a single-line diagnostic.
Poly poly_from_json(const std::string& text);

// Weight strings: "fock:alpha=1", "affine:a=2,b=1,R=1", "power:beta=2,R=1".
// parse_weight validates the weight before returning; format_weight emits the
// canonical string (round-trips through parse_weight). Custom weights have no
// string form and make format_weight throw.
WeightSpec parse_weight(const std::string& text);
std::string format_weight(const WeightSpec& spec);

// Structured reports.
std::string solution_to_json(const ExtremalSolution& sol, double p, const std::string& weight);
std::string bound_reports_to_json(const std::vector<BoundReport>& reports);
std::string density_to_json(const DensityReport& rep);
std::string decay_to_json(const DecayReport& rep);
std::string convexity_to_json(const ConvexityReport& rep);
std::string gamma_to_json(const GammaReport& rep);
std::string convergence_to_json(const std::vector<ConvergenceRow>& rows);
std::string continuity_to_json(const std::vector<ContinuityRow>& rows);
std::string dilation_to_json(const std::vector<DilationRow>& rows);

// Radial profiles as CSV. means_to_csv uses the exact header "r,Mp,Dp,Np".
std::string means_to_csv(const std::vector<MeansRow>& rows);
// Generic two-column CSV with the given header names.
std::string two_column_csv(const std::string& h1, const std::string& h2,
                           const std::vector<std::pair<double, double>>& rows);

// Small file helpers (throw std::runtime_error on I/O failure).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bergman
