#pragma once

// File formats: decimal vertex-set files, the 4-character base-15 certificate
// format, and JSON renderings of solver and bound results.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "shannon/bounds.hpp"
#include "shannon/independence.hpp"
#include "shannon/orbit.hpp"
#include "shannon/product.hpp"
#include "shannon/rounding.hpp"

namespace shannon {

/// Seven significant digits, e.g. "7.417148".
std::string format_real(double v);

/// {"display": "7.417148", "value": 7.417148248...}
nlohmann::json real_json(double v);

/// One tuple per line, coordinates comma-separated in decimal. Lines that are
/// blank or start with '#' are ignored on input.
void write_vertex_set(std::ostream& out, const VertexSet& s);
VertexSet read_vertex_set(std::istream& in, const ProductGraph& g);

/// Whitespace-separated tokens with one base-15 digit (0-9, A-E) per
/// coordinate. Throws InputError naming the first malformed token.
VertexSet parse_base15_set(std::string_view text, const ProductGraph& g);
std::string format_base15_set(const VertexSet& s, std::size_t per_line = 16);

nlohmann::json solve_result_json(const std::string& graph, const SolveResult& r,
                                 const std::string& witness_path, std::uint64_t seed);
nlohmann::json bound_report_json(const BoundReport& r);

/// Rounding pipeline configuration:
/// {"orbit": "m=.. gens=.. qs=..", "eps": ["0.12", ...], "target": "15/2",
///  "budget": {"seconds": 60, "iterations": 0, "restarts": 1}, "seed": 1}
struct PipelineConfig {
  OrbitSpec orbit;
  RoundingSpec rounding;
  HeuristicOptions heuristic;
};

/// Throws InputError on missing or malformed fields.
PipelineConfig parse_pipeline_config(const nlohmann::json& j);

}  // namespace shannon
