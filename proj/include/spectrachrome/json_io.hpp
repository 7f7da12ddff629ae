#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "spectrachrome/bounds.hpp"
#include "spectrachrome/quantum.hpp"
#include "spectrachrome/spectral.hpp"

namespace spectrachrome {

/// Rounds to 15 significant digits and maps -0 to 0, so that output is stable
/// under last-bit noise.
double stable_number(double x);

/// {"distinct": [...], "mult": [...]}.
nlohmann::json spectrum_to_json(const Spectrum& s);

/// {graph, n, k, method, raw_value, integer_bound, witness_poly, applicable, notes}.
nlohmann::json bound_report_to_json(const BoundReport& r, const Graph& g);

nlohmann::json certificate_to_json(const Certificate& c, const Graph& g, int k);

/// {pass, max_residual, violations: [{kind, v, w, h, residual}]}.
nlohmann::json verdict_to_json(const Verdict& v);

/// Array of {v, h, matrix: [[re, im], ...]} with d*d row-major entries.
nlohmann::json quantum_coloring_to_json(const QuantumColoring& qc);

/// Inverse of quantum_coloring_to_json. Omitted (v, h) pairs are zero
/// matrices. `n` fixes the vertex count (else max v + 1). Throws ParseError on
/// malformed JSON and StructuralError on inconsistent shapes.
QuantumColoring parse_quantum_coloring(std::string_view text, std::optional<std::size_t> n = std::nullopt);

}  // namespace spectrachrome
