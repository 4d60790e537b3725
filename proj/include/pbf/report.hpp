#pragma once

#include <json.hpp>

#include "pbf/errors.hpp"

#include <optional>
#include <string>

namespace pbf {

using Json = nlohmann::ordered_json;

/// Parses a matrix spec file, mapping JSON syntax errors to parse_error.
Json parse_spec_json(const std::string& text);

/// Per-depth oscillation verdicts, Gauss-Borel factor tables and continued
/// fraction convergents. arithmetic_override ("exact" / "float64") wins over
/// the spec file's own setting.
Json run_analyze(const Json& input, std::size_t depth,
                 const std::optional<std::string>& arithmetic_override = std::nullopt);

/// Bidiagonal factorization at the given depth; alpha2 defaults to the
/// midpoint of the positivity interval. An "alphas" spec instead reconstructs
/// and reports the band entries.
Json run_factorize(const Json& input, const std::optional<std::string>& alpha2,
                   std::size_t depth);

/// Applies retract (needs s), tail (needs k), check, or check_shifted (needs
/// k) and embeds the derived bands as a re-ingestable spec.
Json run_transform(const Json& input, const std::string& kind,
                   const std::optional<std::string>& s, std::optional<std::size_t> k);

/// Convergent rows (n, convergent, gap) as a JSON document or CSV text.
std::string run_convergents(const Json& input, std::size_t k, std::size_t maxN,
                            const std::string& tol, const std::string& format);

/// Exit-code policy: 1 for input problems, 2 for mathematical failures.
int exit_code_for(const std::exception& e);

/// Deterministic two-space-indented rendering used by the CLI and bindings.
std::string render_report(const Json& report);

}  // namespace pbf
