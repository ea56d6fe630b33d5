#pragma once

#include <string>

#include <json.hpp>

#include "morrey/analysis.hpp"
#include "morrey/discrete_norm.hpp"
#include "morrey/sequence.hpp"
#include "morrey/step_function.hpp"

namespace morrey {

/// Nearest double to x rendered with 12 significant digits; all reals pass
/// through this before serialization so output is reproducible.
double round_sig12(double x);

/// "%.12g" rendering.
std::string format_real(double x);

// Sequence interchange format: {"entries": [[index_string, value], ...]}
// with indices as decimal strings to stay safe for 128-bit values.
nlohmann::json sequence_to_json(const SparseSequence& seq);

/// Parses the interchange format; throws std::invalid_argument naming the
/// offending entry on malformed input.
SparseSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json window_to_json(const Window& w);
nlohmann::json norm_result_to_json(const NormResult& r);
nlohmann::json interval_result_to_json(const IntervalNormResult& r);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json verdict_to_json(const InclusionVerdict& v);
nlohmann::json equivalence_to_json(const EquivalenceReport& r,
                                   const MorreyParams& params);

}  // namespace morrey
