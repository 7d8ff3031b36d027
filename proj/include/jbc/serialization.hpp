#pragma once

// Canonical JSON forms of the value types. Keys are emitted sorted, complex
// numbers as two-element [re, im] arrays; parsing is strict and raises
// Error{ParseError} on any malformed document.

#include <string>
#include <vector>

#include <json.hpp>

#include "jbc/characterize.hpp"
#include "jbc/core.hpp"
#include "jbc/reconstruction.hpp"

namespace jbc {

nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const std::vector<Complex>& v);
nlohmann::json to_json(const JacobiCoefficients& c);
nlohmann::json to_json(const BoundaryControl& f);
nlohmann::json to_json(const ResponseVector& r);
nlohmann::json to_json(const ToleranceConfig& tol);
nlohmann::json to_json(const ReconstructionResult& rec);
nlohmann::json to_json(const CharacterizationReport& report);

Complex complex_from_json(const nlohmann::json& j);
std::vector<Complex> complex_vector_from_json(const nlohmann::json& j);
JacobiCoefficients coefficients_from_json(const nlohmann::json& j);
BoundaryControl control_from_json(const nlohmann::json& j);
ResponseVector response_from_json(const nlohmann::json& j);
/// Missing keys keep their defaults; unknown keys are rejected.
ToleranceConfig tolerances_from_json(const nlohmann::json& j);

/// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace jbc
