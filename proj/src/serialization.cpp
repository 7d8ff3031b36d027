#include "jbc/serialization.hpp"

#include <fstream>

namespace jbc {

using nlohmann::json;

nlohmann::json to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

nlohmann::json to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(to_json(z));
  return out;
}

nlohmann::json to_json(const JacobiCoefficients& c) {
  return json{{"depth", c.depth}, {"a", to_json(c.a)}, {"b", to_json(c.b)}};
}

nlohmann::json to_json(const BoundaryControl& f) {
  return json{{"f", to_json(f.f)}};
}

nlohmann::json to_json(const ResponseVector& r) {
  return json{{"window", r.window()}, {"r", to_json(r.r)}};
}

nlohmann::json to_json(const ToleranceConfig& tol) {
  return json{{"singular_threshold", tol.singular_threshold},
              {"roundtrip_tol", tol.roundtrip_tol},
              {"oracle_tol", tol.oracle_tol}};
}

nlohmann::json to_json(const ReconstructionResult& rec) {
  return json{{"a0", to_json(rec.a0)},
              {"a_sq", to_json(rec.a_sq)},
              {"b", to_json(rec.b)},
              {"diagnostics",
               json{{"method",
                     rec.method == Method::Krein ? "krein" : "factorization"},
                    {"step_margins", rec.step_margins}}}};
}

nlohmann::json to_json(const CharacterizationReport& report) {
  json out{{"verdict", report.valid ? "VALID" : "INVALID"},
           {"block_determinants", report.block_determinants},
           {"block_margins", report.block_margins},
           {"threshold", report.threshold_used}};
  if (report.first_failure) {
    out["first_failure"] = *report.first_failure;
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

const json& require_key(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    parse_fail(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    parse_fail("complex values must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

std::vector<Complex> complex_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) parse_fail("expected an array of complex values");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const json& item : j) out.push_back(complex_from_json(item));
  return out;
}

JacobiCoefficients coefficients_from_json(const nlohmann::json& j) {
  JacobiCoefficients c;
  const json& depth = require_key(j, "depth");
  if (!depth.is_number_integer()) parse_fail("depth must be an integer");
  c.depth = depth.get<int>();
  c.a = complex_vector_from_json(require_key(j, "a"));
  c.b = complex_vector_from_json(require_key(j, "b"));
  if (static_cast<int>(c.a.size()) != c.depth ||
      static_cast<int>(c.b.size()) != std::max(c.depth - 1, 0)) {
    parse_fail("sequence lengths disagree with depth");
  }
  return c;
}

BoundaryControl control_from_json(const nlohmann::json& j) {
  BoundaryControl f;
  f.f = complex_vector_from_json(require_key(j, "f"));
  return f;
}

ResponseVector response_from_json(const nlohmann::json& j) {
  ResponseVector r;
  const json& window = require_key(j, "window");
  if (!window.is_number_integer()) parse_fail("window must be an integer");
  r.r = complex_vector_from_json(require_key(j, "r"));
  if (static_cast<int>(r.r.size()) != 2 * window.get<int>() - 1) {
    parse_fail("response length must equal 2 * window - 1");
  }
  return r;
}

ToleranceConfig tolerances_from_json(const nlohmann::json& j) {
  if (!j.is_object()) parse_fail("tolerance document must be an object");
  ToleranceConfig tol;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) parse_fail("tolerance values must be numbers");
    const double x = value.get<double>();
    if (x < 0.0) parse_fail("tolerances must be nonnegative");
    if (key == "singular_threshold") {
      tol.singular_threshold = x;
    } else if (key == "roundtrip_tol") {
      tol.roundtrip_tol = x;
    } else if (key == "oracle_tol") {
      tol.oracle_tol = x;
    } else {
      parse_fail("unknown tolerance key \"" + key + "\"");
    }
  }
  return tol;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot open " + path + " for writing");
  out << dump_canonical(j);
  if (!out) parse_fail("failed writing " + path);
}

}  // namespace jbc
