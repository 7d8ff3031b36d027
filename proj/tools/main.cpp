// Command-line front end: instance generation, simulation, response
// extraction, reconstruction, characterization, and roundtrip reports.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 characterization
// failure, 3 numerical singularity or degeneracy.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jbc/characterize.hpp"
#include "jbc/core.hpp"
#include "jbc/forward.hpp"
#include "jbc/instance.hpp"
#include "jbc/inverse_factorization.hpp"
#include "jbc/inverse_krein.hpp"
#include "jbc/serialization.hpp"

namespace {

using jbc::Complex;
using nlohmann::json;

int exit_code_for(const jbc::Error& e) {
  switch (e.code()) {
    case jbc::ErrorCode::ParseError:
    case jbc::ErrorCode::EvenLength:
    case jbc::ErrorCode::LengthMismatch:
    case jbc::ErrorCode::WindowTooShort:
    case jbc::ErrorCode::InvalidHorizon:
      return 1;
    case jbc::ErrorCode::ZeroLeadingEntry:
      return 2;
    default:
      return 3;
  }
}

int fail(const jbc::Error& e) {
  std::cerr << jbc::dump_canonical(json{{"error", e.what()}});
  return exit_code_for(e);
}

std::string fmt_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

std::string fnv1a_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 1469598103934665603ull;
  char ch;
  while (in.get(ch)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json make_report(const std::string& command) {
  return json{{"command", command},
              {"inputs", json::object()},
              {"outputs", json::object()},
              {"residuals", json::object()},
              {"diagnostics", json::object()}};
}

void emit(json& report, const Stopwatch& watch) {
  report["wall_ms"] = watch.ms();
  std::cout << jbc::dump_canonical(report);
}

void note_input(json& report, const std::string& name,
                const std::string& path) {
  report["inputs"][name] = json{{"path", path}, {"digest", fnv1a_hex(path)}};
}

void note_output(json& report, const std::string& name,
                 const std::string& path) {
  report["outputs"][name] = json{{"path", path}, {"digest", fnv1a_hex(path)}};
}

struct Options {
  std::string coeffs_path;
  std::string control_path;
  std::string response_path;
  std::string out_path;
  std::string tolerances_path;
  std::string profile = "wide";
  std::string method = "both";
  int depth = 0;
  int steps = 0;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
};

jbc::ToleranceConfig resolve_tolerances(const Options& opt) {
  std::string path = opt.tolerances_path;
  if (path.empty()) {
    if (const char* env = std::getenv("JACOBI_BC_TOLERANCES")) path = env;
  }
  if (path.empty()) return {};
  return jbc::tolerances_from_json(jbc::load_json_file(path));
}

jbc::JacobiCoefficients load_coefficients(const std::string& path,
                                          const jbc::ToleranceConfig& tol) {
  auto c = jbc::coefficients_from_json(jbc::load_json_file(path));
  jbc::validate_coefficients(c, tol);
  return c;
}

bool all_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

int run_gen(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  const jbc::Profile profile = opt.profile == "unit-modulus"
                                   ? jbc::Profile::UnitModulus
                                   : jbc::Profile::Wide;
  try {
    auto c = jbc::random_coefficients(opt.depth, opt.seed, profile);
    jbc::save_json_file(opt.out_path, jbc::to_json(c));
    note_output(report, "coefficients", opt.out_path);
    report["diagnostics"] = json{
        {"depth", opt.depth}, {"seed", opt.seed}, {"profile", opt.profile}};
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  emit(report, watch);
  return 0;
}

int run_simulate(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  jbc::ToleranceConfig tol;
  jbc::JacobiCoefficients c;
  jbc::BoundaryControl f;
  try {
    tol = resolve_tolerances(opt);
    c = load_coefficients(opt.coeffs_path, tol);
    f = jbc::control_from_json(jbc::load_json_file(opt.control_path));
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  note_input(report, "coefficients", opt.coeffs_path);
  note_input(report, "control", opt.control_path);
  try {
    auto u = jbc::simulate(c, f, opt.steps);
    double peak = 0.0;
    std::ostringstream csv;
    csv << "n,t,re,im\n";
    for (int n = 0; n <= u.horizon; ++n) {
      for (int t = n; t <= u.horizon; ++t) {
        const Complex z = u.at(n, t);
        peak = std::max(peak, std::abs(z));
        csv << n << ',' << t << ',' << fmt_double(z.real()) << ','
            << fmt_double(z.imag()) << '\n';
      }
    }
    if (!std::isfinite(peak)) {
      throw jbc::Error(jbc::ErrorCode::NonFinite,
                       "simulation produced non-finite values");
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << csv.str())) {
      throw jbc::Error(jbc::ErrorCode::ParseError,
                       "cannot write " + opt.out_path);
    }
    out.close();
    note_output(report, "wavefield", opt.out_path);
    report["diagnostics"] = json{{"horizon", opt.steps}, {"peak", peak}};
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  emit(report, watch);
  return 0;
}

int run_response(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  jbc::ToleranceConfig tol;
  jbc::JacobiCoefficients c;
  try {
    tol = resolve_tolerances(opt);
    c = load_coefficients(opt.coeffs_path, tol);
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  note_input(report, "coefficients", opt.coeffs_path);
  try {
    auto r = jbc::response_vector(c, opt.steps);
    if (!all_finite(r.r)) {
      throw jbc::Error(jbc::ErrorCode::NonFinite,
                       "response extraction produced non-finite values");
    }
    jbc::save_json_file(opt.out_path, jbc::to_json(r));
    note_output(report, "response", opt.out_path);
    report["diagnostics"] = json{{"window", opt.steps}};
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  emit(report, watch);
  return 0;
}

// worst entrywise gap: absolute on a_0 and b_k, relative on the squares
double method_disagreement(const jbc::ReconstructionResult& x,
                           const jbc::ReconstructionResult& y) {
  double worst = std::abs(x.a0 - y.a0);
  for (std::size_t k = 0; k < x.b.size(); ++k) {
    worst = std::max(worst, std::abs(x.b[k] - y.b[k]));
    const double scale = std::max(1.0, std::abs(x.a_sq[k]));
    worst = std::max(worst, std::abs(x.a_sq[k] - y.a_sq[k]) / scale);
  }
  return worst;
}

int run_reconstruct(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  jbc::ToleranceConfig tol;
  jbc::ResponseVector r;
  try {
    tol = resolve_tolerances(opt);
    r = jbc::response_from_json(jbc::load_json_file(opt.response_path));
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  note_input(report, "response", opt.response_path);
  const int depth = opt.depth > 0 ? opt.depth : r.window();
  try {
    std::optional<jbc::ReconstructionResult> via_krein;
    std::optional<jbc::ReconstructionResult> via_minors;
    if (opt.method == "krein" || opt.method == "both") {
      if (opt.alpha || opt.beta) {
        jbc::KreinParameters p;
        p.alpha = Complex(opt.alpha.value_or(0.0), 0.0);
        p.beta = Complex(opt.beta.value_or(0.0), 0.0);
        via_krein = jbc::reconstruct_krein(r, depth, p, tol);
      } else {
        via_krein = jbc::reconstruct_krein(r, depth, tol);
      }
    }
    if (opt.method == "factorization" || opt.method == "both") {
      via_minors = jbc::reconstruct_factorization(r, depth, tol);
    }
    json out;
    if (via_krein && via_minors) {
      const double agreement = method_disagreement(*via_krein, *via_minors);
      out = json{{"krein", jbc::to_json(*via_krein)},
                 {"factorization", jbc::to_json(*via_minors)},
                 {"agreement", agreement}};
      report["residuals"]["method_agreement"] = agreement;
      if (agreement > tol.roundtrip_tol) {
        jbc::save_json_file(opt.out_path, out);
        throw jbc::Error(jbc::ErrorCode::DegenerateTrajectory,
                         "reconstruction methods disagree by " +
                             std::to_string(agreement));
      }
    } else {
      out = jbc::to_json(via_krein ? *via_krein : *via_minors);
    }
    jbc::save_json_file(opt.out_path, out);
    note_output(report, "reconstruction", opt.out_path);
    const auto& margins =
        via_minors ? via_minors->step_margins : via_krein->step_margins;
    report["diagnostics"] = json{{"depth", depth}, {"step_margins", margins}};
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  emit(report, watch);
  return 0;
}

int run_characterize(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  jbc::ToleranceConfig tol;
  jbc::ResponseVector r;
  try {
    tol = resolve_tolerances(opt);
    r = jbc::response_from_json(jbc::load_json_file(opt.response_path));
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  note_input(report, "response", opt.response_path);
  jbc::CharacterizationReport verdict;
  try {
    verdict = jbc::characterize(r.r, tol);
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  json out = jbc::to_json(verdict);
  try {
    if (!opt.out_path.empty()) {
      jbc::save_json_file(opt.out_path, out);
      note_output(report, "report", opt.out_path);
    }
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  report["diagnostics"] = out;
  emit(report, watch);
  return verdict.valid ? 0 : 2;
}

int run_roundtrip(const Options& opt, const std::string& echo) {
  Stopwatch watch;
  json report = make_report(echo);
  jbc::ToleranceConfig tol;
  jbc::JacobiCoefficients c;
  try {
    tol = resolve_tolerances(opt);
    c = load_coefficients(opt.coeffs_path, tol);
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  note_input(report, "coefficients", opt.coeffs_path);
  const int depth = opt.steps > 0 ? opt.steps : c.depth;
  try {
    auto r = jbc::response_vector(c, depth);
    json methods = json::object();
    std::optional<jbc::ReconstructionResult> via_krein;
    std::optional<jbc::ReconstructionResult> via_minors;
    if (opt.method == "krein" || opt.method == "both") {
      via_krein = jbc::reconstruct_krein(r, depth, tol);
    }
    if (opt.method == "factorization" || opt.method == "both") {
      via_minors = jbc::reconstruct_factorization(r, depth, tol);
    }
    auto evaluate = [&](const jbc::ReconstructionResult& rec) {
      double coeff_err = std::abs(rec.a0 - c.a[0]);
      for (int k = 1; k < depth; ++k) {
        const Complex truth = c.a_padded(k) * c.a_padded(k);
        coeff_err = std::max(
            coeff_err,
            std::abs(rec.a_sq[static_cast<std::size_t>(k - 1)] - truth) /
                std::max(1.0, std::abs(truth)));
        coeff_err = std::max(
            coeff_err,
            std::abs(rec.b[static_cast<std::size_t>(k - 1)] - c.b_padded(k)));
      }
      auto regenerated = jbc::response_vector(rec.materialize(), depth);
      double residual = 0.0;
      for (std::size_t k = 0; k < r.r.size(); ++k) {
        residual = std::max(residual, std::abs(r.r[k] - regenerated.r[k]));
      }
      return json{{"max_coefficient_error", coeff_err},
                  {"response_residual", residual}};
    };
    if (via_krein) methods["krein"] = evaluate(*via_krein);
    if (via_minors) methods["factorization"] = evaluate(*via_minors);
    if (via_krein && via_minors) {
      methods["agreement"] = method_disagreement(*via_krein, *via_minors);
    }
    report["residuals"] = methods;
    report["diagnostics"] = json{{"depth", depth}};
    if (!opt.out_path.empty()) {
      jbc::save_json_file(opt.out_path, methods);
      note_output(report, "report", opt.out_path);
    }
  } catch (const jbc::Error& e) {
    return fail(e);
  }
  emit(report, watch);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boundary-controlled complex tridiagonal systems: forward "
               "simulation and coefficient recovery"};
  app.require_subcommand(1);

  Options opt;
  std::string echo;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) echo += ' ';
    echo += argv[i];
  }

  app.add_option("--tolerances", opt.tolerances_path,
                 "JSON file overriding the default tolerances (also read "
                 "from JACOBI_BC_TOLERANCES)");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--depth", opt.depth, "number of couplings")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "RNG seed")->required();
  gen->add_option("--profile", opt.profile, "coupling magnitude profile")
      ->check(CLI::IsMember({"wide", "unit-modulus"}));
  gen->add_option("-o,--out", opt.out_path, "output coefficients JSON")
      ->required();

  auto* simulate = app.add_subcommand("simulate", "run the forward dynamics");
  simulate->add_option("--coeffs", opt.coeffs_path, "coefficients JSON")
      ->required();
  simulate->add_option("--control", opt.control_path, "control JSON")
      ->required();
  simulate->add_option("--steps", opt.steps, "time horizon")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("-o,--out", opt.out_path, "output wavefield CSV")
      ->required();

  auto* response =
      app.add_subcommand("response", "extract the response vector");
  response->add_option("--coeffs", opt.coeffs_path, "coefficients JSON")
      ->required();
  response->add_option("--steps", opt.steps, "response window")
      ->required()
      ->check(CLI::PositiveNumber);
  response->add_option("-o,--out", opt.out_path, "output response JSON")
      ->required();

  auto* reconstruct = app.add_subcommand(
      "reconstruct", "recover coefficients from a response");
  reconstruct->add_option("--response", opt.response_path, "response JSON")
      ->required();
  reconstruct
      ->add_option("--method", opt.method, "krein, factorization, or both")
      ->check(CLI::IsMember({"krein", "factorization", "both"}));
  reconstruct->add_option("--depth", opt.depth,
                          "recovered depth (default: full window)");
  reconstruct->add_option("--alpha", opt.alpha,
                          "trajectory seed y_0 (default: automatic)");
  reconstruct->add_option("--beta", opt.beta,
                          "trajectory seed y_1 (default: automatic)");
  reconstruct->add_option("-o,--out", opt.out_path, "output JSON")->required();

  auto* characterize = app.add_subcommand(
      "characterize", "test whether a vector is a valid response");
  characterize->add_option("--response", opt.response_path, "candidate JSON")
      ->required();
  characterize->add_option("-o,--out", opt.out_path, "optional report JSON");

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "simulate, recover, and report the recovery quality");
  roundtrip->add_option("--coeffs", opt.coeffs_path, "coefficients JSON")
      ->required();
  roundtrip->add_option("--steps", opt.steps,
                        "response window (default: coefficient depth)");
  roundtrip
      ->add_option("--method", opt.method, "krein, factorization, or both")
      ->check(CLI::IsMember({"krein", "factorization", "both"}));
  roundtrip->add_option("-o,--out", opt.out_path, "optional report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_gen(opt, echo);
    if (simulate->parsed()) return run_simulate(opt, echo);
    if (response->parsed()) return run_response(opt, echo);
    if (reconstruct->parsed()) return run_reconstruct(opt, echo);
    if (characterize->parsed()) return run_characterize(opt, echo);
    if (roundtrip->parsed()) return run_roundtrip(opt, echo);
  } catch (const std::exception& e) {
    std::cerr << "{\n  \"error\": \"" << e.what() << "\"\n}\n";
    return 3;
  }
  return 1;
}
