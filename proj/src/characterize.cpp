#include "jbc/characterize.hpp"

#include <algorithm>
#include <cmath>

#include "jbc/connecting.hpp"
#include "jbc/detail/linalg.hpp"
#include "jbc/forward.hpp"
#include "jbc/inverse_factorization.hpp"

namespace jbc {

namespace {

// Shared structural checks; returns the window T = (len + 1) / 2.
int check_candidate(const std::vector<Complex>& candidate,
                    const ToleranceConfig& tol) {
  const std::size_t len = candidate.size();
  if (len == 0 || len % 2 == 0) {
    throw Error(ErrorCode::EvenLength,
                "candidate must have odd length, got " + std::to_string(len));
  }
  double max_mod = 0.0;
  for (const Complex& z : candidate) max_mod = std::max(max_mod, std::abs(z));
  if (std::abs(candidate[0]) <= tol.singular_threshold * max_mod) {
    throw Error(ErrorCode::ZeroLeadingEntry,
                "leading entry r_0 vanishes; it must equal a nonzero "
                "boundary coupling");
  }
  return static_cast<int>(len + 1) / 2;
}

}  // namespace

JacobiCoefficients ReconstructionResult::materialize() const {
  JacobiCoefficients c;
  c.depth = depth();
  c.a.reserve(a_sq.size() + 1);
  c.a.push_back(a0);
  for (const Complex& sq : a_sq) c.a.push_back(std::sqrt(sq));
  c.b = b;
  return c;
}

CharacterizationReport characterize(const std::vector<Complex>& candidate,
                                    const ToleranceConfig& tol) {
  const int window = check_candidate(candidate, tol);
  ResponseVector r;
  r.r = candidate;
  ConnectingMatrix c = rotate(connecting_from_response(r, window));

  CharacterizationReport report;
  report.threshold_used = tol.singular_threshold;
  report.block_determinants.reserve(static_cast<std::size_t>(window));
  report.block_margins.reserve(static_cast<std::size_t>(window));
  for (int k = 1; k <= window; ++k) {
    const auto analysis = detail::analyze(c.entries.topLeftCorner(k, k));
    report.block_determinants.push_back(std::abs(analysis.det));
    report.block_margins.push_back(analysis.margin);
    if (!report.first_failure && analysis.margin <= tol.singular_threshold) {
      report.first_failure = k;
    }
  }
  report.valid = !report.first_failure.has_value();
  return report;
}

double verify_roundtrip(const std::vector<Complex>& candidate,
                        const ToleranceConfig& tol) {
  const int window = check_candidate(candidate, tol);
  ResponseVector r;
  r.r = candidate;
  ReconstructionResult rec = reconstruct_factorization(r, window, tol);
  ResponseVector regenerated = response_vector(rec.materialize(), window);
  double residual = 0.0;
  for (std::size_t k = 0; k < candidate.size(); ++k) {
    residual = std::max(residual, std::abs(candidate[k] - regenerated.r[k]));
  }
  return residual;
}

}  // namespace jbc
