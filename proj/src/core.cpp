#include "jbc/core.hpp"

#include <algorithm>
#include <cmath>

namespace jbc {

namespace {

bool finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

const JacobiCoefficients& validate_coefficients(const JacobiCoefficients& c,
                                                const ToleranceConfig& tol) {
  if (c.depth < 1) {
    throw Error(ErrorCode::LengthMismatch,
                "coefficient depth must be at least 1, got " +
                    std::to_string(c.depth));
  }
  if (static_cast<int>(c.a.size()) != c.depth) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(c.depth) + " couplings, got " +
                    std::to_string(c.a.size()));
  }
  if (static_cast<int>(c.b.size()) != c.depth - 1) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(c.depth - 1) +
                    " diagonal entries, got " + std::to_string(c.b.size()));
  }
  for (std::size_t k = 0; k < c.a.size(); ++k) {
    if (!finite(c.a[k])) {
      throw Error(ErrorCode::NonFinite,
                  "coupling a_" + std::to_string(k) + " is not finite",
                  static_cast<long>(k));
    }
  }
  for (std::size_t k = 0; k < c.b.size(); ++k) {
    if (!finite(c.b[k])) {
      throw Error(ErrorCode::NonFinite,
                  "diagonal b_" + std::to_string(k + 1) + " is not finite",
                  static_cast<long>(k + 1));
    }
  }
  double max_mod = 0.0;
  for (const Complex& ak : c.a) max_mod = std::max(max_mod, std::abs(ak));
  for (std::size_t k = 0; k < c.a.size(); ++k) {
    if (std::abs(c.a[k]) <= tol.singular_threshold * max_mod) {
      throw Error(ErrorCode::ZeroCoupling,
                  "coupling a_" + std::to_string(k) + " vanishes",
                  static_cast<long>(k));
    }
  }
  return c;
}

}  // namespace jbc
