#pragma once

#include <vector>

#include "jbc/core.hpp"

namespace jbc {

enum class Method { Krein, Factorization };

/// Output of either inverse method: the boundary coupling, the squares of
/// the interior couplings (signs are unrecoverable in principle), and the
/// diagonal entries, plus per-step conditioning margins.
struct ReconstructionResult {
  Complex a0{};
  std::vector<Complex> a_sq;  // (a_1)^2 .. (a_{T-1})^2
  std::vector<Complex> b;     // b_1 .. b_{T-1}
  // Normalized |det| margins of the linear systems solved along the way
  // (windows 2..T for the Krein route, blocks 1..T for the minor route).
  std::vector<double> step_margins;
  Method method = Method::Krein;

  int depth() const { return static_cast<int>(a_sq.size()) + 1; }

  /// Concrete coefficients with a_k taken as the principal square root of
  /// (a_k)^2. Any sign assignment generates the same response; the principal
  /// branch is just the canonical pick.
  JacobiCoefficients materialize() const;
};

}  // namespace jbc
