#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jbc {

using Complex = std::complex<double>;

/// Failure classes shared across the library. `index()` carries the offending
/// coefficient index, window, or block size where that is meaningful.
enum class ErrorCode {
  LengthMismatch,
  ZeroCoupling,
  NonFinite,
  InvalidHorizon,
  WindowTooShort,
  SingularConnecting,
  DegenerateTrajectory,
  SingularMinor,
  ZeroLeadingEntry,
  EvenLength,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

/// Numerical thresholds. `singular_threshold` is relative: a block counts as
/// singular when |det| falls below threshold times the product of its row
/// 2-norms (Hadamard scale, so the margin is always in [0, 1]).
struct ToleranceConfig {
  double singular_threshold = 1e-12;
  double roundtrip_tol = 1e-8;
  double oracle_tol = 1e-10;
};

/// The coupling/potential sequences of a semi-infinite tridiagonal system.
/// a[k] holds a_k for k = 0..depth-1 (a_0 couples the boundary site);
/// b[k-1] holds b_k for k = 1..depth-1. All a_k must be nonzero.
struct JacobiCoefficients {
  std::vector<Complex> a;
  std::vector<Complex> b;
  int depth = 0;

  /// a_k, continued with 1 beyond the stored range.
  Complex a_padded(int k) const {
    return k < static_cast<int>(a.size()) ? a[k] : Complex(1.0, 0.0);
  }
  /// b_k (k >= 1), continued with 0 beyond the stored range.
  Complex b_padded(int k) const {
    return (k >= 1 && k <= static_cast<int>(b.size())) ? b[k - 1]
                                                       : Complex(0.0, 0.0);
  }
};

/// A boundary input sequence f_0, f_1, ...; consumers treat it as continued
/// by zeros past its stored length.
struct BoundaryControl {
  std::vector<Complex> f;

  int window() const { return static_cast<int>(f.size()); }

  /// The unit impulse (1, 0, 0, ...).
  static BoundaryControl delta(int length = 1) {
    BoundaryControl d;
    d.f.assign(static_cast<std::size_t>(length), Complex(0.0, 0.0));
    if (length > 0) d.f[0] = Complex(1.0, 0.0);
    return d;
  }
};

/// Convolution kernel of the boundary response map: r_0..r_{2T-2} where T is
/// the window. r_0 equals the boundary coupling a_0 when the vector comes
/// from a simulation.
struct ResponseVector {
  std::vector<Complex> r;

  int window() const { return (static_cast<int>(r.size()) + 1) / 2; }
};

/// Checks the structural invariants and returns the input unchanged.
/// Throws Error{LengthMismatch} when the sequence lengths disagree with
/// depth, Error{NonFinite} on NaN/Inf entries, and Error{ZeroCoupling, k}
/// when |a_k| <= singular_threshold * max_j |a_j|.
const JacobiCoefficients& validate_coefficients(const JacobiCoefficients& c,
                                                const ToleranceConfig& tol = {});

}  // namespace jbc
