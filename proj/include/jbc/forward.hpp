#pragma once

#include <Eigen/Dense>
#include <vector>

#include "jbc/core.hpp"

namespace jbc {

/// Triangular snapshot u_{n,t} of a boundary-driven wave, 0 <= n <= t <=
/// horizon. Entries with n > t vanish identically (one site per time step)
/// and are not stored. Row 0 carries the control: u_{0,t} = f_t.
struct WaveField {
  // rows[n][t - n] = u_{n,t}
  std::vector<std::vector<Complex>> rows;
  int horizon = 0;

  Complex at(int n, int t) const {
    if (t < 0 || t > horizon || n < 0) {
      throw std::out_of_range("wave field index out of range");
    }
    if (n > t) return Complex(0.0, 0.0);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - n)];
  }
};

/// Kernel w_{n,s} of the solution representation
///   u_{n,t} = prod_{k<n} a_k * f_{t-n} + sum_{s=n}^{t-1} w_{n,s} f_{t-s-1},
/// stored for 1 <= n <= s <= horizon-1; w_{n,s} = 0 for s < n and w_{0,s} = 0.
struct GoursatKernel {
  // rows[n - 1][s - n] = w_{n,s}
  std::vector<std::vector<Complex>> rows;
  int horizon = 0;

  Complex at(int n, int s) const {
    if (n < 0 || s < 0 || n > horizon - 1 || s > horizon - 1) {
      throw std::out_of_range("kernel index out of range");
    }
    if (n == 0 || s < n) return Complex(0.0, 0.0);
    return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s - n)];
  }
};

/// Upper-triangular factor V of the control-to-snapshot map W = V * J, where
/// (Jf)_n = f_{T-1-n} reverses the control in time. Diagonal entries are the
/// coupling products prod_{j<k} a_j, strictly upper entries come from the
/// Goursat kernel, so V is always invertible.
struct ControlMatrix {
  Eigen::MatrixXcd v;
  bool j_applied = false;  // true when the time reversal is already folded in

  int size() const { return static_cast<int>(v.rows()); }

  /// The full control map W (time reversal folded in).
  Eigen::MatrixXcd w() const;

  /// Snapshot u_{1..T, T} produced by a control.
  std::vector<Complex> apply(const BoundaryControl& f) const;
};

/// Marches the three-point recurrence
///   u_{n,t+1} = a_n u_{n+1,t} + a_{n-1} u_{n-1,t} + b_n u_{n,t} - u_{n,t-1}
/// from rest with u_{0,t} = f_t (f continued by zeros). Coefficients beyond
/// the stored depth are continued with a_k = 1, b_k = 0; values outside the
/// dependence cone of the stored triangle cannot affect it.
WaveField simulate(const JacobiCoefficients& c, const BoundaryControl& f,
                   int horizon);

/// Kernel of the boundary response map: r_t = u^delta_{1,t+1} for
/// t = 0..2*window-2, obtained from a delta-driven run to horizon 2*window-1.
ResponseVector response_vector(const JacobiCoefficients& c, int window);

/// Applies the response map by convolution: out_t = sum_{s<t} r_{t-1-s} f_s
/// for t = 1..f.window(). Equals the n = 1 row of the underlying wave.
std::vector<Complex> apply_response(const ResponseVector& r,
                                    const BoundaryControl& f);

/// Computes w by the forward Goursat recursion: diagonal
///   w_{n,n} = b_n prod_{k<n} a_k + a_{n-1} w_{n-1,n-1}
/// and, above it, the interior recurrence with the source
/// -(1 - a_n^2) prod_{k<n} a_k injected at s = n.
GoursatKernel goursat_kernel(const JacobiCoefficients& c, int horizon);

/// Builds the triangular factor V of the control map for a given size.
ControlMatrix control_matrix(const JacobiCoefficients& c, int size);

/// Finds the unique control steering the snapshot to `target` (entries
/// y_1..y_T): back-substitution on V followed by the time reversal.
BoundaryControl control_solve(const JacobiCoefficients& c,
                              const std::vector<Complex>& target);

/// Coefficients of the companion system: entrywise complex conjugate. Its
/// response vector is the conjugate of the original one.
JacobiCoefficients conjugate_system(const JacobiCoefficients& c);

}  // namespace jbc
