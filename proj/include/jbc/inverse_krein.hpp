#pragma once

#include <vector>

#include "jbc/connecting.hpp"
#include "jbc/core.hpp"
#include "jbc/reconstruction.hpp"

namespace jbc {

/// Weights of the discrete source representation: the solution of
/// kappa_{t+1} + kappa_{t-1} = 0 with kappa_T = 0, kappa_{T-1} = 1, i.e.
/// kappa_{T-1-2j} = (-1)^j and zero elsewhere.
struct KreinWeights {
  std::vector<double> values;  // kappa_0 .. kappa_{T-1}
};

/// Seed values (y_0, y_1) = (alpha, beta) of the comparison trajectory
///   a_k y_{k+1} + a_{k-1} y_{k-1} + b_k y_k = 0.
/// Must not both vanish.
struct KreinParameters {
  Complex alpha{0.0, 0.0};
  Complex beta{1.0, 0.0};
};

KreinWeights krein_weights(int window);

/// Right-hand side of the Krein equation over time indices 0..window-1:
///   rhs_s = a_0 * (beta * kappa_s - alpha * sum_{t>s} r_{t-1-s} kappa_t),
/// the second term being the plain transpose of the response matrix
/// R[t][s] = r_{t-1-s} (row t = 0 vanishes by causality) applied to kappa.
std::vector<Complex> krein_rhs(const ResponseVector& r,
                               const KreinParameters& p, int window);

/// Solves C^tau f = krein_rhs by pivoted elimination, where C^tau is the
/// unrotated connecting matrix built from r. Throws
/// Error{SingularConnecting, tau} when the matrix is singular at tolerance —
/// the response vector then fails the characterization at block tau.
BoundaryControl krein_control(const ResponseVector& r,
                              const KreinParameters& p, int window,
                              const ToleranceConfig& tol = {});

/// Recovers a_0, (a_k)^2 and b_k for k = 1..depth-1 from nested Krein solves.
/// Works in the scaled trajectory values y~_n = f^n_0 so the unknowable
/// coupling products cancel: with y~_0 = alpha, y~_1 = beta / a_0,
///   b_{n-1}     = (y~_{n-1} - f^n_1) / f^n_0 - sum_{k<n-1} b_k,
///   (a_{n-1})^2 = -(y~_{n-2} + b_{n-1} y~_{n-1}) / f^n_0,
/// and y~_n = f^n_0 thereafter. Throws Error{DegenerateTrajectory, n} when
/// f^n_0 vanishes at tolerance; retry with different seed values.
ReconstructionResult reconstruct_krein(const ResponseVector& r, int depth,
                                       const KreinParameters& p,
                                       const ToleranceConfig& tol = {});

/// Same, but retries automatically over the seeds (0,1), (1,0), (1,1) when a
/// trajectory degenerates; rethrows the last failure if all three do.
ReconstructionResult reconstruct_krein(const ResponseVector& r, int depth,
                                       const ToleranceConfig& tol = {});

}  // namespace jbc
