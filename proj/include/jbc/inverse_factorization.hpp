#pragma once

#include <vector>

#include "jbc/connecting.hpp"
#include "jbc/core.hpp"
#include "jbc/reconstruction.hpp"

namespace jbc {

/// Determinants of the nested leading blocks of the rotated connecting
/// matrix, plus the modified minors with the last column substituted.
struct MinorLadder {
  // det[k] = det of the k x k leading block, k = 0..T; det[0] = 1 and the
  // virtual det of the (-1)-block is 1 by convention.
  std::vector<Complex> det;
  // det_mod[k] = det of the k x k leading block with its last column
  // replaced by (c_{1,k+1}, ..., c_{k,k+1}), k = 0..T-1; det_mod[0] = 0 by
  // convention (as is the virtual (-1)-entry).
  std::vector<Complex> det_mod;
};

/// Computes both ladders by an independent pivoted elimination per block.
/// Requires the Rotated orientation. Zero determinants are reported as-is;
/// consumers decide what is singular.
MinorLadder minor_ladder(const ConnectingMatrix& rotated);

/// Recovers the coefficients from determinant ratios:
///   (a_k)^2 = det C_{k+1} det C_{k-1} / (det C_k)^2,
///   b_k     = det C_{k,k+1} / det C_k - det C_{k-1,k} / det C_{k-1},
/// for k = 1..depth-1, with a_0 = r_0. Throws Error{SingularMinor, k} when a
/// leading block is singular at tolerance — the response vector then fails
/// the characterization at block k.
ReconstructionResult reconstruct_factorization(const ResponseVector& r,
                                               int depth,
                                               const ToleranceConfig& tol = {});

}  // namespace jbc
