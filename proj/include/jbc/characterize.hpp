#pragma once

#include <optional>
#include <vector>

#include "jbc/core.hpp"
#include "jbc/reconstruction.hpp"

namespace jbc {

/// Verdict on whether a candidate vector can be a response vector: it can
/// if and only if every nested leading block of the rotated connecting
/// matrix built from it is invertible.
struct CharacterizationReport {
  bool valid = false;
  std::vector<double> block_determinants;  // |det| of blocks 1..T
  std::vector<double> block_margins;       // |det| / row-norm product, in [0,1]
  std::optional<int> first_failure;        // smallest failing block size
  double threshold_used = 0.0;
};

/// Tests every leading block of the rotated connecting matrix for
/// invertibility at the relative threshold. The candidate must have odd
/// length (throws Error{EvenLength}) and a leading entry bounded away from
/// zero (throws Error{ZeroLeadingEntry}; the boundary coupling equals r_0
/// and may not vanish). All blocks are reported even past the first failure.
CharacterizationReport characterize(const std::vector<Complex>& candidate,
                                    const ToleranceConfig& tol = {});

/// Constructive check of the sufficiency direction: reconstructs
/// coefficients from the candidate (principal square roots), simulates them
/// forward, and returns max_k |r_k - r^new_k|. A genuine response vector
/// yields a residual within roundtrip_tol. Reconstruction failures
/// propagate.
double verify_roundtrip(const std::vector<Complex>& candidate,
                        const ToleranceConfig& tol = {});

}  // namespace jbc
