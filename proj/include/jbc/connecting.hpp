#pragma once

#include <Eigen/Dense>

#include "jbc/core.hpp"
#include "jbc/forward.hpp"

namespace jbc {

/// Which corner of the connecting matrix carries the bare a_0 * r_0 entry.
/// Unrotated has it at (T,T); Rotated (both indices reversed) at (1,1). The
/// Krein path consumes the unrotated form, the factorization path the
/// rotated one, so the tag is explicit and never inferred.
enum class Orientation { Unrotated, Rotated };

/// Dense complex symmetric T x T matrix pairing waves of the system with
/// waves of its conjugate companion. Expressible from the response vector
/// alone, which is what makes it usable as inverse data.
struct ConnectingMatrix {
  Eigen::MatrixXcd entries;
  Orientation orientation = Orientation::Unrotated;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Assembles the unrotated matrix from a response vector:
///   entries_{ij} = a_0 * sum_{k=0}^{T-max(i,j)} r_{|i-j|+2k}   (1-based),
/// with a_0 = r_0. Symmetry is exact by construction (upper triangle
/// mirrored).
ConnectingMatrix connecting_from_response(const ResponseVector& r, int size);

/// Reverses both indices: entries'_{ij} = entries_{T+1-j, T+1-i}. Involutive,
/// toggles the orientation tag, preserves complex symmetry.
ConnectingMatrix rotate(const ConnectingMatrix& c);

/// Independent route to the same matrix: transpose(W) * W from the simulated
/// control map (the pairing with the conjugate companion collapses to a
/// plain transpose). Used to cross-check connecting_from_response.
ConnectingMatrix connecting_oracle(const JacobiCoefficients& c, int size);

}  // namespace jbc
