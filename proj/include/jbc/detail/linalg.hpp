#pragma once

// Internal helpers around Eigen's partially pivoted LU. Not part of the
// public surface.

#include <Eigen/Dense>

#include "jbc/core.hpp"

namespace jbc::detail {

/// What one elimination pass yields: the determinant and a scale-free
/// regularity margin, min |pivot| / max |pivot| of the U factor. The margin
/// is invariant under scalar rescaling of the matrix, equals 1 for nonzero
/// 1x1 blocks, and collapses to the rounding floor exactly when elimination
/// meets a numerically zero pivot. (A determinant-over-row-norms margin is
/// unusable here: the matrices this library eliminates have determinants
/// that sit many orders below their row-norm products while every pivot is
/// still healthy.)
struct BlockAnalysis {
  Complex det{1.0, 0.0};
  double margin = 1.0;
};

inline BlockAnalysis analyze(const Eigen::MatrixXcd& m) {
  BlockAnalysis out;
  if (m.rows() == 0) return out;
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  out.det = lu.determinant();
  double smallest = std::numeric_limits<double>::infinity();
  double largest = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double pivot = std::abs(lu.matrixLU()(i, i));
    smallest = std::min(smallest, pivot);
    largest = std::max(largest, pivot);
  }
  out.margin = largest > 0.0 ? smallest / largest : 0.0;
  return out;
}

inline Complex determinant(const Eigen::MatrixXcd& m) { return analyze(m).det; }

inline Eigen::VectorXcd solve(const Eigen::MatrixXcd& m,
                              const Eigen::VectorXcd& rhs) {
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(m).solve(rhs);
}

}  // namespace jbc::detail
