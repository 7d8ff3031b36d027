#include "jbc/inverse_factorization.hpp"

#include "jbc/detail/linalg.hpp"

namespace jbc {

MinorLadder minor_ladder(const ConnectingMatrix& rotated) {
  if (rotated.orientation != Orientation::Rotated) {
    throw std::invalid_argument(
        "minor ladder requires the rotated connecting matrix");
  }
  const int size = rotated.size();
  MinorLadder out;
  out.det.resize(static_cast<std::size_t>(size) + 1);
  out.det_mod.resize(static_cast<std::size_t>(size));
  out.det[0] = Complex(1.0, 0.0);
  out.det_mod[0] = Complex(0.0, 0.0);
  for (int k = 1; k <= size; ++k) {
    out.det[static_cast<std::size_t>(k)] =
        detail::determinant(rotated.entries.topLeftCorner(k, k));
  }
  for (int k = 1; k < size; ++k) {
    // k x k leading block with its last column swapped for column k + 1
    Eigen::MatrixXcd block = rotated.entries.topLeftCorner(k, k);
    block.col(k - 1) = rotated.entries.col(k).head(k);
    out.det_mod[static_cast<std::size_t>(k)] = detail::determinant(block);
  }
  return out;
}

ReconstructionResult reconstruct_factorization(const ResponseVector& r,
                                               int depth,
                                               const ToleranceConfig& tol) {
  if (depth < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "depth must be positive, got " + std::to_string(depth));
  }
  if (r.window() < depth) {
    throw Error(ErrorCode::WindowTooShort,
                "response window " + std::to_string(r.window()) +
                    " shorter than requested depth " + std::to_string(depth));
  }
  ConnectingMatrix c = rotate(connecting_from_response(r, depth));
  MinorLadder ladder = minor_ladder(c);

  ReconstructionResult out;
  out.method = Method::Factorization;
  out.a0 = r.r[0];
  out.step_margins.reserve(static_cast<std::size_t>(depth));
  for (int k = 1; k <= depth; ++k) {
    const double margin =
        detail::analyze(c.entries.topLeftCorner(k, k)).margin;
    out.step_margins.push_back(margin);
    if (margin <= tol.singular_threshold) {
      throw Error(ErrorCode::SingularMinor,
                  "leading block " + std::to_string(k) +
                      " of the connecting matrix is singular",
                  k);
    }
  }

  out.a_sq.reserve(static_cast<std::size_t>(depth) - 1);
  out.b.reserve(static_cast<std::size_t>(depth) - 1);
  for (int k = 1; k <= depth - 1; ++k) {
    const Complex dkm1 = ladder.det[static_cast<std::size_t>(k - 1)];
    const Complex dk = ladder.det[static_cast<std::size_t>(k)];
    const Complex dkp1 = ladder.det[static_cast<std::size_t>(k + 1)];
    out.a_sq.push_back(dkp1 * dkm1 / (dk * dk));
    const Complex mk = ladder.det_mod[static_cast<std::size_t>(k)];
    const Complex mkm1 = ladder.det_mod[static_cast<std::size_t>(k - 1)];
    out.b.push_back(mk / dk - mkm1 / dkm1);
  }
  return out;
}

}  // namespace jbc
