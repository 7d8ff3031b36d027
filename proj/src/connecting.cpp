#include "jbc/connecting.hpp"

#include <cstdlib>

namespace jbc {

ConnectingMatrix connecting_from_response(const ResponseVector& r, int size) {
  if (size < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "connecting matrix size must be positive, got " +
                    std::to_string(size));
  }
  if (r.window() < size) {
    throw Error(ErrorCode::WindowTooShort,
                "response window " + std::to_string(r.window()) +
                    " too short for connecting matrix of size " +
                    std::to_string(size));
  }
  const Complex a0 = r.r[0];
  ConnectingMatrix out;
  out.orientation = Orientation::Unrotated;
  out.entries.resize(size, size);
  for (int i = 1; i <= size; ++i) {
    for (int j = i; j <= size; ++j) {
      Complex sum(0.0, 0.0);
      for (int k = 0; k <= size - j; ++k) {  // j = max(i, j) here
        sum += r.r[static_cast<std::size_t>(j - i + 2 * k)];
      }
      out.entries(i - 1, j - 1) = a0 * sum;
      out.entries(j - 1, i - 1) = out.entries(i - 1, j - 1);
    }
  }
  return out;
}

ConnectingMatrix rotate(const ConnectingMatrix& c) {
  const int size = c.size();
  ConnectingMatrix out;
  out.orientation = c.orientation == Orientation::Unrotated
                        ? Orientation::Rotated
                        : Orientation::Unrotated;
  out.entries.resize(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      out.entries(i, j) = c.entries(size - 1 - j, size - 1 - i);
    }
  }
  return out;
}

ConnectingMatrix connecting_oracle(const JacobiCoefficients& c, int size) {
  Eigen::MatrixXcd w = control_matrix(c, size).w();
  ConnectingMatrix out;
  out.orientation = Orientation::Unrotated;
  out.entries = w.transpose() * w;
  return out;
}

}  // namespace jbc
