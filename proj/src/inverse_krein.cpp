#include "jbc/inverse_krein.hpp"

#include <cmath>

#include "jbc/detail/linalg.hpp"

namespace jbc {

namespace {

void check_window(const ResponseVector& r, int window) {
  if (window < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "window must be positive, got " + std::to_string(window));
  }
  if (r.window() < window) {
    throw Error(ErrorCode::WindowTooShort,
                "response window " + std::to_string(r.window()) +
                    " shorter than requested window " + std::to_string(window));
  }
}

void check_seed(const KreinParameters& p) {
  if (p.alpha == Complex(0.0, 0.0) && p.beta == Complex(0.0, 0.0)) {
    throw std::invalid_argument("trajectory seeds (alpha, beta) = (0, 0)");
  }
}

// Shared solve path; reports the pivot margin of C^window when asked.
BoundaryControl krein_solve(const ResponseVector& r, const KreinParameters& p,
                            int window, const ToleranceConfig& tol,
                            double* margin_out) {
  ConnectingMatrix c = connecting_from_response(r, window);
  const double margin = detail::analyze(c.entries).margin;
  if (margin_out != nullptr) *margin_out = margin;
  if (margin <= tol.singular_threshold) {
    throw Error(ErrorCode::SingularConnecting,
                "connecting matrix singular at window " +
                    std::to_string(window),
                window);
  }
  std::vector<Complex> rhs = krein_rhs(r, p, window);
  Eigen::VectorXcd rhs_v(window);
  for (int k = 0; k < window; ++k) rhs_v(k) = rhs[static_cast<std::size_t>(k)];
  Eigen::VectorXcd f = detail::solve(c.entries, rhs_v);
  BoundaryControl out;
  out.f.assign(f.data(), f.data() + window);
  return out;
}

}  // namespace

KreinWeights krein_weights(int window) {
  if (window < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "window must be positive, got " + std::to_string(window));
  }
  KreinWeights out;
  out.values.assign(static_cast<std::size_t>(window), 0.0);
  double sign = 1.0;
  for (int t = window - 1; t >= 0; t -= 2) {
    out.values[static_cast<std::size_t>(t)] = sign;
    sign = -sign;
  }
  return out;
}

std::vector<Complex> krein_rhs(const ResponseVector& r,
                               const KreinParameters& p, int window) {
  check_window(r, window);
  check_seed(p);
  const Complex a0 = r.r[0];
  const KreinWeights kappa = krein_weights(window);
  std::vector<Complex> rhs(static_cast<std::size_t>(window));
  for (int s = 0; s < window; ++s) {
    Complex transposed(0.0, 0.0);
    for (int t = s + 1; t < window; ++t) {
      transposed += r.r[static_cast<std::size_t>(t - 1 - s)] *
                    kappa.values[static_cast<std::size_t>(t)];
    }
    rhs[static_cast<std::size_t>(s)] =
        a0 * (p.beta * kappa.values[static_cast<std::size_t>(s)] -
              p.alpha * transposed);
  }
  return rhs;
}

BoundaryControl krein_control(const ResponseVector& r,
                              const KreinParameters& p, int window,
                              const ToleranceConfig& tol) {
  check_window(r, window);
  check_seed(p);
  return krein_solve(r, p, window, tol, nullptr);
}

ReconstructionResult reconstruct_krein(const ResponseVector& r, int depth,
                                       const KreinParameters& p,
                                       const ToleranceConfig& tol) {
  check_window(r, depth);
  check_seed(p);
  const Complex a0 = r.r[0];

  ReconstructionResult out;
  out.method = Method::Krein;
  out.a0 = a0;
  out.a_sq.reserve(static_cast<std::size_t>(depth) - 1);
  out.b.reserve(static_cast<std::size_t>(depth) - 1);
  out.step_margins.reserve(static_cast<std::size_t>(depth) - 1);

  // scaled trajectory: y~_n = f^n_0; the two seeds need no solve
  Complex prev2 = p.alpha;
  Complex prev1 = p.beta / a0;
  Complex b_partial_sum(0.0, 0.0);

  for (int n = 2; n <= depth; ++n) {
    double margin = 0.0;
    BoundaryControl f = krein_solve(r, p, n, tol, &margin);
    out.step_margins.push_back(margin);

    const Complex f0 = f.f[0];
    const Complex f1 = f.f[1];
    double scale = 0.0;
    for (const Complex& z : f.f) scale = std::max(scale, std::abs(z));
    if (std::abs(f0) <= tol.singular_threshold * scale) {
      throw Error(ErrorCode::DegenerateTrajectory,
                  "trajectory value f^n_0 vanishes at step " +
                      std::to_string(n),
                  n);
    }

    const Complex b_new = (prev1 - f1) / f0 - b_partial_sum;
    const Complex a_sq_new = -(prev2 + b_new * prev1) / f0;
    out.b.push_back(b_new);
    out.a_sq.push_back(a_sq_new);
    b_partial_sum += b_new;
    prev2 = prev1;
    prev1 = f0;
  }
  return out;
}

ReconstructionResult reconstruct_krein(const ResponseVector& r, int depth,
                                       const ToleranceConfig& tol) {
  const KreinParameters seeds[] = {
      {Complex(0.0, 0.0), Complex(1.0, 0.0)},
      {Complex(1.0, 0.0), Complex(0.0, 0.0)},
      {Complex(1.0, 0.0), Complex(1.0, 0.0)},
  };
  for (std::size_t i = 0; i < std::size(seeds); ++i) {
    try {
      return reconstruct_krein(r, depth, seeds[i], tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateTrajectory ||
          i + 1 == std::size(seeds)) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::DegenerateTrajectory, "unreachable");
}

}  // namespace jbc
