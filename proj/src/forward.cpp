#include "jbc/forward.hpp"

#include <algorithm>

namespace jbc {

Eigen::MatrixXcd ControlMatrix::w() const {
  if (j_applied) return v;
  const int n = size();
  Eigen::MatrixXcd out(n, n);
  for (int j = 0; j < n; ++j) out.col(j) = v.col(n - 1 - j);
  return out;
}

std::vector<Complex> ControlMatrix::apply(const BoundaryControl& f) const {
  const int n = size();
  if (f.window() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "control has " + std::to_string(f.window()) +
                    " entries, control map expects " + std::to_string(n));
  }
  Eigen::VectorXcd x(n);
  for (int k = 0; k < n; ++k) x(k) = f.f[static_cast<std::size_t>(k)];
  Eigen::VectorXcd y = w() * x;
  return std::vector<Complex>(y.data(), y.data() + n);
}

WaveField simulate(const JacobiCoefficients& c, const BoundaryControl& f,
                   int horizon) {
  if (horizon < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "horizon must be positive, got " + std::to_string(horizon));
  }
  WaveField u;
  u.horizon = horizon;
  u.rows.resize(static_cast<std::size_t>(horizon) + 1);
  for (int n = 0; n <= horizon; ++n) {
    u.rows[static_cast<std::size_t>(n)].assign(
        static_cast<std::size_t>(horizon - n) + 1, Complex(0.0, 0.0));
  }
  for (int t = 0; t <= horizon; ++t) {
    u.rows[0][static_cast<std::size_t>(t)] =
        t < f.window() ? f.f[static_cast<std::size_t>(t)] : Complex(0.0, 0.0);
  }

  auto get = [&u](int n, int t) -> Complex {
    if (n > t) return Complex(0.0, 0.0);
    return u.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - n)];
  };

  for (int t = 1; t <= horizon; ++t) {
    for (int n = 1; n <= t; ++n) {
      Complex value = c.a_padded(n) * get(n + 1, t - 1) +
                      c.a_padded(n - 1) * get(n - 1, t - 1) +
                      c.b_padded(n) * get(n, t - 1);
      if (t >= 2) value -= get(n, t - 2);
      u.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - n)] =
          value;
    }
  }
  return u;
}

ResponseVector response_vector(const JacobiCoefficients& c, int window) {
  if (window < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "response window must be positive, got " +
                    std::to_string(window));
  }
  const int horizon = 2 * window - 1;
  WaveField u = simulate(c, BoundaryControl::delta(), horizon);
  ResponseVector out;
  out.r.resize(static_cast<std::size_t>(2 * window - 1));
  for (int t = 0; t <= 2 * window - 2; ++t) {
    out.r[static_cast<std::size_t>(t)] = u.at(1, t + 1);
  }
  return out;
}

std::vector<Complex> apply_response(const ResponseVector& r,
                                    const BoundaryControl& f) {
  const int horizon = f.window();
  if (r.window() < horizon) {
    throw Error(ErrorCode::WindowTooShort,
                "response window " + std::to_string(r.window()) +
                    " shorter than control length " + std::to_string(horizon));
  }
  std::vector<Complex> out(static_cast<std::size_t>(horizon),
                           Complex(0.0, 0.0));
  for (int t = 1; t <= horizon; ++t) {
    Complex acc(0.0, 0.0);
    for (int s = 0; s < t; ++s) {
      acc += r.r[static_cast<std::size_t>(t - 1 - s)] *
             f.f[static_cast<std::size_t>(s)];
    }
    out[static_cast<std::size_t>(t - 1)] = acc;
  }
  return out;
}

GoursatKernel goursat_kernel(const JacobiCoefficients& c, int horizon) {
  validate_coefficients(c);
  if (horizon < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "kernel horizon must be positive, got " +
                    std::to_string(horizon));
  }
  GoursatKernel w;
  w.horizon = horizon;
  const int top = horizon - 1;  // largest stored index
  w.rows.resize(top > 0 ? static_cast<std::size_t>(top) : 0);
  for (int n = 1; n <= top; ++n) {
    w.rows[static_cast<std::size_t>(n - 1)].assign(
        static_cast<std::size_t>(top - n) + 1, Complex(0.0, 0.0));
  }
  if (top < 1) return w;

  // coupling products prod_{k<n} a_k for n = 0..top
  std::vector<Complex> prod(static_cast<std::size_t>(top) + 1);
  prod[0] = Complex(1.0, 0.0);
  for (int n = 1; n <= top; ++n) {
    prod[static_cast<std::size_t>(n)] =
        prod[static_cast<std::size_t>(n - 1)] * c.a_padded(n - 1);
  }

  auto set = [&w](int n, int s, Complex value) {
    w.rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(s - n)] =
        value;
  };

  // diagonal first
  Complex diag_prev(0.0, 0.0);  // w_{0,0}
  for (int n = 1; n <= top; ++n) {
    Complex diag = c.b_padded(n) * prod[static_cast<std::size_t>(n)] +
                   c.a_padded(n - 1) * diag_prev;
    set(n, n, diag);
    diag_prev = diag;
  }

  // column sweep: w_{n,s+1} from column s
  for (int s = 1; s <= top - 1; ++s) {
    for (int n = 1; n <= s; ++n) {
      Complex an = c.a_padded(n);
      Complex value = an * w.at(n + 1, s) + c.a_padded(n - 1) * w.at(n - 1, s) +
                      c.b_padded(n) * w.at(n, s) - w.at(n, s - 1);
      if (s == n) {
        value -= (Complex(1.0, 0.0) - an * an) * prod[static_cast<std::size_t>(n)];
      }
      set(n, s + 1, value);
    }
  }
  return w;
}

ControlMatrix control_matrix(const JacobiCoefficients& c, int size) {
  validate_coefficients(c);
  if (size < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "control map size must be positive, got " +
                    std::to_string(size));
  }
  GoursatKernel kernel = goursat_kernel(c, size);
  ControlMatrix out;
  out.v = Eigen::MatrixXcd::Zero(size, size);
  Complex prod(1.0, 0.0);
  for (int i = 0; i < size; ++i) {
    prod *= c.a_padded(i);
    out.v(i, i) = prod;
    for (int j = i + 1; j < size; ++j) {
      out.v(i, j) = kernel.at(i + 1, j);
    }
  }
  return out;
}

BoundaryControl control_solve(const JacobiCoefficients& c,
                              const std::vector<Complex>& target) {
  validate_coefficients(c);
  const int size = static_cast<int>(target.size());
  if (size < 1) {
    throw Error(ErrorCode::InvalidHorizon, "empty snapshot target");
  }
  ControlMatrix m = control_matrix(c, size);
  Eigen::VectorXcd y(size);
  for (int k = 0; k < size; ++k) y(k) = target[static_cast<std::size_t>(k)];
  Eigen::VectorXcd g = m.v.triangularView<Eigen::Upper>().solve(y);
  BoundaryControl f;
  f.f.resize(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) {
    f.f[static_cast<std::size_t>(k)] = g(size - 1 - k);
  }
  return f;
}

JacobiCoefficients conjugate_system(const JacobiCoefficients& c) {
  JacobiCoefficients out = c;
  for (Complex& z : out.a) z = std::conj(z);
  for (Complex& z : out.b) z = std::conj(z);
  return out;
}

}  // namespace jbc
