#include "jbc/instance.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace jbc {

namespace {

class PortableUniform {
 public:
  explicit PortableUniform(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1), 53-bit resolution
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  Complex polar_draw(double modulus_lo, double modulus_hi) {
    const double modulus = range(modulus_lo, modulus_hi);
    const double phase = range(0.0, 2.0 * std::numbers::pi);
    return std::polar(modulus, phase);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

JacobiCoefficients random_coefficients(int depth, std::uint64_t seed,
                                       Profile profile) {
  if (depth < 1) {
    throw Error(ErrorCode::InvalidHorizon,
                "instance depth must be positive, got " +
                    std::to_string(depth));
  }
  PortableUniform rng(seed);
  const double lo = profile == Profile::Wide ? 0.5 : 0.9;
  const double hi = profile == Profile::Wide ? 2.0 : 1.1;

  JacobiCoefficients c;
  c.depth = depth;
  c.a.reserve(static_cast<std::size_t>(depth));
  c.b.reserve(static_cast<std::size_t>(depth) - 1);
  for (int k = 0; k < depth; ++k) c.a.push_back(rng.polar_draw(lo, hi));
  for (int k = 1; k < depth; ++k) c.b.push_back(rng.polar_draw(0.0, 1.0));
  return c;
}

}  // namespace jbc
