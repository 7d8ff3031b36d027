#pragma once

#include <cstdint>

#include "jbc/core.hpp"

namespace jbc {

/// Coupling-magnitude profiles for generated instances. Wide draws
/// |a_k| from [0.5, 2], unit-modulus from [0.9, 1.1]; both draw |b_k| from
/// [0, 1]. Phases are uniform.
enum class Profile { UnitModulus, Wide };

/// Deterministic pseudo-random instance. The same (depth, seed, profile)
/// triple yields bit-identical coefficients on every platform: uniform
/// doubles are derived from raw 53-bit draws of a 64-bit Mersenne engine,
/// never from distribution adapters.
JacobiCoefficients random_coefficients(int depth, std::uint64_t seed,
                                       Profile profile = Profile::Wide);

}  // namespace jbc
