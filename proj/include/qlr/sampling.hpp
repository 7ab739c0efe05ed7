#pragma once

#include "qlr/context_data.hpp"

#include <cstdint>
#include <random>

namespace qlr {

/// Haar-like 3x3 complex unitary: Gram-Schmidt on i.i.d. complex Gaussian columns.
Mat3 random_unitary(std::mt19937_64 &rng);

/// Normalized complex Gaussian vector.
Vec3 random_state(std::mt19937_64 &rng);

struct QuantumInstance {
    QuantumSide quantum;
    ContextData data;
    std::uint64_t seed = 0;
    int attempts = 0;
};

/// Complex-field basis and state drawn from a seed, with the same rejection
/// rule as random_instance. Throws ExhaustedRejection after max_attempts.
QuantumInstance random_complex_instance(std::uint64_t seed, int max_attempts = 1000,
                                        double tol = kDefaultValidationTol);

} // namespace qlr
