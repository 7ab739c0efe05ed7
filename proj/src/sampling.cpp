#include "qlr/sampling.hpp"

#include "qlr/errors.hpp"

#include <cmath>

namespace qlr {

namespace {

Scalar gaussian(std::mt19937_64 &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return ComplexNumber(re, im);
}

void normalize(Vec3 &v) {
    const double n = std::sqrt(sq_norm(v));
    for (auto &x : v) {
        x *= 1.0 / n;
    }
}

} // namespace

Mat3 random_unitary(std::mt19937_64 &rng) {
    std::array<Vec3, 3> cols{};
    for (int i = 0; i < 3; ++i) {
        for (int l = 0; l < 3; ++l) {
            cols[i][l] = gaussian(rng);
        }
        for (int k = 0; k < i; ++k) {
            const Scalar proj = inner(cols[k], cols[i]);
            for (int l = 0; l < 3; ++l) {
                cols[i][l] -= proj * cols[k][l];
            }
        }
        normalize(cols[i]);
    }
    Mat3 u = zero_matrix(Field::complex);
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            u[l][i] = cols[i][l];
        }
    }
    return u;
}

Vec3 random_state(std::mt19937_64 &rng) {
    Vec3 v{gaussian(rng), gaussian(rng), gaussian(rng)};
    normalize(v);
    return v;
}

QuantumInstance random_complex_instance(std::uint64_t seed, int max_attempts, double tol) {
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        QuantumSide q{Field::complex, random_unitary(rng), random_state(rng)};
        try {
            ContextData data = from_quantum(q, tol);
            if (validate(data, tol).passed()) {
                return {q, std::move(data), seed, attempt};
            }
        } catch (const Error &) {
        }
    }
    throw ExhaustedRejection("random_complex_instance: no admissible draw for seed " + std::to_string(seed),
                             max_attempts);
}

} // namespace qlr
