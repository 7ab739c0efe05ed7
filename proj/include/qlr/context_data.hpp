#pragma once

#include "qlr/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qlr {

/// Outcome indices are 0-based throughout the API (alpha_1 is index 0).
using Probabilities3 = std::array<double, 3>;
using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Unordered pair of distinct a-outcomes, stored as a column index:
/// 0 -> {1,2}, 1 -> {1,3}, 2 -> {2,3}.
struct PairKey {
    int first;
    int second;
};

constexpr std::array<PairKey, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

/// Column index of the unordered pair {i, j}; throws for i == j or out of range.
int pair_index(int i, int j);
/// "12", "13" or "23".
std::string pair_label(int pair);

/// Statistical data for two trichotomous observables a and b.
struct ContextData {
    /// p^a_{alpha_i}
    Probabilities3 priors{};
    /// p^{b|a}_{beta_l alpha_i}, indexed [l][i].
    Matrix3 singles{};
    /// p^{b|a}_{beta_l alpha_{kj}}, indexed [l][pair_index(k, j)].
    Matrix3 pairs{};
    /// p^b_{beta_l}, when known independently.
    std::optional<Probabilities3> b_priors;

    double pair(int l, int i, int j) const { return pairs[l][pair_index(i, j)]; }

    friend bool operator==(const ContextData &, const ContextData &) = default;
};

constexpr double kDefaultValidationTol = 1e-9;

struct ValidationCheck {
    std::string id;
    /// Distance to the boundary for range checks, |sum - 1| for sum checks.
    double residual;
    double tolerance;
    bool passed;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool passed() const;
    std::vector<ValidationCheck> failures() const;
};

/// Checks every constraint on ContextData. Failures are reported, not thrown.
///
/// Ranges are open with margin: a probability passes iff tol < p < 1 - tol.
/// Sums pass iff |sum - 1| <= tol. Singles must be doubly stochastic.
ValidationReport validate(const ContextData &data, double tol = kDefaultValidationTol);

/// Explicit quantum model: a-basis columns in the canonical b-basis plus a state.
struct QuantumSide {
    Field field = Field::complex;
    /// basis[l][i] = coordinate l of e^a_{alpha_i}.
    Mat3 basis = identity_matrix(Field::complex);
    Vec3 state = zero_vector(Field::complex);
};

/// Throws InvalidQuantumSide unless the basis is orthonormal and the state normalized.
void check_quantum_side(const QuantumSide &q, double tol = 1e-10);

/// Born-rule probabilities of a QuantumSide.
///
/// The hyperbolic field uses the hyperbolic conjugate in every |.|^2. Throws
/// NonProbability when a prior or single is not inside (tol, 1 - tol) (checked
/// before pairs), DegenerateDenominator when a pair denominator is <= tol, and
/// NonProbability for pairs or b-priors outside the range.
ContextData from_quantum(const QuantumSide &q, double tol = kDefaultValidationTol);

} // namespace qlr
