#pragma once

#include "qlr/context_data.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qlr {

/// Free parameters of the two-free-phase a-basis family.
///
/// Column i of the a-basis in b-coordinates is
///   (e^{u}, eps_2i a_2i e^{s}, eps_3i a_3i e^{t}) / sqrt(1 + a_2i^2 + a_3i^2)
/// with the first row fixed to magnitude 1, sign +1. a23, a32, a33 and their
/// signs are free; a21, a31, a22 follow from orthogonality.
struct BasisParams {
    Field field = Field::hyperbolic;
    double a23 = 1.0;
    double a32 = 1.0;
    double a33 = 1.0;
    int eps23 = 1;
    int eps32 = 1;
    int eps33 = 1;
    double u = 0.0;
    double s = 0.0;
    double t = 0.0;

    /// From the signed products eps23*a23, eps32*a32, eps33*a33 (all nonzero).
    static BasisParams from_signed(double a23s, double a32s, double a33s, double u, double s, double t,
                                   Field field = Field::hyperbolic);
};

/// psi = (v1 e^{g1}, v2 e^{g2}, v3 e^{g3}) / sqrt(v1^2 + v2^2 + v3^2)
struct StateParams {
    std::array<double, 3> v{1.0, 0.0, 0.0};
    std::array<double, 3> gamma{0.0, 0.0, 0.0};
};

/// Abbreviations used by the closed-form probabilities.
struct Shorthands {
    double d1, d2, d3, d4, d5, d6, d7, d8, d9, d10, d11, d12, d13;
    double gamma_s12;
    double gamma_t13;
};

Shorthands shorthands(const BasisParams &p, const StateParams &sp);

/// Signed products eps*a for the three entries fixed by orthogonality.
struct CompletedBasis {
    double a21s;
    double a31s;
    double a22s;
};

constexpr double kDenominatorFloor = 1e-12;

/// Solves 1 + A_2i A_2k + A_3i A_3k = 0 (i != k) for A21, A31, A22.
/// Throws DegenerateDenominator when a denominator is within 1e-12 of zero.
CompletedBasis complete_orthogonal(const BasisParams &p);

/// The signed 3x3 magnitude pattern [[1,1,1],[A21,A22,A23],[A31,A32,A33]].
Matrix3 signed_pattern(const BasisParams &p, const CompletedBasis &c);

/// Numerators 1 + A_2i A_2k + A_3i A_3k for (i,k) = (1,2), (1,3), (2,3).
std::array<double, 3> orthogonality_numerators(const BasisParams &p, const CompletedBasis &c);

/// Normalized a-basis columns in the canonical b-basis.
Mat3 build_basis(const BasisParams &p);

/// Throws ZeroState when v is the zero vector.
Vec3 build_state(const StateParams &sp, Field field);

QuantumSide quantum_side(const BasisParams &p, const StateParams &sp);

/// Closed forms. The phase coupling is cosh in the hyperbolic field and cos
/// in the complex field. All throw DegenerateDenominator on vanishing
/// denominators.
Probabilities3 closed_form_priors(const BasisParams &p, const StateParams &sp);
Matrix3 closed_form_singles(const BasisParams &p);
/// Indexed [l][pair_index(k, j)].
Matrix3 closed_form_pairs(const BasisParams &p, const StateParams &sp);

/// The pair conditionals in their original typeset form,
/// including the two entries that disagree with the inner-product route
/// (beta_1 alpha_13 squares d9; beta_3 alpha_12 repeats beta_3 alpha_13).
Matrix3 typeset_pairs(const BasisParams &p, const StateParams &sp);

struct TypesetEntryAudit {
    int row;
    int pair;
    double printed;
    double closed_form;
    double oracle;
    bool printed_matches;
    /// When the printed value misses, the oracle entry (row, pair) it equals, if any.
    std::optional<std::pair<int, int>> printed_equals;
};

/// Compares the typeset pair expressions with the direct inner products.
std::vector<TypesetEntryAudit> audit_typeset_pairs(const BasisParams &p, const StateParams &sp,
                                               double rel_tol = 1e-9);

/// Largest relative deviation of each closed-form group from the direct route.
struct OracleResidual {
    double priors = 0.0;
    double singles = 0.0;
    double pairs = 0.0;
    /// Gram deviation of build_basis under the field's conjugate.
    double gram = 0.0;
    /// Largest orthogonality numerator magnitude.
    double orthogonality = 0.0;

    double max_probability() const { return std::max({priors, singles, pairs}); }
};

OracleResidual oracle_residual(const BasisParams &p, const StateParams &sp);

// -- The reference numeric instance --------------------------------------------

inline constexpr Probabilities3 kReferencePriors{0.045837, 0.937356, 0.016807};
/// [l][pair]: reference p_{beta_l alpha_{kj}}.
inline constexpr Matrix3 kReferencePairs{{
    {0.206349, 0.887593, 0.075727},
    {0.650559, 0.111601, 0.580032},
    {0.143091, 0.000805, 0.344240},
}};
inline constexpr double kReferenceTolerance = 1e-6;

/// eps23 a23 = 2, eps32 a32 = 2, eps33 a33 = 3, s = t, u = 0.3.
BasisParams example_basis(double t = 0.0);
/// v = (-2, 3, -2), gamma = (0, t, t).
StateParams example_state(double t = 0.0);

struct ExampleComparison {
    std::string name;
    double reference;
    double direct;
    double closed_form;
    double abs_diff;
    bool passed;
};

struct ExampleReport {
    BasisParams basis;
    StateParams state;
    QuantumSide quantum;
    ContextData data;
    std::vector<ExampleComparison> rows;

    bool passed() const;
    double max_abs_diff() const;
};

/// Builds the reference instance and compares its 12 probabilities with the
/// reference values at 1e-6 absolute (both the direct and the closed-form route).
ExampleReport reproduce_example(double t = 0.0);

// -- Random instances -----------------------------------------------------------

struct ParamRanges {
    double magnitude_min = 0.2;
    double magnitude_max = 5.0;
    double phase_min = -1.5;
    double phase_max = 1.5;
    /// |v_k| is drawn from [v_abs_min, v_abs_max] with a random sign.
    double v_abs_min = 0.1;
    double v_abs_max = 5.0;

    /// Throws std::invalid_argument for empty or non-positive magnitude ranges.
    void check() const;
};

struct RandomInstance {
    BasisParams basis;
    StateParams state;
    ContextData data;
    std::uint64_t seed = 0;
    int attempts = 0;
};

/// Deterministic draw for a seed. Rejects draws whose basis cannot be completed
/// or whose probabilities are not inside (tol, 1 - tol); throws
/// ExhaustedRejection after max_attempts draws.
RandomInstance random_instance(std::uint64_t seed, const ParamRanges &ranges, Field field,
                               int max_attempts = 10000, double tol = kDefaultValidationTol);

} // namespace qlr
