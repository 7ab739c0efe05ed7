#pragma once

#include "qlr/context_data.hpp"
#include "qlr/interference.hpp"
#include "qlr/phase.hpp"

#include <optional>
#include <vector>

namespace qlr {

constexpr double kDefaultPhaseTol = 1e-8;
constexpr double kDefaultUnitaryTol = 1e-8;
/// acos/acosh arguments this close outside their domain are clamped; farther is an error.
constexpr double kDomainClamp = 1e-12;

/// One solution of a row's phase system in the gauge phi_1 = 0, sign_1 = +1.
struct RowPhases {
    double phi2 = 0.0;
    double phi3 = 0.0;
    int sign2 = 1;
    int sign3 = 1;

    friend bool operator==(const RowPhases &, const RowPhases &) = default;
};

/// All phase assignments reproducing (lambda12, lambda13, lambda23) for one row.
///
/// phi2 = +-acos(lambda12) (trig) or +-acosh|lambda12| with sign2 = sign(lambda12)
/// (hyper), likewise phi3; a combination is kept when it reproduces lambda23
/// within tol_phase. Candidates come in sign order (+,+), (+,-), (-,+), (-,-)
/// with exact duplicates removed. Throws InfeasibleRow when none survive and
/// KindMismatch when a coefficient is outside the kind's domain.
std::vector<RowPhases> solve_row_phases(double lambda12, double lambda13, double lambda23, PhaseKind kind,
                                        double tol_phase = kDefaultPhaseTol, int row = -1);

struct PhaseSolution {
    PhaseKind kind = PhaseKind::trig;
    /// phi[l][i]; column 0 is the gauge and always 0.
    Matrix3 phi{};
    /// Hyperbolic sign factors; all +1 for trig; column 0 always +1.
    std::array<std::array<int, 3>, 3> sign{{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}};

    PhaseFactor factor(int l, int i) const;
    void set_row(int l, const RowPhases &r);
};

/// max |phase_pair_real(factor(l,i), factor(l,j)) - lambda_{l,ij}|
double phase_residual(const PhaseSolution &phases, const InterferenceTable &table);

struct AmplitudeTable {
    /// sub[l][i] = psi_{beta_l alpha_i} = sqrt(p_i s_li) * lambda(l, i)
    Mat3 sub;
    /// b[l] = psi_{beta_l} = sum_i sub[l][i]
    Vec3 b;
};

AmplitudeTable build_amplitudes(const ContextData &data, const PhaseSolution &phases);

/// Coordinates of the state in the canonical b-basis: component l is psi_{beta_l}.
Vec3 reconstruct_state(const AmplitudeTable &amplitudes);

/// Distance between solved amplitudes and those of an explicit model.
///
/// The data fix amplitudes only up to rephasing each b-row and each a-column,
/// so this compares |psi_l|^2 and the within-row products
/// psi_{l,i} conj(psi_{l,j}), allowing a single global conjugation.
double amplitude_residual(const AmplitudeTable &amplitudes, const QuantumSide &reference);

/// U[l][i] = sqrt(s_li) * lambda(l, i).
///
/// When built from phases, the magnitude/phase split is kept so the
/// orthogonality sums can be evaluated independently of the entries.
struct TransitionMatrix {
    Field field = Field::complex;
    Mat3 entries = identity_matrix(Field::complex);
    std::optional<Matrix3> magnitude;
    std::optional<std::array<std::array<PhaseFactor, 3>, 3>> phase;

    static TransitionMatrix from_entries(const Mat3 &entries);
};

TransitionMatrix build_transition_matrix(const ContextData &data, const PhaseSolution &phases);

/// Largest deviation of U*U from I (hyperbolic conjugate in the hyperbolic
/// field). When U carries its phases, also the column-orthogonality sums
/// sum_m sqrt(s_mi s_mk) lambda_mi conj(lambda_mk) (i != k) and the column norm
/// sums; returns the larger of the two.
double unitarity_residual(const TransitionMatrix &u);

struct RepresentOptions {
    double tol_validate = kDefaultValidationTol;
    double tol_phase = kDefaultPhaseTol;
    double tol_unitary = kDefaultUnitaryTol;
    /// Forces every row into this field; by default each row's coefficient
    /// magnitudes decide (|lambda| <= 1 -> complex, > 1 -> hyperbolic).
    std::optional<Field> field;
};

struct RepresentDiagnostics {
    double unitarity_residual = 0.0;
    double phase_residual = 0.0;
    /// max |(|psi_lk + psi_lj|^2 / (p_k + p_j)) - pairs[l][kj]|
    double pair_law_residual = 0.0;
    /// max |reconstructed_b[l] - ftp_interference(l)|
    double born_residual = 0.0;
    /// max |reconstructed_b[l] - b_priors[l]| when b_priors are given.
    std::optional<double> b_prior_residual;
    /// max | |sub[l][i]|^2 - p_i s_li |
    double magnitude_residual = 0.0;
    std::array<int, 3> candidates_per_row{};
    int combinations_tried = 0;
    int combinations_passing = 0;
    std::array<int, 3> chosen{};
};

struct Representation {
    Field field = Field::complex;
    InterferenceTable table;
    PhaseSolution phases;
    AmplitudeTable amplitudes;
    TransitionMatrix transition;
    Probabilities3 reconstructed_b{};
    RepresentDiagnostics diagnostics;
};

/// Inverse Born-rule solver.
///
/// Validates the data, solves each row's phases, then searches the product of
/// row candidates (lexicographic order) for the combination with the smallest
/// unitarity residual not exceeding tol_unitary; ties keep the earliest.
///
/// Throws ValidationFailed, NoMixedRow, InfeasibleRow or NoUnitaryCombination.
Representation represent(const ContextData &data, const RepresentOptions &options = {});

} // namespace qlr
