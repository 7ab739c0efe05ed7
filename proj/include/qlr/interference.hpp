#pragma once

#include "qlr/context_data.hpp"

#include <string_view>
#include <vector>

namespace qlr {

enum class InterferenceClass { trigonometric, hyperbolic, hyper_trigonometric };

std::string_view to_string(InterferenceClass c);

/// Entries whose |lambda| lies within this distance of 1 are flagged.
constexpr double kBorderlineBand = 1e-6;

struct BorderlineEntry {
    int row;
    int pair;
    double lambda;
};

/// The nine coefficients of interference lambda_{l,ij}.
struct InterferenceTable {
    /// lambda[l][pair_index(i, j)]
    Matrix3 lambda{};
    InterferenceClass cls = InterferenceClass::trigonometric;
    /// Diagnostic only; classification itself uses exact comparisons.
    std::vector<BorderlineEntry> borderline;

    double at(int l, int i, int j) const { return lambda[l][pair_index(i, j)]; }
};

/// lambda_{l,ij}: normalized deviation of the pair conditional from the
/// classical mixture (p_i s_li + p_j s_lj) / (p_i + p_j). Symmetric in (i, j).
/// Throws DegenerateDenominator when p_i s_li p_j s_lj <= 0.
double coefficient(const ContextData &data, int l, int i, int j);

/// Classification: trigonometric iff every |lambda| <= 1, hyperbolic iff every
/// |lambda| > 1, hyper-trigonometric otherwise.
InterferenceClass classify(const Matrix3 &lambda);

InterferenceTable interference_table(const ContextData &data);

/// sum_i p_i s_li
double classical_ftp(const ContextData &data, int l);

/// Total probability with interference terms:
/// classical_ftp + sum_{i<j} 2 lambda_{l,ij} sqrt(p_i p_j s_li s_lj).
double ftp_interference(const ContextData &data, const InterferenceTable &table, int l);

} // namespace qlr
