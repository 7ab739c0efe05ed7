#pragma once

#include "qlr/basis_family.hpp"
#include "qlr/interference.hpp"
#include "qlr/qlra.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qlr {

struct SweepOptions {
    std::size_t count = 10;
    std::uint64_t seed = 0;
    Field field = Field::hyperbolic;
    ParamRanges ranges;
    int max_attempts = 10000;
    RepresentOptions represent;
};

/// One instance of the basis family. Instance k uses seed + k.
struct SweepRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    BasisParams basis;
    StateParams state;
    ContextData data;
    InterferenceClass cls = InterferenceClass::trigonometric;
    /// represent() accepted the data.
    bool admissible = false;
    /// Error message when not admissible.
    std::string failure;
    /// Largest relative closed-form vs. direct deviation.
    double oracle_residual = 0.0;
    double gram_residual = 0.0;
    std::optional<double> unitarity_residual;
    /// |reconstructed p^b - direct Born p^b|, when admissible.
    std::optional<double> born_residual;
};

struct SweepResult {
    SweepOptions options;
    std::vector<SweepRecord> records;
    /// Draws consumed, including rejected ones.
    long long total_attempts = 0;

    double acceptance_rate() const;
    std::array<std::size_t, 3> class_counts() const;
    std::size_t admissible_count() const;
};

SweepResult run_sweep(const SweepOptions &options);

void write_sweep_csv(const SweepResult &result, std::ostream &os);
void write_sweep_json(const SweepResult &result, std::ostream &os);

} // namespace qlr
