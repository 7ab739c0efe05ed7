#pragma once

#include "qlr/basis_family.hpp"
#include "qlr/qlra.hpp"
#include "qlr/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace qlr::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kValidationFailed = 2,
    kInfeasible = 3,
    kExampleMismatch = 4,
    kOracleFailure = 5,
};

enum class Format { table, machine };

struct Streams {
    std::ostream &out;
    std::ostream &err;
};

int cmd_validate(const std::filesystem::path &path, double tol, Format format, Streams io);

int cmd_represent(const std::filesystem::path &path, const RepresentOptions &options, Format format, Streams io);

int cmd_classify(const std::filesystem::path &path, double tol, Format format, Streams io);

/// Writes the example's ContextData to out_file unless it is empty.
int cmd_paper_example(const std::filesystem::path &out_file, Format format, Streams io);

struct OracleTolerances {
    double relative = 1e-9;
    double gram = 1e-10;
    double unitarity = kDefaultUnitaryTol;
    double born = 1e-8;
    double amplitude = 1e-8;
};

struct OracleFailure {
    std::size_t index;
    std::uint64_t seed;
    BasisParams basis;
    StateParams state;
    std::string reason;
};

struct OracleSummary {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    Field field = Field::hyperbolic;
    double max_priors = 0.0;
    double max_singles = 0.0;
    double max_pairs = 0.0;
    double max_gram = 0.0;
    double max_orthogonality = 0.0;
    double max_unitarity = 0.0;
    double max_born = 0.0;
    double max_amplitude = 0.0;
    long long total_attempts = 0;
    std::optional<OracleFailure> first_failure;

    bool passed() const { return !first_failure; }
};

/// Closed-form vs. direct probabilities plus a QLRA round trip per instance.
/// Instance k uses seed + k.
OracleSummary oracle_check(std::size_t trials, std::uint64_t seed, Field field, const ParamRanges &ranges = {},
                           const OracleTolerances &tol = {});

int cmd_oracle_check(std::size_t trials, std::uint64_t seed, Field field, Format format, Streams io);

enum class SweepFileFormat { csv, json };

/// Writes the records to out_file (stdout when empty) and a summary to io.
int cmd_sweep(const SweepOptions &options, const std::filesystem::path &out_file, SweepFileFormat file_format,
              Format format, Streams io);

/// Parses argv and dispatches.
int run(int argc, const char *const *argv, Streams io);

} // namespace qlr::cli
