#include "qlr/cli.hpp"

#include "qlr/context_io.hpp"
#include "qlr/errors.hpp"
#include "qlr/interference.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace qlr::cli {

using nlohmann::json;

namespace {

// -- JSON encoders --------------------------------------------------------------

json to_json(const Scalar &z) { return json{{"re", z.re()}, {"im", z.im()}}; }

json to_json(const Vec3 &v) {
    json out = json::array();
    for (const auto &z : v) {
        out.push_back(to_json(z));
    }
    return out;
}

json to_json(const Mat3 &m) {
    json out = json::array();
    for (const auto &row : m) {
        json r = json::array();
        for (const auto &z : row) {
            r.push_back(to_json(z));
        }
        out.push_back(std::move(r));
    }
    return out;
}

json to_json(const ValidationReport &r) {
    json checks = json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"id", c.id}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    }
    return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

json to_json(const InterferenceTable &t) {
    json borderline = json::array();
    for (const auto &b : t.borderline) {
        borderline.push_back({{"row", b.row + 1}, {"pair", pair_label(b.pair)}, {"lambda", b.lambda}});
    }
    json lambda = json::array();
    for (const auto &row : t.lambda) {
        lambda.push_back({{"12", row[0]}, {"13", row[1]}, {"23", row[2]}});
    }
    return {{"class", std::string(to_string(t.cls))}, {"lambda", std::move(lambda)},
            {"borderline", std::move(borderline)}};
}

json to_json(const BasisParams &b) {
    return {{"field", std::string(to_string(b.field))},
            {"a23", b.a23},
            {"a32", b.a32},
            {"a33", b.a33},
            {"eps23", b.eps23},
            {"eps32", b.eps32},
            {"eps33", b.eps33},
            {"u", b.u},
            {"s", b.s},
            {"t", b.t}};
}

json to_json(const StateParams &s) { return {{"v", s.v}, {"gamma", s.gamma}}; }

json to_json(const Representation &r) {
    const auto &d = r.diagnostics;
    json diag{{"unitarity_residual", d.unitarity_residual},
              {"phase_residual", d.phase_residual},
              {"pair_law_residual", d.pair_law_residual},
              {"born_residual", d.born_residual},
              {"magnitude_residual", d.magnitude_residual},
              {"candidates_per_row", d.candidates_per_row},
              {"combinations_tried", d.combinations_tried},
              {"combinations_passing", d.combinations_passing},
              {"chosen", d.chosen}};
    if (d.b_prior_residual) {
        diag["b_prior_residual"] = *d.b_prior_residual;
    }
    return {{"field", std::string(to_string(r.field))},
            {"interference", to_json(r.table)},
            {"phases",
             {{"kind", r.phases.kind == PhaseKind::trig ? "trig" : "hyper"},
              {"phi", r.phases.phi},
              {"sign", r.phases.sign}}},
            {"amplitudes", {{"sub", to_json(r.amplitudes.sub)}, {"b", to_json(r.amplitudes.b)}}},
            {"transition", to_json(r.transition.entries)},
            {"reconstructed_b", r.reconstructed_b},
            {"diagnostics", std::move(diag)}};
}

// -- Table helpers ----------------------------------------------------------------

std::string num(double x) { return fmt::format("{:.6f}", x); }

std::string sci(double x) { return fmt::format("{:.3e}", x); }

std::string scalar_text(const Scalar &z) {
    const char unit = z.field() == Field::complex ? 'i' : 'j';
    return fmt::format("{:.6f} {} {:.6f}{}", z.re(), z.im() < 0 ? '-' : '+', std::abs(z.im()), unit);
}

void print_lambda_table(const InterferenceTable &t, std::ostream &os) {
    os << fmt::format("{:<6}{:>14}{:>14}{:>14}\n", "row", "lambda_12", "lambda_13", "lambda_23");
    for (int l = 0; l < 3; ++l) {
        os << fmt::format("{:<6}{:>14}{:>14}{:>14}\n", l + 1, num(t.lambda[l][0]), num(t.lambda[l][1]),
                          num(t.lambda[l][2]));
    }
    os << "class: " << to_string(t.cls) << '\n';
    for (const auto &b : t.borderline) {
        os << fmt::format("warning: lambda[{}][{}] = {:.12f} is within {} of |lambda| = 1\n", b.row + 1,
                          pair_label(b.pair), b.lambda, kBorderlineBand);
    }
}

/// Loads a data file, reporting parse and schema problems on err.
std::optional<ContextData> load_or_report(const std::filesystem::path &path, std::ostream &err) {
    try {
        return load_context(path);
    } catch (const ParseError &e) {
        if (e.line() > 0) {
            err << fmt::format("error: {}:{}:{}: {}\n", path.string(), e.line(), e.column(), e.what());
        } else {
            err << "error: " << e.what() << '\n';
        }
    } catch (const Error &e) {
        err << "error: " << path.string() << ": " << e.what() << '\n';
    }
    return std::nullopt;
}

void print_validation_failures(const ValidationReport &r, std::ostream &os) {
    for (const auto &c : r.failures()) {
        os << fmt::format("FAIL {} (residual {}, tolerance {})\n", c.id, sci(c.residual), sci(c.tolerance));
    }
}

} // namespace

// -- validate ---------------------------------------------------------------------

int cmd_validate(const std::filesystem::path &path, double tol, Format format, Streams io) {
    const auto data = load_or_report(path, io.err);
    if (!data) {
        return kParseError;
    }
    const ValidationReport report = validate(*data, tol);
    const int code = report.passed() ? kOk : kValidationFailed;
    if (format == Format::machine) {
        json j = to_json(report);
        j["exit_code"] = code;
        io.out << j.dump(2) << '\n';
        return code;
    }
    print_validation_failures(report, io.out);
    io.out << fmt::format("{} checks, {} failed (tolerance {})\n", report.checks.size(), report.failures().size(),
                          sci(tol));
    io.out << (report.passed() ? "valid\n" : "invalid\n");
    return code;
}

// -- represent ---------------------------------------------------------------------

int cmd_represent(const std::filesystem::path &path, const RepresentOptions &options, Format format, Streams io) {
    const auto data = load_or_report(path, io.err);
    if (!data) {
        return kParseError;
    }
    int code = kOk;
    std::optional<Representation> rep;
    std::string failure;
    std::optional<InterferenceTable> table;
    try {
        rep = represent(*data, options);
    } catch (const ValidationFailed &e) {
        code = kValidationFailed;
        failure = e.what();
    } catch (const InfeasibleRow &e) {
        code = kInfeasible;
        failure = e.what();
    } catch (const NoUnitaryCombination &e) {
        code = kInfeasible;
        failure = e.what();
    } catch (const DegenerateDenominator &e) {
        code = kValidationFailed;
        failure = e.what();
    }
    if (!rep && code == kInfeasible) {
        table = interference_table(*data);
    }

    if (format == Format::machine) {
        json j{{"exit_code", code}};
        if (rep) {
            j["representation"] = to_json(*rep);
        } else {
            j["error"] = failure;
            if (table) {
                j["interference"] = to_json(*table);
            }
        }
        io.out << j.dump(2) << '\n';
        return code;
    }

    if (!rep) {
        if (table) {
            print_lambda_table(*table, io.out);
        }
        io.err << (code == kInfeasible ? "infeasible: " : "invalid: ") << failure << '\n';
        return code;
    }
    print_lambda_table(rep->table, io.out);
    io.out << "field: " << to_string(rep->field) << '\n';
    io.out << "phases (gauge: column 1 fixed to 0" << (rep->field == Field::hyperbolic ? ", sign +1" : "") << ")\n";
    for (int l = 0; l < 3; ++l) {
        io.out << fmt::format("  row {}:", l + 1);
        for (int i = 0; i < 3; ++i) {
            if (rep->field == Field::hyperbolic) {
                io.out << fmt::format("  {}{}", rep->phases.sign[l][i] < 0 ? '-' : '+', num(rep->phases.phi[l][i]));
            } else {
                io.out << fmt::format("  {}", num(rep->phases.phi[l][i]));
            }
        }
        io.out << '\n';
    }
    io.out << "transition matrix U\n";
    for (const auto &row : rep->transition.entries) {
        io.out << " ";
        for (const auto &z : row) {
            io.out << fmt::format("  {:>24}", scalar_text(z));
        }
        io.out << '\n';
    }
    io.out << "state psi_b\n";
    for (int l = 0; l < 3; ++l) {
        io.out << fmt::format("  {}\n", scalar_text(rep->amplitudes.b[l]));
    }
    io.out << fmt::format("reconstructed p_b: {} {} {}\n", num(rep->reconstructed_b[0]), num(rep->reconstructed_b[1]),
                          num(rep->reconstructed_b[2]));
    const auto &d = rep->diagnostics;
    io.out << fmt::format("unitarity residual: {}\n", sci(d.unitarity_residual));
    io.out << fmt::format("phase residual: {}\n", sci(d.phase_residual));
    io.out << fmt::format("born residual: {}\n", sci(d.born_residual));
    if (d.b_prior_residual) {
        io.out << fmt::format("b-prior residual: {}\n", sci(*d.b_prior_residual));
    }
    io.out << fmt::format("combinations: {} tried, {} unitary\n", d.combinations_tried, d.combinations_passing);
    return code;
}

// -- classify -------------------------------------------------------------------------

int cmd_classify(const std::filesystem::path &path, double tol, Format format, Streams io) {
    const auto data = load_or_report(path, io.err);
    if (!data) {
        return kParseError;
    }
    const ValidationReport report = validate(*data, tol);
    std::optional<InterferenceTable> table;
    if (report.passed()) {
        table = interference_table(*data);
    }
    const int code = table ? kOk : kValidationFailed;
    if (format == Format::machine) {
        json j{{"exit_code", code}};
        if (table) {
            j["interference"] = to_json(*table);
        } else {
            j["validation"] = to_json(report);
        }
        io.out << j.dump(2) << '\n';
        return code;
    }
    if (!table) {
        print_validation_failures(report, io.out);
        io.err << "invalid: data fails validation\n";
        return code;
    }
    print_lambda_table(*table, io.out);
    return code;
}

// -- paper-example ----------------------------------------------------------------------

int cmd_paper_example(const std::filesystem::path &out_file, Format format, Streams io) {
    const ExampleReport rep = reproduce_example();
    int code = rep.passed() ? kOk : kExampleMismatch;
    const double prior_sum = rep.data.priors[0] + rep.data.priors[1] + rep.data.priors[2];

    std::string write_error;
    if (!out_file.empty()) {
        try {
            save_context(rep.data, out_file);
        } catch (const Error &e) {
            write_error = e.what();
            if (code == kOk) {
                code = kParseError;
            }
        }
    }

    if (format == Format::machine) {
        json rows = json::array();
        for (const auto &r : rep.rows) {
            rows.push_back({{"name", r.name},
                            {"reference", r.reference},
                            {"direct", r.direct},
                            {"closed_form", r.closed_form},
                            {"abs_diff", r.abs_diff},
                            {"passed", r.passed}});
        }
        json j{{"exit_code", code},
               {"passed", rep.passed()},
               {"max_abs_diff", rep.max_abs_diff()},
               {"tolerance", kReferenceTolerance},
               {"prior_sum", prior_sum},
               {"basis", to_json(rep.basis)},
               {"state", to_json(rep.state)},
               {"rows", std::move(rows)}};
        if (!out_file.empty()) {
            j["data_file"] = out_file.string();
        }
        if (!write_error.empty()) {
            j["write_error"] = write_error;
        }
        io.out << j.dump(2) << '\n';
        return code;
    }

    io.out << fmt::format("{:<12}{:>12}{:>12}{:>14}{:>12}  {}\n", "quantity", "reference", "direct", "closed form",
                          "|diff|", "");
    for (const auto &r : rep.rows) {
        io.out << fmt::format("{:<12}{:>12}{:>12}{:>14}{:>12}  {}\n", r.name, num(r.reference), num(r.direct),
                              num(r.closed_form), sci(r.abs_diff), r.passed ? "ok" : "MISMATCH");
    }
    io.out << fmt::format("prior sum: {:.9f}\n", prior_sum);
    io.out << fmt::format("max |diff|: {} (tolerance {})\n", sci(rep.max_abs_diff()), sci(kReferenceTolerance));
    if (!out_file.empty() && write_error.empty()) {
        io.out << "data written to " << out_file.string() << '\n';
    }
    if (!write_error.empty()) {
        io.err << "error: " << write_error << '\n';
    }
    if (!rep.passed()) {
        io.err << "mismatch against the reference values\n";
    }
    return code;
}

// -- oracle-check ------------------------------------------------------------------------

OracleSummary oracle_check(std::size_t trials, std::uint64_t seed, Field field, const ParamRanges &ranges,
                           const OracleTolerances &tol) {
    OracleSummary s;
    s.trials = trials;
    s.seed = seed;
    s.field = field;
    for (std::size_t k = 0; k < trials; ++k) {
        const std::uint64_t instance_seed = seed + k;
        std::string reason;
        RandomInstance inst;
        try {
            inst = random_instance(instance_seed, ranges, field);
        } catch (const ExhaustedRejection &e) {
            s.first_failure = OracleFailure{k, instance_seed, {}, {}, e.what()};
            break;
        }
        s.total_attempts += inst.attempts;

        const OracleResidual o = oracle_residual(inst.basis, inst.state);
        s.max_priors = std::max(s.max_priors, o.priors);
        s.max_singles = std::max(s.max_singles, o.singles);
        s.max_pairs = std::max(s.max_pairs, o.pairs);
        s.max_gram = std::max(s.max_gram, o.gram);
        s.max_orthogonality = std::max(s.max_orthogonality, o.orthogonality);
        if (o.max_probability() > tol.relative) {
            reason = fmt::format("closed form deviates from the direct route by {} (relative)", sci(o.max_probability()));
        } else if (o.gram > tol.gram || o.orthogonality > tol.gram) {
            reason = fmt::format("basis Gram residual {}", sci(std::max(o.gram, o.orthogonality)));
        }

        if (reason.empty()) {
            try {
                const Representation rep = represent(inst.data);
                const double born = rep.diagnostics.b_prior_residual.value_or(0.0);
                const double amp = amplitude_residual(rep.amplitudes, quantum_side(inst.basis, inst.state));
                s.max_unitarity = std::max(s.max_unitarity, rep.diagnostics.unitarity_residual);
                s.max_born = std::max(s.max_born, born);
                s.max_amplitude = std::max(s.max_amplitude, amp);
                if (rep.field != field) {
                    reason = "round trip chose the " + std::string(to_string(rep.field)) + " field";
                } else if (rep.diagnostics.unitarity_residual > tol.unitarity) {
                    reason = fmt::format("round-trip unitarity residual {}", sci(rep.diagnostics.unitarity_residual));
                } else if (born > tol.born) {
                    reason = fmt::format("round-trip p_b residual {}", sci(born));
                } else if (amp > tol.amplitude) {
                    reason = fmt::format("round-trip amplitude residual {}", sci(amp));
                }
            } catch (const Error &e) {
                reason = std::string("round trip rejected: ") + e.what();
            }
        }
        if (!reason.empty() && !s.first_failure) {
            s.first_failure = OracleFailure{k, instance_seed, inst.basis, inst.state, reason};
        }
    }
    return s;
}

int cmd_oracle_check(std::size_t trials, std::uint64_t seed, Field field, Format format, Streams io) {
    const OracleSummary s = oracle_check(trials, seed, field);
    const int code = s.passed() ? kOk : kOracleFailure;
    if (format == Format::machine) {
        json j{{"exit_code", code},
               {"trials", s.trials},
               {"seed", s.seed},
               {"field", std::string(to_string(s.field))},
               {"total_attempts", s.total_attempts},
               {"max_residuals",
                {{"priors", s.max_priors},
                 {"singles", s.max_singles},
                 {"pairs", s.max_pairs},
                 {"gram", s.max_gram},
                 {"orthogonality", s.max_orthogonality},
                 {"unitarity", s.max_unitarity},
                 {"born", s.max_born},
                 {"amplitude", s.max_amplitude}}}};
        if (s.first_failure) {
            const auto &f = *s.first_failure;
            j["first_failure"] = {{"index", f.index},
                                  {"seed", f.seed},
                                  {"reason", f.reason},
                                  {"basis", to_json(f.basis)},
                                  {"state", to_json(f.state)}};
        }
        io.out << j.dump(2) << '\n';
        return code;
    }
    io.out << fmt::format("oracle check: {} trials, seed {}, field {}\n", s.trials, s.seed, to_string(s.field));
    io.out << fmt::format("  draws used:                {}\n", s.total_attempts);
    io.out << fmt::format("  max rel. residual priors:  {}\n", sci(s.max_priors));
    io.out << fmt::format("  max rel. residual singles: {}\n", sci(s.max_singles));
    io.out << fmt::format("  max rel. residual pairs:   {}\n", sci(s.max_pairs));
    io.out << fmt::format("  max basis Gram residual:   {}\n", sci(s.max_gram));
    io.out << fmt::format("  max orthogonality numer.:  {}\n", sci(s.max_orthogonality));
    io.out << fmt::format("  max unitarity residual:    {}\n", sci(s.max_unitarity));
    io.out << fmt::format("  max p_b residual:          {}\n", sci(s.max_born));
    io.out << fmt::format("  max amplitude residual:    {}\n", sci(s.max_amplitude));
    if (s.first_failure) {
        const auto &f = *s.first_failure;
        io.err << fmt::format("FAILED at instance {} (seed {}): {}\n", f.index, f.seed, f.reason);
        io.err << "  basis: " << to_json(f.basis).dump() << '\n';
        io.err << "  state: " << to_json(f.state).dump() << '\n';
    } else {
        io.out << "all instances within tolerance\n";
    }
    return code;
}

// -- sweep ----------------------------------------------------------------------------------

int cmd_sweep(const SweepOptions &options, const std::filesystem::path &out_file, SweepFileFormat file_format,
              Format format, Streams io) {
    SweepResult result;
    try {
        result = run_sweep(options);
    } catch (const ExhaustedRejection &e) {
        io.err << "error: " << e.what() << '\n';
        return kInfeasible;
    }

    auto write = [&](std::ostream &os) {
        if (file_format == SweepFileFormat::csv) {
            write_sweep_csv(result, os);
        } else {
            write_sweep_json(result, os);
        }
    };
    if (out_file.empty()) {
        write(io.out);
        return kOk;
    }
    std::ofstream file(out_file);
    if (!file) {
        io.err << "error: cannot write " << out_file.string() << '\n';
        return kParseError;
    }
    write(file);
    file.close();
    if (!file) {
        io.err << "error: write failed for " << out_file.string() << '\n';
        return kParseError;
    }

    const auto counts = result.class_counts();
    if (format == Format::machine) {
        json j{{"exit_code", kOk},
               {"records", result.records.size()},
               {"file", out_file.string()},
               {"total_attempts", result.total_attempts},
               {"acceptance_rate", result.acceptance_rate()},
               {"admissible", result.admissible_count()},
               {"classes", {{"Trigonometric", counts[0]}, {"Hyperbolic", counts[1]}, {"HyperTrigonometric", counts[2]}}}};
        io.out << j.dump(2) << '\n';
        return kOk;
    }
    io.out << fmt::format("{} records written to {}\n", result.records.size(), out_file.string());
    io.out << fmt::format("acceptance rate: {} ({} draws)\n", num(result.acceptance_rate()), result.total_attempts);
    io.out << fmt::format("admissible: {} of {}\n", result.admissible_count(), result.records.size());
    io.out << fmt::format("classes: Trigonometric {}, Hyperbolic {}, HyperTrigonometric {}\n", counts[0], counts[1],
                          counts[2]);
    return kOk;
}

// -- argument parsing -----------------------------------------------------------------------

int run(int argc, const char *const *argv, Streams io) {
    CLI::App app{"Quantum-like representation of statistical data for two trichotomous observables"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_tag = "table";
    app.add_option("--format", format_tag, "table or machine (JSON)")
        ->check(CLI::IsMember({"table", "machine"}))
        ->capture_default_str();

    std::string path;
    double tol = kDefaultValidationTol;

    auto *validate_cmd = app.add_subcommand("validate", "Check a context-data file");
    validate_cmd->add_option("file", path, "Data file")->required();
    validate_cmd->add_option("--tol", tol, "Validation tolerance")->check(CLI::PositiveNumber)->capture_default_str();

    RepresentOptions ropt;
    std::string field_name = "auto";
    auto *represent_cmd = app.add_subcommand("represent", "Run the representation algorithm on a data file");
    represent_cmd->add_option("file", path, "Data file")->required();
    represent_cmd->add_option("--tol", ropt.tol_validate, "Validation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    represent_cmd->add_option("--tol-phase", ropt.tol_phase, "Phase consistency tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    represent_cmd->add_option("--tol-unitary", ropt.tol_unitary, "Unitarity tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    represent_cmd->add_option("--field", field_name, "complex, hyperbolic or auto")
        ->check(CLI::IsMember({"auto", "complex", "hyperbolic"}))
        ->capture_default_str();

    auto *classify_cmd = app.add_subcommand("classify", "Print the interference coefficients and class");
    classify_cmd->add_option("file", path, "Data file")->required();
    classify_cmd->add_option("--tol", tol, "Validation tolerance")->check(CLI::PositiveNumber)->capture_default_str();

    std::string out_file = "paper_example.json";
    auto *paper_cmd = app.add_subcommand("paper-example", "Reproduce the reference numeric example");
    paper_cmd->add_option("--out", out_file, "Where to write the example's data (empty to skip)")
        ->capture_default_str();

    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::string field_tag = "hyperbolic";
    auto *oracle_cmd = app.add_subcommand("oracle-check", "Compare closed forms with direct inner products");
    oracle_cmd->add_option("--trials", trials, "Number of random instances")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    oracle_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    oracle_cmd->add_option("--field", field_tag, "complex or hyperbolic")
        ->check(CLI::IsMember({"complex", "hyperbolic"}))
        ->capture_default_str();

    SweepOptions sopt;
    std::string sweep_out;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sample the basis family and record admissibility");
    sweep_cmd->add_option("--count", sopt.count, "Number of instances")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sopt.seed, "Base seed")->capture_default_str();
    sweep_cmd->add_option("--field", field_tag, "complex or hyperbolic")
        ->check(CLI::IsMember({"complex", "hyperbolic"}))
        ->capture_default_str();
    sweep_cmd->add_option("--mag-min", sopt.ranges.magnitude_min)->capture_default_str();
    sweep_cmd->add_option("--mag-max", sopt.ranges.magnitude_max)->capture_default_str();
    sweep_cmd->add_option("--phase-min", sopt.ranges.phase_min)->capture_default_str();
    sweep_cmd->add_option("--phase-max", sopt.ranges.phase_max)->capture_default_str();
    sweep_cmd->add_option("--v-min", sopt.ranges.v_abs_min, "Smallest |v_k|")->capture_default_str();
    sweep_cmd->add_option("--v-max", sopt.ranges.v_abs_max, "Largest |v_k|")->capture_default_str();
    sweep_cmd->add_option("--max-attempts", sopt.max_attempts, "Rejection budget per instance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "Output file (stdout when omitted)");
    std::string sweep_format_tag = "csv";
    sweep_cmd->add_option("--file-format", sweep_format_tag, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, io.out, io.err);
        return kParseError;
    }

    const Format format = format_tag == "machine" ? Format::machine : Format::table;
    const SweepFileFormat sweep_format = sweep_format_tag == "json" ? SweepFileFormat::json : SweepFileFormat::csv;

    if (*validate_cmd) {
        return cmd_validate(path, tol, format, io);
    }
    if (*represent_cmd) {
        if (field_name != "auto") {
            ropt.field = field_from_string(field_name);
        }
        return cmd_represent(path, ropt, format, io);
    }
    if (*classify_cmd) {
        return cmd_classify(path, tol, format, io);
    }
    if (*paper_cmd) {
        return cmd_paper_example(out_file, format, io);
    }
    if (*oracle_cmd) {
        return cmd_oracle_check(trials, seed, field_from_string(field_tag), format, io);
    }
    if (*sweep_cmd) {
        try {
            sopt.ranges.check();
        } catch (const std::invalid_argument &e) {
            io.err << "error: " << e.what() << '\n';
            return kParseError;
        }
        sopt.field = field_from_string(field_tag);
        return cmd_sweep(sopt, sweep_out, sweep_format, format, io);
    }
    return kParseError;
}

} // namespace qlr::cli
