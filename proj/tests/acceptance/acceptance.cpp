#include "qlr/basis_family.hpp"
#include "qlr/cli.hpp"
#include "qlr/errors.hpp"
#include "qlr/interference.hpp"
#include "qlr/qlra.hpp"
#include "qlr/sampling.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qlr;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string name;
    std::function<Outcome()> run;
    double time_limit = 0.0;
};

ContextData perturbed_example(const ContextData &base, int l, int p) {
    ContextData d = base;
    d.pairs[l][p] += 0.05;
    for (int m = 0; m < 3; ++m) {
        d.pairs[m][p] /= 1.05;
    }
    return d;
}

Outcome paper_example() {
    const auto file = std::filesystem::temp_directory_path() / "qlr_acceptance_paper_example.json";
    std::ostringstream out, err;
    const int code = cli::cmd_paper_example(file, cli::Format::table, {out, err});
    std::filesystem::remove(file);
    const ExampleReport rep = reproduce_example();
    const bool ok = code == 0 && rep.passed() && rep.rows.size() == 12;
    return {ok, fmt::format("exit {}, {} values, max |diff| {:.2e} (limit 1e-6)", code, rep.rows.size(),
                            rep.max_abs_diff())};
}

Outcome analytic_values() {
    const ExampleReport rep = reproduce_example();
    const CompletedBasis c = complete_orthogonal(example_basis());
    const double d_prior = std::abs(rep.data.priors[2] - 4.0 / 238.0);
    const double d_closed = std::abs(closed_form_priors(rep.basis, rep.state)[2] - 4.0 / 238.0);
    const double d_sol = std::max({std::abs(c.a31s + 11.0 / 29.0), std::abs(c.a21s - 2.0 / 29.0),
                                   std::abs(c.a22s + 7.0 / 2.0)});
    const double worst = std::max({d_prior, d_closed, d_sol});
    return {worst <= 1e-12, fmt::format("p_a3 - 4/238 = {:.1e}, completion error {:.1e} (limit 1e-12)",
                                        std::max(d_prior, d_closed), d_sol)};
}

Outcome oracle_equivalence() {
    const std::size_t n = 1000;
    double worst = 0.0;
    std::uint64_t worst_seed = 0;
    for (std::uint64_t seed = 0; seed < n; ++seed) {
        const RandomInstance inst = random_instance(seed, {}, Field::hyperbolic);
        const double r = oracle_residual(inst.basis, inst.state).max_probability();
        if (r > worst) {
            worst = r;
            worst_seed = seed;
        }
    }
    return {worst <= 1e-9, fmt::format("{} hyperbolic instances, 21 probabilities each, max rel. residual {:.2e} "
                                       "(seed {}, limit 1e-9)",
                                       n, worst, worst_seed)};
}

Outcome unitarity() {
    double basis_worst = 0.0;
    double u_worst = 0.0;
    std::size_t bases = 0, transitions = 0;
    auto basis = [&](const BasisParams &p) {
        basis_worst = std::max(basis_worst, max_deviation_from_identity(gram(build_basis(p))));
        ++bases;
    };
    auto transition = [&](const ContextData &d) {
        u_worst = std::max(u_worst, represent(d).diagnostics.unitarity_residual);
        ++transitions;
    };
    basis(example_basis());
    transition(reproduce_example().data);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const RandomInstance h = random_instance(seed, {}, Field::hyperbolic);
        basis(h.basis);
        transition(h.data);
        const RandomInstance c = random_instance(seed, {}, Field::complex);
        basis(c.basis);
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const QuantumInstance q = random_complex_instance(seed);
        basis_worst = std::max(basis_worst, max_deviation_from_identity(gram(q.quantum.basis)));
        ++bases;
        transition(q.data);
    }
    const double worst = std::max(basis_worst, u_worst);
    return {worst <= 1e-10, fmt::format("{} bases max Gram residual {:.2e}; {} transition matrices max residual "
                                        "{:.2e} (limit 1e-10)",
                                        bases, basis_worst, transitions, u_worst)};
}

Outcome complex_round_trip() {
    const std::size_t n = 200;
    std::size_t ok = 0;
    double worst = 0.0;
    std::string first_failure;
    for (std::uint64_t seed = 0; seed < n; ++seed) {
        const QuantumInstance q = random_complex_instance(seed);
        try {
            const Representation r = represent(q.data);
            double born = 0.0;
            for (int l = 0; l < 3; ++l) {
                born = std::max(born, std::abs(r.reconstructed_b[l] - sq_abs(q.quantum.state[l])));
            }
            worst = std::max(worst, born);
            if (r.table.cls == InterferenceClass::trigonometric && born <= 1e-8) {
                ++ok;
            } else if (first_failure.empty()) {
                first_failure = fmt::format(" first failure seed {}", seed);
            }
        } catch (const Error &e) {
            if (first_failure.empty()) {
                first_failure = fmt::format(" first failure seed {}: {}", seed, e.what());
            }
        }
    }
    return {ok == n, fmt::format("{}/{} represented as Trigonometric, max p_b residual {:.2e} (limit 1e-8){}", ok, n,
                                 worst, first_failure)};
}

Outcome hyperbolic_round_trip() {
    const Representation r = represent(reproduce_example().data);
    const double b_err = std::max({std::abs(r.reconstructed_b[0] - 4.0 / 17.0), std::abs(r.reconstructed_b[1] - 9.0 / 17.0),
                                   std::abs(r.reconstructed_b[2] - 4.0 / 17.0)});
    const bool ok = r.table.cls == InterferenceClass::hyperbolic && r.diagnostics.born_residual <= 1e-8 &&
                    b_err <= 1e-9;
    return {ok, fmt::format("class {}, born residual {:.2e}, |p_b - (4,9,4)/17| {:.2e}", to_string(r.table.cls),
                            r.diagnostics.born_residual, b_err)};
}

Outcome infeasibility() {
    const ContextData base = reproduce_example().data;
    int rejected = 0, infeasible_row = 0, no_unitary = 0;
    for (int l = 0; l < 3; ++l) {
        for (int p = 0; p < 3; ++p) {
            try {
                represent(perturbed_example(base, l, p));
            } catch (const InfeasibleRow &) {
                ++rejected;
                ++infeasible_row;
            } catch (const NoUnitaryCombination &) {
                ++rejected;
                ++no_unitary;
            }
        }
    }
    return {rejected == 9, fmt::format("{}/9 perturbations rejected ({} InfeasibleRow, {} NoUnitaryCombination)",
                                       rejected, infeasible_row, no_unitary)};
}

Outcome algebra() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> mag(0.05, 4.0);
    std::bernoulli_distribution coin(0.5);
    const int n = 10000;

    int mult_fail = 0;
    for (int k = 0; k < n; ++k) {
        const HyperbolicNumber z{u(rng), u(rng)}, w{u(rng), u(rng)};
        const double scale = (z.x * z.x + z.y * z.y) * (w.x * w.x + w.y * w.y);
        mult_fail += std::abs(sq_abs(z * w) - sq_abs(z) * sq_abs(w)) > 1e-12 * scale ? 1 : 0;
    }

    int cone_fail = 0, cone_tested = 0;
    while (cone_tested < n) {
        const auto z1 = (coin(rng) ? 1.0 : -1.0) * mag(rng) * hyperbolic_exp(u(rng) / 1.5);
        const auto z2 = (coin(rng) ? 1.0 : -1.0) * mag(rng) * hyperbolic_exp(u(rng) / 1.5);
        const double s = sq_abs(z1 + z2);
        if (std::abs(s) < 1e-9 * (sq_abs(z1) + sq_abs(z2))) {
            continue;
        }
        ++cone_tested;
        cone_fail += cone_sum_check(z1, z2) != (s > 0.0) ? 1 : 0;
    }

    int axiom_fail = 0;
    for (int k = 0; k < 1000; ++k) {
        Vec3 x = zero_vector(Field::hyperbolic), y = x, z = x, combo = x;
        for (int m = 0; m < 3; ++m) {
            x[m] = Scalar(Field::hyperbolic, u(rng), u(rng));
            y[m] = Scalar(Field::hyperbolic, u(rng), u(rng));
            z[m] = Scalar(Field::hyperbolic, u(rng), u(rng));
        }
        const Scalar a(Field::hyperbolic, u(rng), u(rng)), b(Field::hyperbolic, u(rng), u(rng));
        for (int m = 0; m < 3; ++m) {
            combo[m] = a * x[m] + b * z[m];
        }
        // <x, y> := inner(y, x), linear in x.
        const bool symmetric = component_norm(inner(y, x) - conj(inner(x, y))) <= 1e-12;
        const bool linear = component_norm(inner(y, combo) - (a * inner(y, x) + b * inner(y, z))) <= 1e-11;
        bool detected = false;
        for (int m = 0; m < 3; ++m) {
            Vec3 e = zero_vector(Field::hyperbolic);
            e[m] = Scalar::one(Field::hyperbolic);
            detected = detected || !(inner(e, x) == Scalar::zero(Field::hyperbolic));
        }
        axiom_fail += symmetric && linear && detected ? 0 : 1;
    }

    int ftp_fail = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ContextData d = random_complex_instance(seed).data;
        const InterferenceTable zero;
        for (int l = 0; l < 3; ++l) {
            ftp_fail += ftp_interference(d, zero, l) == classical_ftp(d, l) ? 0 : 1;
        }
    }

    const bool ok = mult_fail == 0 && cone_fail == 0 && axiom_fail == 0 && ftp_fail == 0;
    return {ok, fmt::format("sq_abs multiplicativity {}/{} fail, cone criterion {}/{} fail, Hilbert axioms {}/1000 "
                            "fail, zero-interference FTP {}/1500 fail",
                            mult_fail, n, cone_fail, cone_tested, axiom_fail, ftp_fail)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "paper-example reproduction", paper_example, 1.0},
        {"AC2", "analytic spot checks", analytic_values},
        {"AC3", "oracle equivalence", oracle_equivalence, 30.0},
        {"AC4", "unitarity", unitarity},
        {"AC5", "QLRA round trip (complex)", complex_round_trip},
        {"AC6", "QLRA round trip (hyperbolic)", hyperbolic_round_trip},
        {"AC7", "infeasibility detection", infeasibility},
        {"AC8", "algebra property suite", algebra},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("unexpected exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt::format("{:.3f} s", secs);
        if (c.time_limit > 0.0) {
            timing += fmt::format(" (limit {:.0f} s)", c.time_limit);
            o.passed = o.passed && secs < c.time_limit;
        }
        failures += o.passed ? 0 : 1;
        std::cout << fmt::format("[{}] {} {}: {}; {}\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail, timing);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
