#include "qlr/basis_family.hpp"
#include "qlr/errors.hpp"
#include "qlr/qlra.hpp"
#include "qlr/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qlr;

namespace {

ContextData perturbed_example(int l, int p, double delta = 0.05) {
    ContextData d = reproduce_example().data;
    d.pairs[l][p] += delta;
    for (int m = 0; m < 3; ++m) {
        d.pairs[m][p] /= 1.0 + delta;
    }
    return d;
}

QuantumSide dft_side() {
    const double pi = std::numbers::pi;
    QuantumSide q{Field::complex, zero_matrix(Field::complex), zero_vector(Field::complex)};
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            q.basis[l][i] = std::polar(1.0 / std::sqrt(3.0), 2.0 * pi * l * i / 3.0);
        }
    }
    const double n = std::sqrt(1.0 + 4.0 + 9.0);
    q.state = {Scalar(std::polar(1.0 / n, 0.3)), Scalar(std::polar(2.0 / n, -1.1)), Scalar(std::polar(3.0 / n, 2.0))};
    return q;
}

} // namespace

TEST_SUITE("qlra") {

TEST_CASE("trigonometric row phases") {
    const double a = 0.7, b = -0.4;
    const auto c = solve_row_phases(std::cos(a), std::cos(b), std::cos(a - b), PhaseKind::trig);
    REQUIRE(c.size() == 2);
    CHECK(c[0].phi2 == doctest::Approx(a));
    CHECK(c[0].phi3 == doctest::Approx(b));
    CHECK(c[1].phi2 == doctest::Approx(-a));
    CHECK(c[1].phi3 == doctest::Approx(-b));
    for (const auto &r : c) {
        CHECK(r.sign2 == 1);
        CHECK(r.sign3 == 1);
    }
}

TEST_CASE("hyperbolic row phases carry signs") {
    const auto c = solve_row_phases(std::cosh(0.5), -std::cosh(0.3), -std::cosh(0.2), PhaseKind::hyper);
    REQUIRE(c.size() == 2);
    CHECK(c[0].phi2 == doctest::Approx(0.5));
    CHECK(c[0].phi3 == doctest::Approx(0.3));
    CHECK(c[0].sign2 == 1);
    CHECK(c[0].sign3 == -1);
    CHECK(c[1].phi2 == doctest::Approx(-0.5));
    CHECK(c[1].phi3 == doctest::Approx(-0.3));
}

TEST_CASE("row phase failures") {
    // Three mutually orthogonal unit phasors do not exist.
    CHECK_THROWS_AS(solve_row_phases(0.0, 0.0, 0.0, PhaseKind::trig), InfeasibleRow);
    CHECK_THROWS_AS(solve_row_phases(1.5, 0.2, 0.2, PhaseKind::trig), KindMismatch);
    CHECK_THROWS_AS(solve_row_phases(0.5, 1.2, 1.2, PhaseKind::hyper), KindMismatch);
    CHECK_THROWS_AS(solve_row_phases(std::cosh(0.5), std::cosh(0.3), std::cosh(2.0), PhaseKind::hyper),
                    InfeasibleRow);
    // Endpoints within the clamp are accepted.
    CHECK_NOTHROW(solve_row_phases(1.0 + 1e-13, 1.0, 1.0, PhaseKind::trig));
    const auto c = solve_row_phases(1.0, 1.0, 1.0, PhaseKind::trig);
    CHECK(c.size() == 1);
}

TEST_CASE("Fourier matrix round trip") {
    const QuantumSide q = dft_side();
    const ContextData d = from_quantum(q);
    const Representation r = represent(d);
    CHECK(r.field == Field::complex);
    CHECK(r.table.cls == InterferenceClass::trigonometric);
    CHECK(r.diagnostics.unitarity_residual <= 1e-12);
    CHECK(r.diagnostics.phase_residual <= 1e-12);
    CHECK(*r.diagnostics.b_prior_residual <= 1e-12);
    CHECK(amplitude_residual(r.amplitudes, q) <= 1e-12);
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            CHECK(sq_abs(r.transition.entries[l][i]) == doctest::Approx(1.0 / 3.0));
        }
    }

    // Moving one phase breaks unitarity visibly.
    PhaseSolution bent = r.phases;
    bent.phi[1][1] += 0.1;
    CHECK(unitarity_residual(build_transition_matrix(d, bent)) > 1e-3);
    CHECK(phase_residual(bent, r.table) > 1e-3);
}

TEST_CASE("unitarity residual of explicit matrices") {
    CHECK(unitarity_residual(TransitionMatrix::from_entries(identity_matrix(Field::complex))) == 0.0);
    CHECK(unitarity_residual(TransitionMatrix::from_entries(identity_matrix(Field::hyperbolic))) == 0.0);
    Mat3 m = identity_matrix(Field::complex);
    m[0][1] = Scalar(Field::complex, 0.01);
    CHECK(unitarity_residual(TransitionMatrix::from_entries(m)) == doctest::Approx(0.01));
}

TEST_CASE("data are invariant under rephasing rows and columns") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> ang(-3, 3);
    for (int k = 0; k < 50; ++k) {
        QuantumInstance inst = random_complex_instance(rng());
        QuantumSide q = inst.quantum;
        for (int l = 0; l < 3; ++l) {
            const Scalar row = std::polar(1.0, ang(rng));
            q.state[l] = row * q.state[l];
            for (int i = 0; i < 3; ++i) {
                q.basis[l][i] = row * q.basis[l][i];
            }
        }
        for (int i = 0; i < 3; ++i) {
            const Scalar col = std::polar(1.0, ang(rng));
            for (int l = 0; l < 3; ++l) {
                q.basis[l][i] = q.basis[l][i] * col;
            }
        }
        const ContextData d = from_quantum(q);
        for (int l = 0; l < 3; ++l) {
            for (int p = 0; p < 3; ++p) {
                CHECK(d.pairs[l][p] == doctest::Approx(inst.data.pairs[l][p]).epsilon(1e-10));
                CHECK(d.singles[l][p] == doctest::Approx(inst.data.singles[l][p]).epsilon(1e-12));
            }
            CHECK(d.priors[l] == doctest::Approx(inst.data.priors[l]).epsilon(1e-10));
        }
        const Representation r = represent(d);
        CHECK(amplitude_residual(r.amplitudes, q) <= 1e-8);
        CHECK(amplitude_residual(r.amplitudes, inst.quantum) <= 1e-8);
    }
}

TEST_CASE("complex round trip over random unitaries") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const QuantumInstance inst = random_complex_instance(seed);
        const Representation r = represent(inst.data);
        CHECK(r.table.cls == InterferenceClass::trigonometric);
        CHECK(r.diagnostics.unitarity_residual <= 1e-8);
        CHECK(*r.diagnostics.b_prior_residual <= 1e-8);
        CHECK(r.diagnostics.born_residual <= 1e-10);
        CHECK(r.diagnostics.pair_law_residual <= 1e-10);
        CHECK(r.diagnostics.magnitude_residual <= 1e-12);
        CHECK(amplitude_residual(r.amplitudes, inst.quantum) <= 1e-8);
        CHECK(r.diagnostics.combinations_passing >= 1);
        CHECK(r.diagnostics.combinations_tried <= 64);
    }
}

TEST_CASE("reference example is represented hyperbolically") {
    const ExampleReport ex = reproduce_example();
    const Representation r = represent(ex.data);
    CHECK(r.field == Field::hyperbolic);
    CHECK(r.table.cls == InterferenceClass::hyperbolic);
    CHECK(r.diagnostics.born_residual <= 1e-8);
    CHECK(r.diagnostics.unitarity_residual <= 1e-10);
    CHECK(r.reconstructed_b[0] == doctest::Approx(4.0 / 17.0).epsilon(1e-9));
    CHECK(r.reconstructed_b[1] == doctest::Approx(9.0 / 17.0).epsilon(1e-9));
    CHECK(r.reconstructed_b[2] == doctest::Approx(4.0 / 17.0).epsilon(1e-9));
    CHECK(amplitude_residual(r.amplitudes, ex.quantum) <= 1e-8);
    const Vec3 psi = reconstruct_state(r.amplitudes);
    CHECK(sq_norm(psi) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("perturbed example is rejected") {
    for (int l = 0; l < 3; ++l) {
        for (int p = 0; p < 3; ++p) {
            const ContextData d = perturbed_example(l, p);
            REQUIRE(validate(d).passed());
            bool rejected = false;
            try {
                represent(d);
            } catch (const InfeasibleRow &) {
                rejected = true;
            } catch (const NoUnitaryCombination &) {
                rejected = true;
            }
            CHECK_MESSAGE(rejected, "perturbation of row ", l + 1, " pair ", pair_label(p));
        }
    }
    CHECK_THROWS_AS(represent(perturbed_example(1, 1)), NoMixedRow);
}

TEST_CASE("forced field and invalid data") {
    const ContextData d = reproduce_example().data;
    RepresentOptions opt;
    opt.field = Field::complex;
    CHECK_THROWS_AS(represent(d, opt), InfeasibleRow);
    opt.field = Field::hyperbolic;
    CHECK_NOTHROW(represent(d, opt));

    ContextData bad = d;
    bad.priors[0] += 0.01;
    CHECK_THROWS_AS(represent(bad), ValidationFailed);
}

TEST_CASE("tight tolerances reject what loose ones accept") {
    const ContextData d = random_complex_instance(7).data;
    RepresentOptions opt;
    opt.tol_unitary = 1e-30;
    CHECK_THROWS_AS(represent(d, opt), NoUnitaryCombination);
}

} // TEST_SUITE
