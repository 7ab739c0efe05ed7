#include "qlr/basis_family.hpp"
#include "qlr/errors.hpp"
#include "qlr/interference.hpp"
#include "qlr/sampling.hpp"

#include <doctest.h>

#include <random>

using namespace qlr;

namespace {

ContextData uniform() {
    ContextData d;
    for (int k = 0; k < 3; ++k) {
        d.priors[k] = 1.0 / 3.0;
        for (int l = 0; l < 3; ++l) {
            d.singles[l][k] = 1.0 / 3.0;
            d.pairs[l][k] = 1.0 / 3.0;
        }
    }
    return d;
}

} // namespace

TEST_SUITE("interference") {

TEST_CASE("uniform data has no interference") {
    const ContextData d = uniform();
    const auto t = interference_table(d);
    for (const auto &row : t.lambda) {
        for (double v : row) {
            CHECK(v == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
    CHECK(t.cls == InterferenceClass::trigonometric);
    for (int l = 0; l < 3; ++l) {
        CHECK(classical_ftp(d, l) == doctest::Approx(1.0 / 3.0));
        CHECK(ftp_interference(d, t, l) == doctest::Approx(classical_ftp(d, l)).epsilon(1e-15));
    }
}

TEST_CASE("zero coefficients reduce to the classical formula") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 500; ++k) {
        const ContextData d = random_complex_instance(rng()).data;
        InterferenceTable zero;
        for (int l = 0; l < 3; ++l) {
            CHECK(ftp_interference(d, zero, l) == classical_ftp(d, l));
        }
    }
}

TEST_CASE("coefficient is symmetric") {
    std::mt19937_64 rng(32);
    for (int k = 0; k < 500; ++k) {
        const ContextData d = random_complex_instance(rng()).data;
        for (int l = 0; l < 3; ++l) {
            for (const auto &[i, j] : kPairs) {
                CHECK(coefficient(d, l, i, j) == coefficient(d, l, j, i));
            }
        }
    }
}

TEST_CASE("coefficient against the pair law") {
    // lambda solves (p_i + p_j) P = p_i s_i + p_j s_j + 2 lambda sqrt(p_i s_i p_j s_j).
    ContextData d = uniform();
    d.priors = {0.2, 0.3, 0.5};
    d.singles = {{{0.5, 0.2, 0.3}, {0.3, 0.5, 0.2}, {0.2, 0.3, 0.5}}};
    d.pairs[0][0] = 0.4;
    const double wi = 0.2 * 0.5, wj = 0.3 * 0.2;
    CHECK(coefficient(d, 0, 0, 1) == doctest::Approx((0.5 * 0.4 - wi - wj) / (2 * std::sqrt(wi * wj))));
}

TEST_CASE("quantum data satisfies the total probability formula with interference") {
    std::mt19937_64 rng(33);
    for (int k = 0; k < 300; ++k) {
        const ContextData d = random_complex_instance(rng()).data;
        const auto t = interference_table(d);
        CHECK(t.cls == InterferenceClass::trigonometric);
        for (int l = 0; l < 3; ++l) {
            CHECK(ftp_interference(d, t, l) == doctest::Approx((*d.b_priors)[l]).epsilon(1e-10));
        }
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = random_instance(seed, {}, Field::hyperbolic);
        const auto t = interference_table(inst.data);
        for (int l = 0; l < 3; ++l) {
            CHECK(std::abs(ftp_interference(inst.data, t, l) - (*inst.data.b_priors)[l]) <= 1e-9);
        }
    }
}

TEST_CASE("reference example coefficients") {
    const auto t = interference_table(reproduce_example().data);
    const Matrix3 expected{{{1.16645, 1.04718, 1.03486}, {-1.16645, 1.04718, -1.03486}, {-1.16645, -1.04718, 1.03486}}};
    for (int l = 0; l < 3; ++l) {
        for (int p = 0; p < 3; ++p) {
            CHECK(t.lambda[l][p] == doctest::Approx(expected[l][p]).epsilon(1e-5));
        }
    }
    CHECK(t.cls == InterferenceClass::hyperbolic);
    CHECK(t.borderline.empty());
}

TEST_CASE("classification") {
    CHECK(classify({{{0.1, -0.9, 1.0}, {0, 0, 0}, {-1.0, 0.5, 0.5}}}) == InterferenceClass::trigonometric);
    CHECK(classify({{{1.1, -1.9, 3.0}, {-1.0001, 2, 2}, {5, 5, 5}}}) == InterferenceClass::hyperbolic);
    CHECK(classify({{{1.1, -1.9, 3.0}, {-1.0001, 2, 2}, {5, 5, 1.0}}}) == InterferenceClass::hyper_trigonometric);
    CHECK(to_string(InterferenceClass::hyper_trigonometric) == "HyperTrigonometric");
}

TEST_CASE("borderline coefficients are flagged") {
    // Pick P so that lambda_{1,12} = 1 - 1e-8.
    ContextData d = uniform();
    const double w = 1.0 / 9.0;
    const double lambda = 1.0 - 1e-8;
    d.pairs[0][0] = (2 * w + 2 * lambda * w) / (2.0 / 3.0);
    const auto t = interference_table(d);
    REQUIRE(t.borderline.size() == 1);
    CHECK(t.borderline[0].row == 0);
    CHECK(t.borderline[0].pair == 0);
    CHECK(t.cls == InterferenceClass::trigonometric);
}

TEST_CASE("degenerate denominators") {
    ContextData d = uniform();
    d.priors = {0.0, 0.5, 0.5};
    CHECK_THROWS_AS(coefficient(d, 0, 0, 1), DegenerateDenominator);
    CHECK_NOTHROW(coefficient(d, 0, 1, 2));
    CHECK_THROWS(coefficient(d, 0, 1, 1));
}

} // TEST_SUITE
