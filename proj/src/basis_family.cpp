#include "qlr/basis_family.hpp"

#include "qlr/errors.hpp"
#include "qlr/phase.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace qlr {

namespace {

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

double sq(double x) { return x * x; }

Scalar unit_phase(Field f, double theta) {
    return phase_value(f == Field::complex ? PhaseFactor::trig(theta) : PhaseFactor::hyper(1, theta));
}

/// Real part of e^{a} conj(e^{b}) + c.c. over 2: cosh or cos of the difference.
double coupling(Field f, double x) { return f == Field::hyperbolic ? std::cosh(x) : std::cos(x); }

void require_nonzero(double value, const std::string &where) {
    if (!(std::abs(value) > kDenominatorFloor)) {
        std::ostringstream os;
        os << where << ": denominator " << value << " vanishes";
        throw DegenerateDenominator(os.str());
    }
}

} // namespace

BasisParams BasisParams::from_signed(double a23s, double a32s, double a33s, double u, double s, double t,
                                     Field field) {
    BasisParams p;
    p.field = field;
    p.a23 = std::abs(a23s);
    p.a32 = std::abs(a32s);
    p.a33 = std::abs(a33s);
    p.eps23 = sign_of(a23s);
    p.eps32 = sign_of(a32s);
    p.eps33 = sign_of(a33s);
    p.u = u;
    p.s = s;
    p.t = t;
    return p;
}

Shorthands shorthands(const BasisParams &p, const StateParams &sp) {
    const double a23 = p.a23, a32 = p.a32, a33 = p.a33;
    const double e23 = p.eps23, e32 = p.eps32, e33 = p.eps33;
    const auto [v1, v2, v3] = sp.v;
    Shorthands h{};
    h.d1 = 1 + sq(a23) + a32 * a33 * e32 * e33;
    h.d2 = a32 * (sq(a23) + sq(a33)) * e32 + a33 * e33;
    h.d3 = sq(a23) * sq(a32 * e32 - a33 * e33);
    h.d4 = a23 * e23 * (a32 * e32 - a33 * e33);
    h.d5 = 1 + a32 * a33 * e32 * e33;
    h.d6 = a32 * v3 * e32;
    h.d7 = a23 * v2 * e23;
    h.d8 = a33 * v3 * e33;
    h.d9 = sq(a23) * sq(a32) * sq(v3);
    h.d10 = sq(a23 * e23 + a23 * a32 * a33 * e23 * e32 * e33);
    h.d11 = 1 + sq(a23) + sq(a33);
    h.d12 = sq(a23) * (1 + sq(a32)) + sq(h.d5);
    h.d13 = sq(v1) + sq(v2) + sq(v3);
    h.gamma_s12 = sp.gamma[0] - sp.gamma[1] + p.s - p.u;
    h.gamma_t13 = sp.gamma[0] - sp.gamma[2] + p.t - p.u;
    return h;
}

CompletedBasis complete_orthogonal(const BasisParams &p) {
    const double a23 = p.a23, a32 = p.a32, a33 = p.a33;
    const double e23 = p.eps23, e32 = p.eps32, e33 = p.eps33;
    const double common = sq(a23) * a32 * e32 * sq(e23) + a32 * sq(a33) * e32 * sq(e33) + a33 * e33;
    require_nonzero(common, "complete_orthogonal (a21, a31)");
    require_nonzero(a23 * e23, "complete_orthogonal (a22)");
    CompletedBasis c{};
    c.a31s = (-sq(a23) * sq(e23) - a32 * a33 * e32 * e33 - 1) / common;
    c.a21s = -(a23 * e23 * (a32 * e32 - a33 * e33)) / common;
    c.a22s = (-a32 * a33 * e32 * e33 - 1) / (a23 * e23);
    return c;
}

Matrix3 signed_pattern(const BasisParams &p, const CompletedBasis &c) {
    return {{
        {1.0, 1.0, 1.0},
        {c.a21s, c.a22s, p.eps23 * p.a23},
        {c.a31s, p.eps32 * p.a32, p.eps33 * p.a33},
    }};
}

std::array<double, 3> orthogonality_numerators(const BasisParams &p, const CompletedBasis &c) {
    const Matrix3 a = signed_pattern(p, c);
    std::array<double, 3> out{};
    for (int q = 0; q < 3; ++q) {
        const auto [i, k] = kPairs[q];
        out[q] = 1.0 + a[1][i] * a[1][k] + a[2][i] * a[2][k];
    }
    return out;
}

Mat3 build_basis(const BasisParams &p) {
    const Matrix3 a = signed_pattern(p, complete_orthogonal(p));
    const std::array<double, 3> row_phase{p.u, p.s, p.t};
    Mat3 m = zero_matrix(p.field);
    for (int i = 0; i < 3; ++i) {
        const double norm = std::sqrt(1.0 + sq(a[1][i]) + sq(a[2][i]));
        for (int l = 0; l < 3; ++l) {
            m[l][i] = (a[l][i] / norm) * unit_phase(p.field, row_phase[l]);
        }
    }
    return m;
}

Vec3 build_state(const StateParams &sp, Field field) {
    const double n2 = sq(sp.v[0]) + sq(sp.v[1]) + sq(sp.v[2]);
    if (!(n2 > 0.0)) {
        throw ZeroState("state amplitudes v are all zero");
    }
    const double n = std::sqrt(n2);
    Vec3 psi = zero_vector(field);
    for (int k = 0; k < 3; ++k) {
        psi[k] = (sp.v[k] / n) * unit_phase(field, sp.gamma[k]);
    }
    return psi;
}

QuantumSide quantum_side(const BasisParams &p, const StateParams &sp) {
    return {p.field, build_basis(p), build_state(sp, p.field)};
}

Probabilities3 closed_form_priors(const BasisParams &p, const StateParams &sp) {
    const Shorthands h = shorthands(p, sp);
    const double a23 = p.a23, a32 = p.a32, a33 = p.a33;
    const double e23 = p.eps23;
    const auto [v1, v2, v3] = sp.v;
    const double cs = coupling(p.field, h.gamma_s12);
    const double ct = coupling(p.field, h.gamma_t13);
    const double cst = coupling(p.field, h.gamma_s12 - h.gamma_t13);

    require_nonzero(h.d11 * h.d12 * h.d13, "closed_form_priors");
    Probabilities3 out{};
    out[0] = (sq(h.d2) * sq(v1) - 2 * h.d2 * (cs * h.d4 * v2 + ct * h.d1 * v3) * v1 + h.d3 * sq(v2) +
              h.d1 * v3 * (2 * cst * h.d4 * v2 + h.d1 * v3)) /
             (h.d11 * h.d12 * h.d13);
    out[1] = ((sq(v1) + 2 * ct * h.d6 * sq(e23) * v1 + sq(a32) * sq(v3)) * sq(a23) -
              2 * h.d5 * (cst * h.d6 + cs * v1) * v2 * e23 * a23 + sq(h.d5) * sq(v2)) /
             (h.d12 * h.d13);
    out[2] = (sq(v1) + 2 * ct * h.d8 * v1 + sq(a23) * sq(v2) + sq(a33) * sq(v3) +
              2 * h.d7 * (cst * h.d8 + cs * v1)) /
             (h.d11 * h.d13);
    return out;
}

Matrix3 closed_form_singles(const BasisParams &p) {
    const Shorthands h = shorthands(p, StateParams{});
    const double a23 = p.a23, a32 = p.a32, a33 = p.a33;
    require_nonzero(h.d11 * h.d12, "closed_form_singles");
    const double col2 = sq(a32) + sq(h.d5) / sq(a23) + 1;
    return {{
        {sq(h.d2) / (h.d11 * h.d12), 1 / col2, 1 / h.d11},
        {h.d3 / (h.d11 * h.d12), sq(h.d5) / h.d12, sq(a23) / h.d11},
        {sq(h.d1) / (h.d11 * h.d12), sq(a32) / col2, sq(a33) / h.d11},
    }};
}

namespace {

/// Shared pieces of the pair expressions.
struct PairTerms {
    Shorthands h;
    double a23, a32, a33, e23, e32, e33;
    double v1, v2, v3;
    double cs, ct, cst;
    double K;    // ((a23^2 + a33^2) a32^2 + 2 d5 - 1)
    double Q;    // ((a32^2 + 1) a23^4 + (a33^2 + 1) d5^2 + 2 d10)
    double R;    // a32^2 a23^4 + ((2 a33^2 + 1) a32^2 + a33^2) a23^2 + a33^2 + a32 a33^3 (a32 a33 + 2 e32 e33)
    double den12; // bracket shared by the {1,2} column
    double den13; // bracket shared by the {1,3} column
    double den23; // bracket shared by the {2,3} column
    double num_b3_a13;
};

PairTerms pair_terms(const BasisParams &p, const StateParams &sp) {
    PairTerms x{};
    x.h = shorthands(p, sp);
    const Shorthands &h = x.h;
    x.a23 = p.a23;
    x.a32 = p.a32;
    x.a33 = p.a33;
    x.e23 = p.eps23;
    x.e32 = p.eps32;
    x.e33 = p.eps33;
    x.v1 = sp.v[0];
    x.v2 = sp.v[1];
    x.v3 = sp.v[2];
    x.cs = coupling(p.field, h.gamma_s12);
    x.ct = coupling(p.field, h.gamma_t13);
    x.cst = coupling(p.field, h.gamma_s12 - h.gamma_t13);

    const double a23 = x.a23, a32 = x.a32, a33 = x.a33, e23 = x.e23, e32 = x.e32, e33 = x.e33;
    const double v1 = x.v1, v2 = x.v2, v3 = x.v3, cs = x.cs, ct = x.ct, cst = x.cst;
    const double a23_4 = sq(sq(a23));

    x.K = (sq(a23) + sq(a33)) * sq(a32) + 2 * h.d5 - 1;
    x.Q = (sq(a32) + 1) * a23_4 + (sq(a33) + 1) * sq(h.d5) + 2 * h.d10;
    x.R = sq(a32) * a23_4 + ((2 * sq(a33) + 1) * sq(a32) + sq(a33)) * sq(a23) + sq(a33) +
          a32 * a33 * a33 * a33 * (a32 * a33 + 2 * e32 * e33);
    x.den12 = (sq(v1) + sq(v3)) * sq(a23) + sq(v2) + sq(v3) - 2 * ct * h.d8 * v1 -
              2 * h.d7 * (cst * h.d8 + cs * v1) + sq(a33) * (sq(v1) + sq(v2));
    x.den13 = x.K * sq(v1) + sq(a23) * (sq(a32) + 1) * sq(v2) + (sq(a23) + sq(h.d5)) * sq(v3) +
              2 * a23 * e23 * (h.d5 * (cst * h.d6 + cs * v1) * v2 - ct * a23 * h.d6 * v1 * e23);
    x.den23 = (a23_4 + (sq(a32) + sq(a33) + 2) * sq(a23) + sq(h.d5)) * sq(v1) +
              2 * h.d2 * (cs * h.d4 * v2 + ct * h.d1 * v3) * v1 + x.Q * sq(v2) - 2 * cst * h.d1 * h.d4 * v2 * v3 +
              sq(v3) * (2 * a32 * e32 * e33 * a33 * a33 * a33 + (sq(a23) + 1) * sq(a33) +
                        sq(a32) * (a23_4 + (2 * sq(a33) + 1) * sq(a23) + sq(sq(a33))));
    x.num_b3_a13 =
        sq(a23) * (sq(a23) * sq(v1) + sq(h.d5) * sq(v2)) * sq(a32) +
        2 * a23 * e23 * e32 *
            ((sq(a23) + sq(h.d5)) * v3 * (cst * h.d5 * v2 - ct * a23 * v1 * e23) -
             cs * a23 * a32 * h.d5 * h.d7 * v1 * e23 * e32) *
            a32 +
        sq(sq(a23) + sq(h.d5)) * sq(v3);

    require_nonzero(x.den12 * h.d11, "pairs {1,2}");
    require_nonzero(x.den13 * h.d12, "pairs {1,3}");
    require_nonzero(x.den23 * h.d11 * h.d12, "pairs {2,3}");
    return x;
}

/// Entries shared by the printed and the corrected table.
Matrix3 shared_pair_entries(const PairTerms &x) {
    const Shorthands &h = x.h;
    const double a23 = x.a23, a32 = x.a32, a33 = x.a33, e23 = x.e23;
    const double v1 = x.v1, v2 = x.v2, v3 = x.v3, cs = x.cs, ct = x.ct, cst = x.cst;
    Matrix3 P{};

    // beta_1 alpha_12
    P[0][0] = -1 / h.d11 + 1 - (sq(a33) * sq(v2) + sq(a23) * sq(v3) - 2 * cst * h.d7 * h.d8) / x.den12;
    // beta_1 alpha_23
    P[0][2] = sq(a23) / h.d12 + 1 / h.d11 -
              (sq(h.d1) * sq(v2) - 2 * cst * h.d1 * h.d4 * v3 * v2 + h.d3 * sq(v3)) / x.den23;
    // beta_2 alpha_12
    P[1][0] = ((sq(v1) + 2 * ct * h.d8 * sq(e23) * v1 + sq(a33) * sq(v3)) * sq(a23) -
               2 * (sq(a33) + 1) * (cst * h.d8 + cs * v1) * v2 * e23 * a23 + sq(sq(a33) + 1) * sq(v2)) /
              (h.d11 * x.den12);
    // beta_2 alpha_13
    P[1][1] = (sq(a23) * ((sq(v1) + 2 * ct * h.d6 * v1 + sq(a32) * sq(v3)) * sq(h.d5) +
                          2 * (sq(a32) + 1) * h.d7 * (cst * h.d6 + cs * v1) * h.d5 +
                          sq(a23) * sq(sq(a32) + 1) * sq(v2))) /
              (h.d12 * x.den13);
    // beta_2 alpha_23
    P[1][2] = (sq(x.Q) * sq(v2) - 2 * cst * h.d1 * h.d4 * x.Q * v3 * v2 +
               2 * h.d2 * h.d4 * v1 * (cs * x.Q * v2 - ct * h.d1 * h.d4 * v3) +
               h.d3 * (sq(h.d2) * sq(v1) + sq(h.d1) * sq(v3))) /
              (h.d11 * h.d12 * x.den23);
    // beta_3 alpha_13
    P[2][1] = x.num_b3_a13 / (h.d12 * x.den13);
    // beta_3 alpha_23
    const double den33 =
        sq((sq(a32) + 1) * sq(a23) + sq(h.d5)) * h.d11 *
        ((h.d12 * sq(v2) + h.d11 * (sq(v1) + 2 * ct * h.d6 * sq(e23) * v1 + sq(a32) * sq(v3))) * sq(a23) -
         2 * h.d5 * h.d11 * (cst * h.d6 + cs * v1) * v2 * e23 * a23 + sq(h.d5) * h.d11 * sq(v2) +
         2 * ct * h.d8 * h.d12 * v1 + 2 * h.d7 * h.d12 * (cst * h.d8 + cs * v1) +
         h.d12 * (sq(v1) + sq(a33) * sq(v3)));
    require_nonzero(den33, "pairs {2,3} row 3");
    P[2][2] = (h.d12 * ((sq(h.d2) * sq(v1) - 2 * cs * h.d2 * h.d4 * v2 * v1 + h.d3 * sq(v2)) * sq(h.d1) +
                        2 * (ct * h.d2 * v1 - cst * h.d4 * v2) * v3 * x.R * h.d1 + sq(v3) * sq(x.R))) /
              den33;
    return P;
}

/// beta_1 alpha_13 numerator; the typeset version squares d9.
double numerator_b1_a13(const PairTerms &x, bool as_printed) {
    const Shorthands &h = x.h;
    const double a23 = x.a23, e23 = x.e23, v1 = x.v1, v2 = x.v2, cs = x.cs, ct = x.ct, cst = x.cst;
    const double d9_term = as_printed ? sq(h.d9) : h.d9;
    return 2 * x.K * v1 * e23 * (cs * h.d5 * v2 - ct * a23 * h.d6 * e23) * a23 -
           2 * cst * h.d5 * h.d6 * v2 * e23 * a23 * a23 * a23 + (d9_term + sq(h.d5) * sq(v2)) * sq(a23) +
           sq(x.K) * sq(v1);
}

} // namespace

Matrix3 closed_form_pairs(const BasisParams &p, const StateParams &sp) {
    const PairTerms x = pair_terms(p, sp);
    Matrix3 P = shared_pair_entries(x);
    P[0][1] = numerator_b1_a13(x, false) / (x.h.d12 * x.den13);
    // beta_3 alpha_12: the beta_2 alpha_12 expression with b-rows 2 and 3
    // exchanged (a23 <-> a33, eps23 <-> eps33, v2 <-> v3, gamma_s12 <-> gamma_t13).
    const double a23 = x.a23, a33 = x.a33, e33 = x.e33, v1 = x.v1, v2 = x.v2, v3 = x.v3;
    P[2][0] = ((sq(v1) + 2 * x.cs * x.h.d7 * sq(e33) * v1 + sq(a23) * sq(v2)) * sq(a33) -
               2 * (sq(a23) + 1) * (x.cst * x.h.d7 + x.ct * v1) * v3 * e33 * a33 + sq(sq(a23) + 1) * sq(v3)) /
              (x.h.d11 * x.den12);
    return P;
}

Matrix3 typeset_pairs(const BasisParams &p, const StateParams &sp) {
    const PairTerms x = pair_terms(p, sp);
    Matrix3 P = shared_pair_entries(x);
    P[0][1] = numerator_b1_a13(x, true) / (x.h.d12 * x.den13);
    P[2][0] = x.num_b3_a13 / (x.h.d12 * x.den13);
    return P;
}

namespace {

double rel_diff(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), std::numeric_limits<double>::min());
}

} // namespace

std::vector<TypesetEntryAudit> audit_typeset_pairs(const BasisParams &p, const StateParams &sp, double rel_tol) {
    const ContextData direct = from_quantum(quantum_side(p, sp));
    const Matrix3 printed = typeset_pairs(p, sp);
    const Matrix3 closed = closed_form_pairs(p, sp);
    std::vector<TypesetEntryAudit> out;
    for (int l = 0; l < 3; ++l) {
        for (int q = 0; q < 3; ++q) {
            TypesetEntryAudit a{l, q, printed[l][q], closed[l][q], direct.pairs[l][q], false, std::nullopt};
            a.printed_matches = rel_diff(a.printed, a.oracle) <= rel_tol;
            if (!a.printed_matches) {
                for (int l2 = 0; l2 < 3 && !a.printed_equals; ++l2) {
                    for (int q2 = 0; q2 < 3; ++q2) {
                        if (rel_diff(a.printed, direct.pairs[l2][q2]) <= rel_tol) {
                            a.printed_equals = std::make_pair(l2, q2);
                            break;
                        }
                    }
                }
            }
            out.push_back(a);
        }
    }
    return out;
}

OracleResidual oracle_residual(const BasisParams &p, const StateParams &sp) {
    const QuantumSide q = quantum_side(p, sp);
    const ContextData direct = from_quantum(q);
    const Probabilities3 pri = closed_form_priors(p, sp);
    const Matrix3 sing = closed_form_singles(p);
    const Matrix3 pairs = closed_form_pairs(p, sp);

    OracleResidual r;
    for (int k = 0; k < 3; ++k) {
        r.priors = std::max(r.priors, rel_diff(pri[k], direct.priors[k]));
        for (int l = 0; l < 3; ++l) {
            r.singles = std::max(r.singles, rel_diff(sing[l][k], direct.singles[l][k]));
            r.pairs = std::max(r.pairs, rel_diff(pairs[l][k], direct.pairs[l][k]));
        }
    }
    r.gram = max_deviation_from_identity(gram(q.basis));
    for (double n : orthogonality_numerators(p, complete_orthogonal(p))) {
        r.orthogonality = std::max(r.orthogonality, std::abs(n));
    }
    return r;
}

BasisParams example_basis(double t) { return BasisParams::from_signed(2.0, 2.0, 3.0, 0.3, t, t, Field::hyperbolic); }

StateParams example_state(double t) { return {{-2.0, 3.0, -2.0}, {0.0, t, t}}; }

bool ExampleReport::passed() const {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.passed; });
}

double ExampleReport::max_abs_diff() const {
    double worst = 0.0;
    for (const auto &r : rows) {
        worst = std::max(worst, r.abs_diff);
    }
    return worst;
}

ExampleReport reproduce_example(double t) {
    ExampleReport rep;
    rep.basis = example_basis(t);
    rep.state = example_state(t);
    rep.quantum = quantum_side(rep.basis, rep.state);
    rep.data = from_quantum(rep.quantum);

    const Probabilities3 pri = closed_form_priors(rep.basis, rep.state);
    const Matrix3 pairs = closed_form_pairs(rep.basis, rep.state);
    auto add = [&rep](std::string name, double reference, double direct, double closed) {
        const double diff = std::max(std::abs(direct - reference), std::abs(closed - reference));
        rep.rows.push_back({std::move(name), reference, direct, closed, diff, diff <= kReferenceTolerance});
    };
    for (int i = 0; i < 3; ++i) {
        add("p_a" + std::to_string(i + 1), kReferencePriors[i], rep.data.priors[i], pri[i]);
    }
    for (int l = 0; l < 3; ++l) {
        for (int q = 0; q < 3; ++q) {
            add("p_b" + std::to_string(l + 1) + "_a" + pair_label(q), kReferencePairs[l][q], rep.data.pairs[l][q],
                pairs[l][q]);
        }
    }
    return rep;
}

void ParamRanges::check() const {
    if (!(magnitude_min > 0.0 && magnitude_min <= magnitude_max)) {
        throw std::invalid_argument("magnitude range must satisfy 0 < min <= max");
    }
    if (!(phase_min <= phase_max)) {
        throw std::invalid_argument("phase range must satisfy min <= max");
    }
    if (!(v_abs_min >= 0.0 && v_abs_min <= v_abs_max && v_abs_max > 0.0)) {
        throw std::invalid_argument("state amplitude range must satisfy 0 <= min <= max, max > 0");
    }
}

RandomInstance random_instance(std::uint64_t seed, const ParamRanges &r, Field field, int max_attempts,
                               double tol) {
    r.check();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(r.magnitude_min, r.magnitude_max);
    std::uniform_real_distribution<double> phase(r.phase_min, r.phase_max);
    std::uniform_real_distribution<double> vabs(r.v_abs_min, r.v_abs_max);
    std::bernoulli_distribution coin(0.5);
    auto sign = [&] { return coin(rng) ? 1 : -1; };

    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        BasisParams p;
        p.field = field;
        p.a23 = mag(rng);
        p.a32 = mag(rng);
        p.a33 = mag(rng);
        p.eps23 = sign();
        p.eps32 = sign();
        p.eps33 = sign();
        p.u = phase(rng);
        p.s = phase(rng);
        p.t = phase(rng);
        StateParams sp;
        for (int k = 0; k < 3; ++k) {
            sp.v[k] = sign() * vabs(rng);
        }
        for (int k = 0; k < 3; ++k) {
            sp.gamma[k] = phase(rng);
        }
        try {
            complete_orthogonal(p);
            ContextData data = from_quantum(quantum_side(p, sp), tol);
            if (!validate(data, tol).passed()) {
                continue;
            }
            return {p, sp, std::move(data), seed, attempt};
        } catch (const Error &) {
            continue;
        }
    }
    throw ExhaustedRejection("random_instance: no admissible draw for seed " + std::to_string(seed) + " in " +
                                 std::to_string(max_attempts) + " attempts",
                             max_attempts);
}

} // namespace qlr
