#include "qlr/qlra.hpp"

#include "qlr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace qlr {

namespace {

std::string row_name(int row) { return row >= 0 ? "row " + std::to_string(row + 1) : "row"; }

/// Phase magnitude and sign for one coefficient.
std::pair<double, int> base_phase(double lambda, PhaseKind kind, int row) {
    const double mag = std::abs(lambda);
    if (kind == PhaseKind::trig) {
        if (mag > 1.0 + kDomainClamp) {
            std::ostringstream os;
            os << row_name(row) << ": |lambda| = " << mag << " > 1 has no trigonometric phase";
            throw KindMismatch(os.str());
        }
        return {std::acos(std::clamp(lambda, -1.0, 1.0)), 1};
    }
    if (mag < 1.0 - kDomainClamp) {
        std::ostringstream os;
        os << row_name(row) << ": |lambda| = " << mag << " < 1 has no hyperbolic phase";
        throw KindMismatch(os.str());
    }
    return {std::acosh(std::max(mag, 1.0)), lambda < 0.0 ? -1 : 1};
}

} // namespace

std::vector<RowPhases> solve_row_phases(double lambda12, double lambda13, double lambda23, PhaseKind kind,
                                        double tol_phase, int row) {
    const auto [phi2, sign2] = base_phase(lambda12, kind, row);
    const auto [phi3, sign3] = base_phase(lambda13, kind, row);

    std::vector<RowPhases> out;
    for (const double s2 : {1.0, -1.0}) {
        for (const double s3 : {1.0, -1.0}) {
            const RowPhases cand{s2 * phi2, s3 * phi3, sign2, sign3};
            const double got = kind == PhaseKind::trig
                                   ? phase_pair_real(PhaseFactor::trig(cand.phi2), PhaseFactor::trig(cand.phi3))
                                   : phase_pair_real(PhaseFactor::hyper(sign2, cand.phi2),
                                                     PhaseFactor::hyper(sign3, cand.phi3));
            if (std::abs(got - lambda23) <= tol_phase &&
                std::find(out.begin(), out.end(), cand) == out.end()) {
                out.push_back(cand);
            }
        }
    }
    if (out.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << row_name(row) << ": no phase assignment reproduces lambda = (" << lambda12 << ", " << lambda13
           << ", " << lambda23 << ") within " << tol_phase;
        throw InfeasibleRow(row, os.str());
    }
    return out;
}

PhaseFactor PhaseSolution::factor(int l, int i) const {
    return kind == PhaseKind::trig ? PhaseFactor::trig(phi[l][i]) : PhaseFactor::hyper(sign[l][i], phi[l][i]);
}

void PhaseSolution::set_row(int l, const RowPhases &r) {
    phi[l] = {0.0, r.phi2, r.phi3};
    sign[l] = {1, r.sign2, r.sign3};
}

double phase_residual(const PhaseSolution &phases, const InterferenceTable &table) {
    double worst = 0.0;
    for (int l = 0; l < 3; ++l) {
        for (int p = 0; p < 3; ++p) {
            const auto [i, j] = kPairs[p];
            const double got = phase_pair_real(phases.factor(l, i), phases.factor(l, j));
            worst = std::max(worst, std::abs(got - table.lambda[l][p]));
        }
    }
    return worst;
}

AmplitudeTable build_amplitudes(const ContextData &d, const PhaseSolution &phases) {
    const Field f = field_of(phases.kind);
    AmplitudeTable a{zero_matrix(f), zero_vector(f)};
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            a.sub[l][i] = std::sqrt(d.priors[i] * d.singles[l][i]) * phase_value(phases.factor(l, i));
            a.b[l] += a.sub[l][i];
        }
    }
    return a;
}

Vec3 reconstruct_state(const AmplitudeTable &amplitudes) { return amplitudes.b; }

double amplitude_residual(const AmplitudeTable &a, const QuantumSide &q) {
    Vec3 c = zero_vector(q.field);
    for (int i = 0; i < 3; ++i) {
        c[i] = inner(column(q.basis, i), q.state);
    }
    double plain = 0.0;
    double conjugated = 0.0;
    double norms = 0.0;
    for (int l = 0; l < 3; ++l) {
        Scalar psi = Scalar::zero(q.field);
        std::array<Scalar, 3> ref{};
        for (int i = 0; i < 3; ++i) {
            ref[i] = q.basis[l][i] * c[i];
            psi += ref[i];
        }
        norms = std::max(norms, std::abs(sq_abs(a.b[l]) - sq_abs(psi)));
        for (const auto &[i, j] : kPairs) {
            const Scalar got = a.sub[l][i] * conj(a.sub[l][j]);
            const Scalar want = ref[i] * conj(ref[j]);
            plain = std::max(plain, component_norm(got - want));
            conjugated = std::max(conjugated, component_norm(conj(got) - want));
        }
    }
    return std::max(norms, std::min(plain, conjugated));
}

TransitionMatrix TransitionMatrix::from_entries(const Mat3 &entries) {
    TransitionMatrix u;
    u.field = entries[0][0].field();
    u.entries = entries;
    return u;
}

TransitionMatrix build_transition_matrix(const ContextData &d, const PhaseSolution &phases) {
    TransitionMatrix u;
    u.field = field_of(phases.kind);
    u.entries = zero_matrix(u.field);
    Matrix3 mag{};
    std::array<std::array<PhaseFactor, 3>, 3> ph{};
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            mag[l][i] = std::sqrt(d.singles[l][i]);
            ph[l][i] = phases.factor(l, i);
            u.entries[l][i] = mag[l][i] * phase_value(ph[l][i]);
        }
    }
    u.magnitude = mag;
    u.phase = ph;
    return u;
}

double unitarity_residual(const TransitionMatrix &u) {
    double worst = max_deviation_from_identity(gram(u.entries));
    if (u.magnitude && u.phase) {
        const auto &mag = *u.magnitude;
        const auto &ph = *u.phase;
        for (int i = 0; i < 3; ++i) {
            for (int k = 0; k < 3; ++k) {
                Scalar acc = Scalar::zero(u.field);
                for (int m = 0; m < 3; ++m) {
                    acc += (mag[m][i] * mag[m][k]) * (phase_value(ph[m][i]) * conj(phase_value(ph[m][k])));
                }
                const Scalar target = i == k ? Scalar::one(u.field) : Scalar::zero(u.field);
                worst = std::max(worst, component_norm(acc - target));
            }
        }
    }
    return worst;
}

namespace {

PhaseKind row_kind(const InterferenceTable &t, int l) {
    int trig = 0;
    for (double v : t.lambda[l]) {
        trig += std::abs(v) <= 1.0 ? 1 : 0;
    }
    if (trig == 3) {
        return PhaseKind::trig;
    }
    if (trig == 0) {
        return PhaseKind::hyper;
    }
    std::ostringstream os;
    os.precision(17);
    os << "row " << l + 1 << " mixes trigonometric and hyperbolic coefficients (" << t.lambda[l][0] << ", "
       << t.lambda[l][1] << ", " << t.lambda[l][2] << ")";
    throw NoMixedRow(l, os.str());
}

void fill_diagnostics(const ContextData &d, Representation &r) {
    auto &diag = r.diagnostics;
    diag.unitarity_residual = unitarity_residual(r.transition);
    diag.phase_residual = phase_residual(r.phases, r.table);
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            diag.magnitude_residual = std::max(
                diag.magnitude_residual, std::abs(sq_abs(r.amplitudes.sub[l][i]) - d.priors[i] * d.singles[l][i]));
        }
        for (int p = 0; p < 3; ++p) {
            const auto [k, j] = kPairs[p];
            const double law = sq_abs(r.amplitudes.sub[l][k] + r.amplitudes.sub[l][j]) / (d.priors[k] + d.priors[j]);
            diag.pair_law_residual = std::max(diag.pair_law_residual, std::abs(law - d.pairs[l][p]));
        }
        diag.born_residual =
            std::max(diag.born_residual, std::abs(r.reconstructed_b[l] - ftp_interference(d, r.table, l)));
    }
    if (d.b_priors) {
        double worst = 0.0;
        for (int l = 0; l < 3; ++l) {
            worst = std::max(worst, std::abs(r.reconstructed_b[l] - (*d.b_priors)[l]));
        }
        diag.b_prior_residual = worst;
    }
}

} // namespace

Representation represent(const ContextData &data, const RepresentOptions &opt) {
    const ValidationReport report = validate(data, opt.tol_validate);
    if (!report.passed()) {
        const auto fails = report.failures();
        std::ostringstream os;
        os << "data fails validation: " << fails.front().id << " (residual " << fails.front().residual << ")";
        if (fails.size() > 1) {
            os << " and " << fails.size() - 1 << " more";
        }
        throw ValidationFailed(os.str());
    }

    Representation rep;
    rep.table = interference_table(data);

    std::array<PhaseKind, 3> kinds{};
    std::array<std::vector<RowPhases>, 3> candidates;
    for (int l = 0; l < 3; ++l) {
        kinds[l] = opt.field ? kind_of(*opt.field) : row_kind(rep.table, l);
        const auto &lam = rep.table.lambda[l];
        try {
            candidates[l] = solve_row_phases(lam[0], lam[1], lam[2], kinds[l], opt.tol_phase, l);
        } catch (const KindMismatch &e) {
            throw InfeasibleRow(l, e.what());
        }
        rep.diagnostics.candidates_per_row[l] = static_cast<int>(candidates[l].size());
    }
    if (kinds[0] != kinds[1] || kinds[0] != kinds[2]) {
        throw NoUnitaryCombination("rows require different scalar fields; no single-field transition matrix exists",
                                   std::numeric_limits<double>::infinity());
    }

    PhaseSolution trial;
    trial.kind = kinds[0];
    double best = std::numeric_limits<double>::infinity();
    double closest = std::numeric_limits<double>::infinity();
    std::array<int, 3> best_idx{-1, -1, -1};
    for (std::size_t a = 0; a < candidates[0].size(); ++a) {
        for (std::size_t b = 0; b < candidates[1].size(); ++b) {
            for (std::size_t c = 0; c < candidates[2].size(); ++c) {
                trial.set_row(0, candidates[0][a]);
                trial.set_row(1, candidates[1][b]);
                trial.set_row(2, candidates[2][c]);
                const double res = unitarity_residual(build_transition_matrix(data, trial));
                ++rep.diagnostics.combinations_tried;
                closest = std::min(closest, res);
                if (res <= opt.tol_unitary) {
                    ++rep.diagnostics.combinations_passing;
                    if (res < best) {
                        best = res;
                        best_idx = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
                    }
                }
            }
        }
    }
    if (best_idx[0] < 0) {
        std::ostringstream os;
        os << "no combination of row phases makes U unitary within " << opt.tol_unitary << " (best residual "
           << closest << " over " << rep.diagnostics.combinations_tried << " combinations)";
        throw NoUnitaryCombination(os.str(), closest);
    }

    rep.field = field_of(trial.kind);
    rep.phases.kind = trial.kind;
    for (int l = 0; l < 3; ++l) {
        rep.phases.set_row(l, candidates[l][static_cast<std::size_t>(best_idx[l])]);
    }
    rep.diagnostics.chosen = best_idx;
    rep.transition = build_transition_matrix(data, rep.phases);
    rep.amplitudes = build_amplitudes(data, rep.phases);
    for (int l = 0; l < 3; ++l) {
        rep.reconstructed_b[l] = sq_abs(rep.amplitudes.b[l]);
    }
    fill_diagnostics(data, rep);
    return rep;
}

} // namespace qlr
