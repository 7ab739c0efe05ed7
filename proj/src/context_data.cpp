#include "qlr/context_data.hpp"

#include "qlr/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace qlr {

int pair_index(int i, int j) {
    if (i < 0 || i > 2 || j < 0 || j > 2 || i == j) {
        throw std::invalid_argument("pair_index: need two distinct indices in 0..2");
    }
    return i + j - 1;
}

std::string pair_label(int pair) {
    const PairKey &k = kPairs.at(static_cast<std::size_t>(pair));
    return std::to_string(k.first + 1) + std::to_string(k.second + 1);
}

bool ValidationReport::passed() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return true;
}

std::vector<ValidationCheck> ValidationReport::failures() const {
    std::vector<ValidationCheck> out;
    for (const auto &c : checks) {
        if (!c.passed) {
            out.push_back(c);
        }
    }
    return out;
}

namespace {

std::string idx(int k) { return std::to_string(k + 1); }

void check_range(ValidationReport &r, std::string id, double p, double tol) {
    // NaN fails both comparisons.
    const double distance = std::min(p, 1.0 - p);
    r.checks.push_back({std::move(id), distance, tol, distance > tol});
}

void check_sum(ValidationReport &r, std::string id, double sum, double tol) {
    const double residual = std::abs(sum - 1.0);
    r.checks.push_back({std::move(id), residual, tol, residual <= tol});
}

} // namespace

ValidationReport validate(const ContextData &d, double tol) {
    ValidationReport r;
    double prior_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        check_range(r, "priors.range[" + idx(i) + "]", d.priors[i], tol);
        prior_sum += d.priors[i];
    }
    check_sum(r, "priors.sum", prior_sum, tol);

    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            check_range(r, "singles.range[" + idx(l) + "][" + idx(i) + "]", d.singles[l][i], tol);
        }
    }
    for (int i = 0; i < 3; ++i) {
        check_sum(r, "singles.column_sum[" + idx(i) + "]", d.singles[0][i] + d.singles[1][i] + d.singles[2][i], tol);
    }
    for (int l = 0; l < 3; ++l) {
        check_sum(r, "singles.row_sum[" + idx(l) + "]", d.singles[l][0] + d.singles[l][1] + d.singles[l][2], tol);
    }

    for (int p = 0; p < 3; ++p) {
        for (int l = 0; l < 3; ++l) {
            check_range(r, "pairs.range[" + idx(l) + "][" + pair_label(p) + "]", d.pairs[l][p], tol);
        }
        check_sum(r, "pairs.column_sum[" + pair_label(p) + "]", d.pairs[0][p] + d.pairs[1][p] + d.pairs[2][p], tol);
    }

    if (d.b_priors) {
        const auto &b = *d.b_priors;
        for (int l = 0; l < 3; ++l) {
            check_range(r, "b_priors.range[" + idx(l) + "]", b[l], tol);
        }
        check_sum(r, "b_priors.sum", b[0] + b[1] + b[2], tol);
    }
    return r;
}

void check_quantum_side(const QuantumSide &q, double tol) {
    for (int r = 0; r < 3; ++r) {
        if (q.state[r].field() != q.field) {
            throw InvalidQuantumSide("state component " + idx(r) + " is not in the declared field");
        }
        for (int c = 0; c < 3; ++c) {
            if (q.basis[r][c].field() != q.field) {
                throw InvalidQuantumSide("basis entry is not in the declared field");
            }
        }
    }
    const double norm_dev = std::abs(sq_norm(q.state) - 1.0);
    if (!(norm_dev <= tol)) {
        throw InvalidQuantumSide("state squared norm deviates from 1 by " + std::to_string(norm_dev));
    }
    const double gram_dev = max_deviation_from_identity(gram(q.basis));
    if (!(gram_dev <= tol)) {
        throw InvalidQuantumSide("a-basis is not orthonormal: Gram deviation " + std::to_string(gram_dev));
    }
}

namespace {

void require_probability(const std::string &what, double p, double tol) {
    if (!(p > tol && p < 1.0 - tol)) {
        throw NonProbability(what, p);
    }
}

} // namespace

ContextData from_quantum(const QuantumSide &q, double tol) {
    check_quantum_side(q);
    ContextData d;

    // c_i = <e^a_i | psi>
    std::array<Scalar, 3> c{};
    for (int i = 0; i < 3; ++i) {
        c[i] = inner(column(q.basis, i), q.state);
        d.priors[i] = sq_abs(c[i]);
        require_probability("p^a[" + idx(i) + "]", d.priors[i], tol);
    }
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            d.singles[l][i] = sq_abs(q.basis[l][i]);
            require_probability("p^{b|a}[" + idx(l) + "][" + idx(i) + "]", d.singles[l][i], tol);
        }
    }
    for (int p = 0; p < 3; ++p) {
        const auto [k, j] = kPairs[p];
        const double denom = d.priors[k] + d.priors[j];
        if (!(denom > tol)) {
            throw DegenerateDenominator("pair " + pair_label(p) + ": |<e^a|psi>|^2 sum is " + std::to_string(denom));
        }
        for (int l = 0; l < 3; ++l) {
            // <e^b_l|e^a_k><e^a_k|psi> + <e^b_l|e^a_j><e^a_j|psi>
            const Scalar amp = q.basis[l][k] * c[k] + q.basis[l][j] * c[j];
            d.pairs[l][p] = sq_abs(amp) / denom;
            require_probability("p^{b|a}[" + idx(l) + "][" + pair_label(p) + "]", d.pairs[l][p], tol);
        }
    }
    Probabilities3 b{};
    for (int l = 0; l < 3; ++l) {
        b[l] = sq_abs(q.state[l]);
        require_probability("p^b[" + idx(l) + "]", b[l], tol);
    }
    d.b_priors = b;
    return d;
}

} // namespace qlr
