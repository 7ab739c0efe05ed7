#include "qlr/interference.hpp"

#include "qlr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qlr {

std::string_view to_string(InterferenceClass c) {
    switch (c) {
    case InterferenceClass::trigonometric:
        return "Trigonometric";
    case InterferenceClass::hyperbolic:
        return "Hyperbolic";
    case InterferenceClass::hyper_trigonometric:
        return "HyperTrigonometric";
    }
    return "?";
}

double coefficient(const ContextData &d, int l, int i, int j) {
    const int p = pair_index(i, j);
    // Evaluate in canonical order so lambda(i, j) == lambda(j, i) bit for bit.
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    const double wi = d.priors[lo] * d.singles[l][lo];
    const double wj = d.priors[hi] * d.singles[l][hi];
    const double product = wi * wj;
    if (!(product > std::numeric_limits<double>::min())) {
        throw DegenerateDenominator("lambda[" + std::to_string(l + 1) + "][" + pair_label(p) +
                                    "]: p_i p_li p_j p_lj = " + std::to_string(product));
    }
    const double numerator = (d.priors[lo] + d.priors[hi]) * d.pairs[l][p] - (wi + wj);
    return numerator / (2.0 * std::sqrt(product));
}

InterferenceClass classify(const Matrix3 &lambda) {
    bool all_trig = true;
    bool all_hyper = true;
    for (const auto &row : lambda) {
        for (double v : row) {
            if (std::abs(v) <= 1.0) {
                all_hyper = false;
            } else {
                all_trig = false;
            }
        }
    }
    if (all_trig) {
        return InterferenceClass::trigonometric;
    }
    if (all_hyper) {
        return InterferenceClass::hyperbolic;
    }
    return InterferenceClass::hyper_trigonometric;
}

InterferenceTable interference_table(const ContextData &d) {
    InterferenceTable t;
    for (int l = 0; l < 3; ++l) {
        for (int p = 0; p < 3; ++p) {
            const double v = coefficient(d, l, kPairs[p].first, kPairs[p].second);
            t.lambda[l][p] = v;
            if (std::abs(std::abs(v) - 1.0) < kBorderlineBand) {
                t.borderline.push_back({l, p, v});
            }
        }
    }
    t.cls = classify(t.lambda);
    return t;
}

double classical_ftp(const ContextData &d, int l) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        acc += d.priors[i] * d.singles[l][i];
    }
    return acc;
}

double ftp_interference(const ContextData &d, const InterferenceTable &t, int l) {
    double acc = classical_ftp(d, l);
    for (int p = 0; p < 3; ++p) {
        const auto [i, j] = kPairs[p];
        acc += 2.0 * t.lambda[l][p] * std::sqrt(d.priors[i] * d.priors[j] * d.singles[l][i] * d.singles[l][j]);
    }
    return acc;
}

} // namespace qlr
