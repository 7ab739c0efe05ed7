#include "qlr/sweep.hpp"

#include "qlr/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <limits>

namespace qlr {

double SweepResult::acceptance_rate() const {
    return total_attempts > 0 ? static_cast<double>(records.size()) / static_cast<double>(total_attempts) : 0.0;
}

std::array<std::size_t, 3> SweepResult::class_counts() const {
    std::array<std::size_t, 3> out{};
    for (const auto &r : records) {
        ++out[static_cast<std::size_t>(r.cls)];
    }
    return out;
}

std::size_t SweepResult::admissible_count() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const SweepRecord &r) { return r.admissible; }));
}

SweepResult run_sweep(const SweepOptions &opt) {
    opt.ranges.check();
    SweepResult result;
    result.options = opt;
    result.records.reserve(opt.count);
    for (std::size_t k = 0; k < opt.count; ++k) {
        const RandomInstance inst = random_instance(opt.seed + k, opt.ranges, opt.field, opt.max_attempts,
                                                    opt.represent.tol_validate);
        result.total_attempts += inst.attempts;

        SweepRecord rec;
        rec.index = k;
        rec.seed = inst.seed;
        rec.attempts = inst.attempts;
        rec.basis = inst.basis;
        rec.state = inst.state;
        rec.data = inst.data;
        const OracleResidual o = oracle_residual(inst.basis, inst.state);
        rec.oracle_residual = o.max_probability();
        rec.gram_residual = o.gram;
        rec.cls = interference_table(inst.data).cls;
        try {
            const Representation rep = represent(inst.data, opt.represent);
            rec.admissible = true;
            rec.unitarity_residual = rep.diagnostics.unitarity_residual;
            rec.born_residual = rep.diagnostics.b_prior_residual;
        } catch (const Error &e) {
            rec.failure = e.what();
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

namespace {

std::string csv_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

} // namespace

void write_sweep_csv(const SweepResult &result, std::ostream &os) {
    os << "index,seed,attempts,field,a23,a32,a33,eps23,eps32,eps33,u,s,t,v1,v2,v3,gamma1,gamma2,gamma3,"
          "p_a1,p_a2,p_a3";
    for (int l = 0; l < 3; ++l) {
        for (int q = 0; q < 3; ++q) {
            os << ",p_b" << l + 1 << "_a" << pair_label(q);
        }
    }
    os << ",class,admissible,oracle_residual,gram_residual,unitarity_residual,born_residual,failure\n";

    const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
    for (const auto &r : result.records) {
        const auto &b = r.basis;
        os << r.index << ',' << r.seed << ',' << r.attempts << ',' << to_string(b.field) << ',' << b.a23 << ','
           << b.a32 << ',' << b.a33 << ',' << b.eps23 << ',' << b.eps32 << ',' << b.eps33 << ',' << b.u << ','
           << b.s << ',' << b.t;
        for (double v : r.state.v) {
            os << ',' << v;
        }
        for (double g : r.state.gamma) {
            os << ',' << g;
        }
        for (double p : r.data.priors) {
            os << ',' << p;
        }
        for (const auto &row : r.data.pairs) {
            for (double p : row) {
                os << ',' << p;
            }
        }
        os << ',' << to_string(r.cls) << ',' << (r.admissible ? "true" : "false") << ',' << r.oracle_residual
           << ',' << r.gram_residual << ',';
        if (r.unitarity_residual) {
            os << *r.unitarity_residual;
        }
        os << ',';
        if (r.born_residual) {
            os << *r.born_residual;
        }
        os << ',' << csv_quote(r.failure) << '\n';
    }
    os.precision(old_precision);
}

void write_sweep_json(const SweepResult &result, std::ostream &os) {
    using nlohmann::json;
    json records = json::array();
    for (const auto &r : result.records) {
        const auto &b = r.basis;
        json rec{
            {"index", r.index},
            {"seed", r.seed},
            {"attempts", r.attempts},
            {"params",
             {{"field", std::string(to_string(b.field))},
              {"a23", b.a23},
              {"a32", b.a32},
              {"a33", b.a33},
              {"eps23", b.eps23},
              {"eps32", b.eps32},
              {"eps33", b.eps33},
              {"u", b.u},
              {"s", b.s},
              {"t", b.t},
              {"v", r.state.v},
              {"gamma", r.state.gamma}}},
            {"priors", r.data.priors},
            {"singles", r.data.singles},
            {"pairs", r.data.pairs},
            {"class", std::string(to_string(r.cls))},
            {"admissible", r.admissible},
            {"residuals", {{"oracle", r.oracle_residual}, {"gram", r.gram_residual}}},
        };
        if (r.unitarity_residual) {
            rec["residuals"]["unitarity"] = *r.unitarity_residual;
        }
        if (r.born_residual) {
            rec["residuals"]["born"] = *r.born_residual;
        }
        if (!r.admissible) {
            rec["failure"] = r.failure;
        }
        records.push_back(std::move(rec));
    }
    const auto counts = result.class_counts();
    json doc{
        {"count", result.records.size()},
        {"seed", result.options.seed},
        {"field", std::string(to_string(result.options.field))},
        {"total_attempts", result.total_attempts},
        {"acceptance_rate", result.acceptance_rate()},
        {"admissible", result.admissible_count()},
        {"classes",
         {{"Trigonometric", counts[0]}, {"Hyperbolic", counts[1]}, {"HyperTrigonometric", counts[2]}}},
        {"records", std::move(records)},
    };
    os << doc.dump(2) << '\n';
}

} // namespace qlr
