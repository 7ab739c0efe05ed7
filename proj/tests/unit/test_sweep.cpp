#include "qlr/sampling.hpp"
#include "qlr/sweep.hpp"

#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

using namespace qlr;

TEST_SUITE("sweep") {

TEST_CASE("sweep records") {
    SweepOptions opt;
    opt.count = 10;
    opt.seed = 5;
    const SweepResult r = run_sweep(opt);
    REQUIRE(r.records.size() == 10);
    for (std::size_t k = 0; k < r.records.size(); ++k) {
        const auto &rec = r.records[k];
        CHECK(rec.index == k);
        CHECK(rec.seed == 5 + k);
        CHECK(rec.oracle_residual <= 1e-9);
        CHECK(rec.gram_residual <= 1e-10);
        if (rec.admissible) {
            CHECK(rec.born_residual.has_value());
            CHECK(*rec.born_residual <= 1e-8);
        } else {
            CHECK_FALSE(rec.failure.empty());
        }
    }
    CHECK(r.total_attempts >= 10);
    CHECK(r.acceptance_rate() > 0.0);
    CHECK(r.acceptance_rate() <= 1.0);

    // Instance k does not depend on the sweep it belongs to.
    SweepOptions shifted = opt;
    shifted.seed = 7;
    shifted.count = 3;
    const SweepResult s = run_sweep(shifted);
    CHECK(s.records[0].data == r.records[2].data);
}

TEST_CASE("hyperbolic sweep yields hyperbolic interference") {
    SweepOptions opt;
    opt.count = 50;
    const SweepResult r = run_sweep(opt);
    const auto counts = r.class_counts();
    CHECK(counts[0] + counts[1] + counts[2] == 50);
    CHECK(counts[static_cast<int>(InterferenceClass::hyperbolic)] >= 1);
}

TEST_CASE("complex sweep is trigonometric") {
    SweepOptions opt;
    opt.count = 30;
    opt.field = Field::complex;
    const SweepResult r = run_sweep(opt);
    CHECK(r.class_counts()[0] == 30);
    CHECK(r.admissible_count() == 30);
}

TEST_CASE("csv and json encodings") {
    SweepOptions opt;
    opt.count = 4;
    const SweepResult r = run_sweep(opt);

    std::ostringstream csv;
    write_sweep_csv(r, csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) {
        rows.push_back(line);
    }
    REQUIRE(rows.size() == 5);
    const auto columns = [](const std::string &s) { return std::count(s.begin(), s.end(), ',') + 1; };
    for (const auto &row : rows) {
        CHECK(columns(row) == columns(rows[0]));
    }

    std::ostringstream js;
    write_sweep_json(r, js);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["records"].size() == 4);
    const std::set<std::string> classes{"Trigonometric", "Hyperbolic", "HyperTrigonometric"};
    for (const auto &rec : doc["records"]) {
        CHECK(classes.count(rec["class"].get<std::string>()) == 1);
        CHECK(rec["priors"].size() == 3);
    }
    CHECK(doc["acceptance_rate"].get<double>() == doctest::Approx(r.acceptance_rate()));
}

TEST_CASE("random unitaries") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        CHECK(max_deviation_from_identity(gram(random_unitary(rng))) <= 1e-12);
        CHECK(sq_norm(random_state(rng)) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(random_complex_instance(9).data == random_complex_instance(9).data);
}

} // TEST_SUITE
