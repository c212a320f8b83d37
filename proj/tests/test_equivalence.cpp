#include "qwalk/equivalence.hpp"

#include "qwalk/search.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <json.hpp>

#include <string>

using namespace qwalk;

TEST_CASE("operator comparison basics") {
    const Graph g = from_edge_list("0 1");
    const ArcBasis basis(g);
    const WalkOperator shift = shift_flipflop(basis);

    const ComparisonReport same = operator_equal(shift, shift, 1e-12);
    CHECK(same.max_abs_diff == 0.0);
    CHECK(same.passed);

    // The shift differs from the identity by full permutation entries.
    const ComparisonReport diff = operator_equal(shift, compose({shift, shift}, "I"), 1e-12);
    CHECK(diff.max_abs_diff == doctest::Approx(1.0));
    CHECK(!diff.passed);

    const ArcBasis other(generate(Family::cycle, 4));
    CHECK_THROWS_AS(operator_equal(shift, shift_flipflop(other), 1e-12), std::invalid_argument);
}

TEST_CASE("trajectory comparison is symmetric and zero on equal operators") {
    const Graph g = generate(Family::cycle, 5);
    const ArcBasis basis(g);
    const WalkOperator u = walk_operator(WalkKind::coined_u, g, basis, MarkedSet());
    const WalkOperator w = walk_operator(WalkKind::szegedy_w, g, basis, MarkedSet());
    const StateVector init = uniform_state(basis, InitialState::arc_uniform);

    CHECK(trajectory_equal(u, u, init, 25, 1e-12).max_abs_diff == 0.0);

    const auto ab = trajectory_equal(u, w, init, 25, 1e-10);
    const auto ba = trajectory_equal(w, u, init, 25, 1e-10);
    CHECK(ab.max_abs_diff == doctest::Approx(ba.max_abs_diff).epsilon(1e-12));
}

TEST_CASE("suite passes on the pendant triangle with one marked vertex") {
    const SuiteReport suite =
        run_equivalence_suite(testutil::pendant_triangle(), MarkedSet({1}));
    CHECK(suite.checks.size() == 10);
    CHECK(suite.overall_pass);
    for (const auto& check : suite.checks) {
        INFO(check.name);
        CHECK(check.passed);
        CHECK(check.max_abs_diff < 1e-12);
    }
    // sorted by name
    for (std::size_t i = 1; i < suite.checks.size(); ++i) {
        CHECK(suite.checks[i - 1].name < suite.checks[i].name);
    }
}

TEST_CASE("suite passes with several marked vertices") {
    const SuiteReport suite =
        run_equivalence_suite(generate(Family::complete, 8), MarkedSet({0, 3}));
    CHECK(suite.overall_pass);
    CHECK(suite.checks.size() == 10);
}

TEST_CASE("suite with no marked vertices runs only the walk-only checks") {
    const SuiteReport suite = run_equivalence_suite(generate(Family::cycle, 5), MarkedSet());
    CHECK(suite.overall_pass);
    REQUIRE(suite.checks.size() == 4);
    CHECK(suite.checks[0].name == "01_W_eq_U2");
    CHECK(suite.checks[1].name == "05_R1_eq_C");
    CHECK(suite.checks[2].name == "06_R2_eq_SCS");
    CHECK(suite.checks[3].name == "10_unitary_involutions");
}

TEST_CASE("suite rejects graphs with self-loops") {
    CHECK_THROWS_AS(run_equivalence_suite(generate(Family::complete_loops, 3), MarkedSet({0})),
                    std::invalid_argument);
}

TEST_CASE("suite sweep over the corpus and marked-set sizes") {
    for (const auto& [name, g] : testutil::corpus()) {
        const std::size_t n = g.vertex_count();
        for (std::size_t k : {std::size_t{1}, std::size_t{2}, (n + 1) / 2}) {
            INFO(name << " k=" << k);
            const SuiteReport suite = run_equivalence_suite(g, testutil::first_k(k));
            CHECK(suite.overall_pass);
        }
    }
}

TEST_CASE("text report has one status line per check") {
    const SuiteReport suite =
        run_equivalence_suite(testutil::pendant_triangle(), MarkedSet({1}));
    const std::string text = suite.to_text();
    std::size_t pass_lines = 0;
    for (std::size_t pos = 0; (pos = text.find("PASS  ", pos)) != std::string::npos; ++pos) {
        ++pass_lines;
    }
    CHECK(pass_lines == 10);
    CHECK(text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("json report carries one record per check") {
    const SuiteReport suite =
        run_equivalence_suite(testutil::pendant_triangle(), MarkedSet({1}));
    const auto doc = nlohmann::json::parse(suite.to_json_string());
    CHECK(doc["overall_pass"] == true);
    CHECK(doc["marked"] == nlohmann::json::array({1}));
    REQUIRE(doc["checks"].size() == 10);
    for (const auto& check : doc["checks"]) {
        CHECK(check.contains("name"));
        CHECK(check.contains("max_abs_diff"));
        CHECK(check.contains("tolerance"));
        CHECK(check["pass"] == true);
    }
}

TEST_CASE("marked-coin and query walks evolve identically on symmetric graphs") {
    // With one marked vertex on a distance-transitive graph the marked coin
    // block stays uniform, so S C Q and the marked-coin walk agree along the
    // whole trajectory even though they differ as matrices.
    for (auto [name, g] : {std::pair{std::string("complete(16)"), generate(Family::complete, 16)},
                           std::pair{std::string("hypercube(4)"), generate(Family::hypercube, 4)}}) {
        INFO(name);
        const ArcBasis basis(g);
        const MarkedSet marked({0});
        const WalkOperator scq = walk_operator(WalkKind::coined_scq, g, basis, marked);
        const WalkOperator uskw = walk_operator(WalkKind::coined_uskw, g, basis, marked);
        const StateVector init = uniform_state(basis, InitialState::arc_uniform);
        const std::size_t steps = name == "complete(16)" ? 50 : 100;
        const auto report = trajectory_equal(uskw, scq, init, steps, 1e-10);
        CHECK(report.passed);

        // ... and they do differ as matrices (on the marked coin block).
        CHECK(!operator_equal(uskw, scq, 1e-12).passed);
    }
}

TEST_CASE("marked-coin and query walks diverge on an asymmetric graph") {
    const Graph g = testutil::pendant_triangle();
    const ArcBasis basis(g);
    const MarkedSet marked({1});
    const WalkOperator scq = walk_operator(WalkKind::coined_scq, g, basis, marked);
    const WalkOperator uskw = walk_operator(WalkKind::coined_uskw, g, basis, marked);
    const StateVector init = uniform_state(basis, InitialState::arc_uniform);
    const auto report = trajectory_equal(uskw, scq, init, 10, 1e-10);
    CHECK(report.max_abs_diff > 1e-3);
}

TEST_CASE("query walk matches the absorbing walk on strongly regular graphs") {
    for (auto [name, g] : {std::pair{std::string("petersen"), generate(Family::petersen)},
                           std::pair{std::string("paley(13)"), generate(Family::paley, 13)}}) {
        INFO(name);
        const ArcBasis basis(g);
        const MarkedSet marked({0});
        const WalkOperator wq1 = walk_operator(WalkKind::szegedy_wq1, g, basis, marked);
        const WalkOperator wp = walk_operator(WalkKind::szegedy_wprime, g, basis, marked);
        const StateVector init = uniform_state(basis, InitialState::arc_uniform);
        CHECK(trajectory_equal(wq1, wp, init, 50, 1e-10).passed);
    }
}
