// Certifies the algebraic identities tying the Szegedy-side operators to the
// coined-side operators: entrywise operator comparison, iterated trajectory
// comparison, and the full check suite on a given graph and marked set.
#pragma once

#include "qwalk/arc_space.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"

#include <string>
#include <vector>

namespace qwalk {

struct ComparisonReport {
    std::string name;     // suite check id, empty for ad-hoc comparisons
    std::string label_a;
    std::string label_b;
    double max_abs_diff = 0.0;
    double tolerance = 0.0;
    bool passed = false;  // max_abs_diff < tolerance
    // Where the worst difference occurred: matrix coordinates for operator
    // comparisons, (step, 0) for trajectory comparisons.
    std::size_t worst_row = 0;
    std::size_t worst_col = 0;
};

/// Entrywise comparison of the materialized matrices of two operators.
ComparisonReport operator_equal(const WalkOperator& a, const WalkOperator& b, double tol);

/// max over t <= steps of ||a^t init - b^t init||, computed by iterated
/// application (never by matrix powers).
ComparisonReport trajectory_equal(const WalkOperator& a, const WalkOperator& b,
                                  const StateVector& init, std::size_t steps, double tol);

struct SuiteReport {
    std::string graph_desc;
    MarkedSet marked;
    double tolerance = 0.0;
    std::vector<ComparisonReport> checks;  // sorted by check name
    bool overall_pass = false;

    std::string to_text() const;
    std::string to_json_string() const;
};

/// Runs every identity check between independently constructed operators:
///   01 W = U^2            05 R1 = C           09 Q1 R1 Q1 = R1
///   02 W' = U_SKW^2       06 R2 = S C S       10 unitarity + involutions
///   03 Wq1 = (S C Q)^2    07 Q1 = Q
///   04 Wq2 = U^2 Q        08 Q2 = S Q S
/// With an empty marked set only the walk-only checks 01, 05, 06 and 10 run.
/// Requires a loopless graph.
SuiteReport run_equivalence_suite(const Graph& g, const MarkedSet& marked, double tol = 1e-12,
                                  std::string graph_desc = "");

}  // namespace qwalk
