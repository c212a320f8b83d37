#include "qwalk/equivalence.hpp"

#include "qwalk/sparse.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace qwalk {

ComparisonReport operator_equal(const WalkOperator& a, const WalkOperator& b, double tol) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("operator dimension mismatch: " + a.label() + " vs " +
                                    b.label());
    }
    const auto diff = SparseMatrix::max_abs_diff(a.to_matrix(), b.to_matrix());
    ComparisonReport report;
    report.label_a = a.label();
    report.label_b = b.label();
    report.max_abs_diff = diff.value;
    report.tolerance = tol;
    report.passed = diff.value < tol;
    report.worst_row = diff.row;
    report.worst_col = diff.col;
    return report;
}

ComparisonReport trajectory_equal(const WalkOperator& a, const WalkOperator& b,
                                  const StateVector& init, std::size_t steps, double tol) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("operator dimension mismatch: " + a.label() + " vs " +
                                    b.label());
    }
    if (init.size() != a.dimension()) {
        throw std::invalid_argument("initial state dimension mismatch");
    }
    ComparisonReport report;
    report.label_a = a.label();
    report.label_b = b.label();
    report.tolerance = tol;
    StateVector xa = init;
    StateVector xb = init;
    std::vector<double> scratch;
    for (std::size_t t = 1; t <= steps; ++t) {
        a.apply_in_place(xa, scratch);
        b.apply_in_place(xb, scratch);
        const double d = distance(xa, xb);
        if (d > report.max_abs_diff) {
            report.max_abs_diff = d;
            report.worst_row = t;
        }
    }
    report.passed = report.max_abs_diff < tol;
    return report;
}

namespace {

// max |Op^2 - I| entrywise.
SparseMatrix::Diff involution_defect(const WalkOperator& op) {
    const SparseMatrix m = op.to_matrix();
    return SparseMatrix::max_abs_diff(m * m, SparseMatrix::identity(op.dimension()));
}

}  // namespace

SuiteReport run_equivalence_suite(const Graph& g, const MarkedSet& marked, double tol,
                                  std::string graph_desc) {
    if (g.has_self_loop()) {
        throw std::invalid_argument("equivalence suite requires a loopless graph");
    }
    marked.require_within(g.vertex_count());
    const ArcBasis basis(g);

    SuiteReport suite;
    suite.graph_desc = graph_desc.empty() ? describe(g) : std::move(graph_desc);
    suite.marked = marked;
    suite.tolerance = tol;

    const WalkOperator coin = coin_grover(g, basis);
    const WalkOperator shift = shift_flipflop(basis);
    const WalkOperator r1 = szegedy_reflection(g, basis, ReflectionSide::X);
    const WalkOperator r2 = szegedy_reflection(g, basis, ReflectionSide::Y);
    const WalkOperator walk_w = walk_operator(WalkKind::szegedy_w, g, basis, marked);
    const WalkOperator walk_u = walk_operator(WalkKind::coined_u, g, basis, marked);

    auto add = [&suite](const char* name, ComparisonReport report) {
        report.name = name;
        suite.checks.push_back(std::move(report));
    };

    add("01_W_eq_U2", operator_equal(walk_w, compose({walk_u, walk_u}, "U^2"), tol));
    add("05_R1_eq_C", operator_equal(r1, coin, tol));
    add("06_R2_eq_SCS", operator_equal(r2, compose({shift, coin, shift}, "SCS"), tol));

    std::vector<const WalkOperator*> involutions = {&shift, &r1, &r2, &coin};
    std::vector<const WalkOperator*> orthogonals = {&shift, &r1, &r2, &coin, &walk_w, &walk_u};

    std::optional<WalkOperator> q, q1, q2, coin_skw, r1p, r2p;
    std::optional<WalkOperator> walk_wp, walk_uskw, walk_wq1, walk_scq, walk_wq2, walk_u2q;
    if (!marked.empty()) {
        q.emplace(oracle(basis, marked, OracleSide::tail).with_label("Q"));
        q1.emplace(oracle(basis, marked, OracleSide::tail));
        q2.emplace(oracle(basis, marked, OracleSide::head));
        coin_skw.emplace(coin_grover(g, basis, marked, MarkedCoin::negative_identity));
        r1p.emplace(szegedy_reflection(g, basis, ReflectionSide::X, marked));
        r2p.emplace(szegedy_reflection(g, basis, ReflectionSide::Y, marked));
        walk_wp.emplace(walk_operator(WalkKind::szegedy_wprime, g, basis, marked));
        walk_uskw.emplace(walk_operator(WalkKind::coined_uskw, g, basis, marked));
        walk_wq1.emplace(walk_operator(WalkKind::szegedy_wq1, g, basis, marked));
        walk_scq.emplace(walk_operator(WalkKind::coined_scq, g, basis, marked));
        walk_wq2.emplace(walk_operator(WalkKind::szegedy_wq2, g, basis, marked));
        walk_u2q.emplace(walk_operator(WalkKind::coined_u2q, g, basis, marked));

        add("02_Wprime_eq_USKW2",
            operator_equal(*walk_wp, compose({*walk_uskw, *walk_uskw}, "U_SKW^2"), tol));
        add("03_Wq1_eq_SCQ2",
            operator_equal(*walk_wq1, compose({*walk_scq, *walk_scq}, "(SCQ)^2"), tol));
        add("04_Wq2_eq_U2Q", operator_equal(*walk_wq2, *walk_u2q, tol));
        add("07_Q1_eq_Q", operator_equal(*q1, *q, tol));
        add("08_Q2_eq_SQS", operator_equal(*q2, compose({shift, *q, shift}, "SQS"), tol));
        add("09_Q1R1Q1_eq_R1", operator_equal(compose({*q1, r1, *q1}), r1, tol));

        for (const auto* op : {&*q1, &*q2, &*coin_skw, &*r1p, &*r2p}) involutions.push_back(op);
        for (const auto* op : {&*q1, &*q2, &*coin_skw, &*r1p, &*r2p, &*walk_wp, &*walk_uskw,
                               &*walk_wq1, &*walk_scq, &*walk_wq2, &*walk_u2q}) {
            orthogonals.push_back(op);
        }
    }

    {
        ComparisonReport unitary;
        unitary.label_a = "{A^2, A^T A : A constructed}";
        unitary.label_b = "I";
        unitary.tolerance = tol;
        for (const auto* op : involutions) {
            const auto d = involution_defect(*op);
            if (d.value > unitary.max_abs_diff) {
                unitary.max_abs_diff = d.value;
                unitary.worst_row = d.row;
                unitary.worst_col = d.col;
            }
        }
        for (const auto* op : orthogonals) {
            const auto d = op->to_matrix().orthogonality_defect();
            if (d.value > unitary.max_abs_diff) {
                unitary.max_abs_diff = d.value;
                unitary.worst_row = d.row;
                unitary.worst_col = d.col;
            }
        }
        unitary.passed = unitary.max_abs_diff < tol;
        add("10_unitary_involutions", std::move(unitary));
    }

    std::sort(suite.checks.begin(), suite.checks.end(),
              [](const ComparisonReport& a, const ComparisonReport& b) { return a.name < b.name; });
    suite.overall_pass = std::all_of(suite.checks.begin(), suite.checks.end(),
                                     [](const ComparisonReport& c) { return c.passed; });
    return suite;
}

namespace {

std::string format_double(double v, const char* fmt = "%.3e") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string marked_to_string(const MarkedSet& marked) {
    std::string out = "{";
    for (std::size_t i = 0; i < marked.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(marked.vertices()[i]);
    }
    return out + "}";
}

}  // namespace

std::string SuiteReport::to_text() const {
    std::string out;
    out += "graph: " + graph_desc + "\n";
    out += "marked: " + marked_to_string(marked) + "\n";
    out += "tolerance: " + format_double(tolerance, "%g") + "\n";
    for (const auto& check : checks) {
        out += check.passed ? "PASS  " : "FAIL  ";
        out += check.name;
        out.append(check.name.size() < 24 ? 24 - check.name.size() : 1, ' ');
        out += check.label_a + " vs " + check.label_b;
        out += "  max|diff|=" + format_double(check.max_abs_diff);
        if (!check.passed) {
            out += " at (" + std::to_string(check.worst_row) + "," +
                   std::to_string(check.worst_col) + ")";
        }
        out += "\n";
    }
    out += std::string("overall: ") + (overall_pass ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string SuiteReport::to_json_string() const {
    nlohmann::json doc;
    doc["graph"] = graph_desc;
    doc["marked"] = marked.vertices();
    doc["tolerance"] = tolerance;
    doc["overall_pass"] = overall_pass;
    doc["checks"] = nlohmann::json::array();
    for (const auto& check : checks) {
        doc["checks"].push_back({{"name", check.name},
                                 {"operator_a", check.label_a},
                                 {"operator_b", check.label_b},
                                 {"max_abs_diff", check.max_abs_diff},
                                 {"tolerance", check.tolerance},
                                 {"pass", check.passed}});
    }
    return doc.dump(2);
}

}  // namespace qwalk
