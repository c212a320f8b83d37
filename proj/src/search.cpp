#include "qwalk/search.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qwalk {

std::string Trajectory::to_csv() const {
    std::string out = "step,prob\n";
    char buf[64];
    for (std::size_t t = 0; t < probs.size(); ++t) {
        std::snprintf(buf, sizeof(buf), "%zu,%.12g\n", t, probs[t]);
        out += buf;
    }
    return out;
}

Trajectory evolve(const WalkOperator& op, const ArcBasis& basis, const StateVector& init,
                  std::size_t steps, const MarkedSet& marked, Measurement convention) {
    if (init.size() != op.dimension() || basis.dimension() != op.dimension()) {
        throw std::invalid_argument("dimension mismatch in evolve");
    }
    Trajectory traj;
    traj.convention = convention;
    traj.walk_label = op.label();
    traj.marked = marked;
    traj.probs.reserve(steps + 1);
    traj.probs.push_back(marked_probability(init, basis, marked, convention));
    StateVector state = init;
    std::vector<double> scratch;
    for (std::size_t t = 1; t <= steps; ++t) {
        op.apply_in_place(state, scratch);
        traj.probs.push_back(marked_probability(state, basis, marked, convention));
    }
    return traj;
}

Peak find_peak(const Trajectory& traj) {
    if (traj.probs.empty()) {
        throw std::invalid_argument("empty trajectory");
    }
    if (traj.probs.size() == 1) {
        return Peak{0.0, traj.probs[0]};
    }
    double best = traj.probs[1];
    for (std::size_t t = 2; t < traj.probs.size(); ++t) best = std::max(best, traj.probs[t]);
    for (std::size_t t = 1; t < traj.probs.size(); ++t) {
        if (traj.probs[t] >= best - 1e-9) {
            return Peak{static_cast<double>(t), best};
        }
    }
    return Peak{1.0, best};  // unreachable
}

Peak predicted_peak(WalkKind walk, std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("marked count k must satisfy 1 <= k <= n");
    }
    const double ratio = static_cast<double>(n) / static_cast<double>(k);
    switch (walk) {
        case WalkKind::szegedy_wprime:
            return Peak{std::numbers::pi / 4.0 * std::sqrt(ratio / 2.0), 0.5};
        case WalkKind::szegedy_wq2:
            return Peak{std::numbers::pi / 4.0 * std::sqrt(ratio), 1.0};
        default:
            throw std::invalid_argument(std::string("no closed-form peak for walk kind '") +
                                        std::string(walk_kind_name(walk)) + "'");
    }
}

ComparisonReport negligible_evolution_check(const Graph& g, const MarkedSet& marked,
                                            std::size_t steps, double bound) {
    if (marked.empty()) {
        throw std::invalid_argument(
            "negligible-evolution check needs at least one marked vertex");
    }
    if (g.has_self_loop()) {
        throw std::invalid_argument("negligible-evolution check needs a loopless graph");
    }
    marked.require_within(g.vertex_count());
    const ArcBasis basis(g);
    const WalkOperator op =
        compose({oracle(basis, marked, OracleSide::tail),
                 szegedy_reflection(g, basis, ReflectionSide::Y),
                 oracle(basis, marked, OracleSide::tail),
                 szegedy_reflection(g, basis, ReflectionSide::X)},
                "Q1R2Q1R1");
    const StateVector initial = uniform_state(basis, InitialState::arc_uniform);

    ComparisonReport report;
    report.name = "negligible_evolution";
    report.label_a = op.label() + " trajectory";
    report.label_b = "initial state";
    report.tolerance = bound;
    StateVector state = initial;
    std::vector<double> scratch;
    for (std::size_t t = 1; t <= steps; ++t) {
        op.apply_in_place(state, scratch);
        const double d = distance(state, initial);
        if (d > report.max_abs_diff) {
            report.max_abs_diff = d;
            report.worst_row = t;
        }
    }
    report.passed = report.max_abs_diff < bound;
    return report;
}

}  // namespace qwalk
