// Search dynamics: evolve a walk operator from an initial state, record the
// success probability per step, locate peaks, and evaluate the closed-form
// peak predictions for the complete graph.
#pragma once

#include "qwalk/arc_space.hpp"
#include "qwalk/equivalence.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"

#include <string>
#include <vector>

namespace qwalk {

struct Trajectory {
    std::vector<double> probs;  // probs[t] = success probability after t steps
    Measurement convention = Measurement::tail;
    std::string walk_label;
    MarkedSet marked;

    std::size_t steps() const noexcept { return probs.empty() ? 0 : probs.size() - 1; }
    std::string to_csv() const;  // "step,prob" header then one row per step
};

struct Peak {
    double t_star = 0.0;  // integer-valued for simulated peaks, real for predictions
    double p_star = 0.0;
};

/// Applies op iteratively steps times, measuring the marked probability after
/// every application (probs[0] is the initial state's).
Trajectory evolve(const WalkOperator& op, const ArcBasis& basis, const StateVector& init,
                  std::size_t steps, const MarkedSet& marked, Measurement convention);

/// Highest probability at any t >= 1 and the first step attaining it to
/// within 1e-9. A single-entry trajectory peaks at t = 0 by convention.
Peak find_peak(const Trajectory& traj);

/// Closed-form peak for searching the complete graph of n vertices with k
/// marked: szegedy_wprime reaches p* = 1/2 at t* = (pi/4) sqrt(n/2k), and
/// szegedy_wq2 reaches p* = 1 at t* = (pi/4) sqrt(n/k). Other walk kinds have
/// no tabulated closed form and are rejected.
Peak predicted_peak(WalkKind walk, std::size_t n, std::size_t k);

/// Regression bound for negligible_evolution_check: twice the maximum state
/// deviation observed when running Q1 R2 Q1 R1 on the complete graph with
/// N=64, one marked vertex, for 100 steps from the arc-uniform state
/// (observed 0.496021, a bounded oscillation; a walk that actually searches
/// moves the state by ~sqrt(2) at its peak).
inline constexpr double negligible_evolution_bound = 0.992042;

/// Evolves Q1 R2 Q1 R1 from the arc-uniform state and reports the maximum
/// over t <= steps of ||state_t - state_0||. This composite fails to search;
/// the check regresses how far it drifts from the initial state.
ComparisonReport negligible_evolution_check(const Graph& g, const MarkedSet& marked,
                                            std::size_t steps,
                                            double bound = negligible_evolution_bound);

}  // namespace qwalk
