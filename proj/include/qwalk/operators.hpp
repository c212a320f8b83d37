// Walk operators over the arc basis, each built from its own definition:
// the Grover diffusion coin C, the flip-flop shift S, sign oracles Q, the
// Szegedy reflections R1/R2 (with and without absorbing marked vertices),
// and the composite walks assembled from them.
//
// An operator is a product of structured factors (sign diagonals, arc
// permutations, block reflections). Applying a factor to a state costs
// O(dimension), so composite walks evolve large graphs cheaply, while
// to_matrix() materializes the full sparse matrix whenever two operators
// have to be compared entry by entry.
#pragma once

#include "qwalk/arc_space.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/sparse.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qwalk {

enum class MarkedCoin { grover, negative_identity };
enum class OracleSide { tail, head };
enum class ReflectionSide { X, Y };

namespace detail {

// +-1 per arc (the Grover-type oracles).
struct SignDiagonal {
    std::vector<double> sign;
};

// x'[image[i]] = x[i] (the flip-flop shift).
struct ArcPermutation {
    std::vector<std::uint32_t> image;
};

// Disjoint groups of arc positions; each group is either inverted about its
// mean amplitude (c -> 2c̄ - c) or negated outright (-I block). Groups must
// partition [0, dim) and members are sorted within a group.
struct BlockReflection {
    std::vector<std::uint32_t> members;
    std::vector<std::size_t> group_start;  // group g: [start[g], start[g+1])
    std::vector<char> negate;
};

using Factor = std::variant<SignDiagonal, ArcPermutation, BlockReflection>;

}  // namespace detail

class WalkOperator {
public:
    std::size_t dimension() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }
    WalkOperator with_label(std::string label) const;

    StateVector apply(const StateVector& x) const;

    /// Applies the operator in place; scratch is resized as needed and may be
    /// reused across calls to avoid reallocation in evolution loops.
    void apply_in_place(StateVector& x, std::vector<double>& scratch) const;

    SparseMatrix to_matrix() const;
    std::size_t factor_count() const noexcept { return factors_.size(); }

private:
    WalkOperator(std::size_t dim, std::string label, std::vector<detail::Factor> factors)
        : factors_(std::move(factors)), dim_(dim), label_(std::move(label)) {}

    static void apply_factor(const detail::Factor& f, std::vector<double>& x,
                             std::vector<double>& scratch);
    static SparseMatrix factor_matrix(const detail::Factor& f, std::size_t dim);

    std::vector<detail::Factor> factors_;  // application order: factors_.front() acts first
    std::size_t dim_ = 0;
    std::string label_;

    friend WalkOperator coin_grover(const Graph&, const ArcBasis&,
                                    const std::optional<MarkedSet>&, MarkedCoin);
    friend WalkOperator shift_flipflop(const ArcBasis&);
    friend WalkOperator oracle(const ArcBasis&, const MarkedSet&, OracleSide);
    friend WalkOperator szegedy_reflection(const Graph&, const ArcBasis&, ReflectionSide,
                                           const std::optional<MarkedSet>&);
    friend WalkOperator compose(std::vector<WalkOperator>, std::string);
};

/// Grover diffusion coin: per vertex a, the block 2|s_a><s_a| - I over the
/// arcs leaving a (inversion about the mean of the coin amplitudes). With a
/// marked set and MarkedCoin::negative_identity, marked vertices get the -I
/// block instead (the SKW search coin); with MarkedCoin::grover the marked
/// set is ignored.
WalkOperator coin_grover(const Graph& g, const ArcBasis& basis,
                         const std::optional<MarkedSet>& marked = std::nullopt,
                         MarkedCoin marked_coin = MarkedCoin::grover);

/// Flip-flop shift: S|a,b> = |b,a|; self-loop arcs are fixed points.
WalkOperator shift_flipflop(const ArcBasis& basis);

/// Diagonal +-1 oracle: -1 exactly on arcs whose tail (resp. head) vertex is
/// marked. The tail side is the coined-walk query Q and Szegedy's Q1; the
/// head side is Szegedy's Q2.
WalkOperator oracle(const ArcBasis& basis, const MarkedSet& marked, OracleSide side);

/// Szegedy reflection built from the edge-superposition projectors: side X
/// reflects each vertex's X-incident edge amplitudes about their average
/// (2|phi_x><phi_x| - I), side Y does the same over Y-incident edges. With an
/// absorbing set, marked vertices instead flip the signs of all their
/// incident edges on that side. Requires a loopless graph.
WalkOperator szegedy_reflection(const Graph& g, const ArcBasis& basis, ReflectionSide side,
                                const std::optional<MarkedSet>& absorbing = std::nullopt);

/// Product of operators with the rightmost list element acting first, so
/// compose({R2, R1}) applies R1 and then R2, matching operator notation.
WalkOperator compose(std::vector<WalkOperator> ops, std::string label = "");

enum class WalkKind {
    szegedy_w,        // W  = R2 R1
    szegedy_wprime,   // W' = R2' R1'          (absorbing marked vertices)
    szegedy_wq1,      // Wq1 = R2 Q2 R1 Q1
    szegedy_wq2,      // Wq2 = R2 R1 Q1
    coined_u,         // U = S C
    coined_uskw,      // U_SKW = S (C unmarked, -I marked)
    coined_scq,       // S C Q
    coined_u2q,       // U^2 Q = S C S C Q
};

std::optional<WalkKind> walk_kind_from_name(std::string_view name);
std::string_view walk_kind_name(WalkKind kind);

/// True for the kinds that search (every kind except szegedy_w / coined_u);
/// those require a nonempty marked set.
bool walk_kind_searches(WalkKind kind);

/// Builds any of the walk operators from the module's constructors. Szegedy
/// kinds use szegedy_reflection and oracle, coined kinds use coin_grover,
/// shift_flipflop and oracle(tail). The marked set is ignored for szegedy_w
/// and coined_u and must be nonempty for the other kinds.
WalkOperator walk_operator(WalkKind kind, const Graph& g, const ArcBasis& basis,
                           const MarkedSet& marked);

}  // namespace qwalk
