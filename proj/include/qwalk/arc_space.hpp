// The 2|E|-dimensional state space shared by both walk constructions: the
// directed-arc basis, real amplitude vectors over it, distinguished states,
// and marked-vertex measurement.
#pragma once

#include "qwalk/graph.hpp"

#include <cstdint>
#include <vector>

namespace qwalk {

/// Directed arc (tail, head); simultaneously the Szegedy edge state and the
/// coined state "particle at tail pointing at head".
struct Arc {
    Vertex tail;
    Vertex head;
    bool operator==(const Arc&) const = default;
};

/// Ordered basis of all arcs of a graph: one arc per direction of each edge
/// plus one arc (a,a) per self-loop, so the dimension is the degree sum
/// (2|E| for loopless graphs). Arcs are grouped by tail vertex with heads in
/// sorted order inside each group, which makes every coin block contiguous.
class ArcBasis {
public:
    explicit ArcBasis(const Graph& g);

    std::size_t dimension() const noexcept { return arcs_.size(); }
    std::size_t vertex_count() const noexcept { return tail_offset_.size() - 1; }
    const Arc& arc(std::size_t index) const { return arcs_.at(index); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    /// Position of an arc in the basis; throws std::invalid_argument if the
    /// arc does not exist in the underlying graph.
    std::size_t index_of(Arc arc) const;

    /// Position of the reversed arc (the flip-flop partner); a self-loop arc
    /// is its own reverse.
    std::size_t reverse_index(std::size_t index) const { return reverse_.at(index); }

    // Contiguous tail group [tail_begin(a), tail_end(a)): all arcs leaving a.
    std::size_t tail_begin(Vertex a) const { return tail_offset_.at(a); }
    std::size_t tail_end(Vertex a) const { return tail_offset_.at(a + 1); }
    std::size_t degree(Vertex a) const { return tail_end(a) - tail_begin(a); }

private:
    std::vector<Arc> arcs_;
    std::vector<std::size_t> tail_offset_;   // vertex_count + 1 entries
    std::vector<std::uint32_t> reverse_;
};

/// Real amplitude vector over an arc basis.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amp_(dim, 0.0) {}

    std::size_t size() const noexcept { return amp_.size(); }
    double operator[](std::size_t i) const { return amp_[i]; }
    double& operator[](std::size_t i) { return amp_[i]; }
    std::vector<double>& data() noexcept { return amp_; }
    const std::vector<double>& data() const noexcept { return amp_; }

    double norm() const;

    bool operator==(const StateVector&) const = default;

private:
    std::vector<double> amp_;
};

/// Euclidean distance ||a - b||.
double distance(const StateVector& a, const StateVector& b);

enum class InitialState {
    arc_uniform,     // amplitude 1/sqrt(dim) on every arc
    vertex_uniform,  // amplitude 1/sqrt(N*deg(a)) on each arc leaving a
};

StateVector uniform_state(const ArcBasis& basis, InitialState mode);

enum class SuperpositionSide { outgoing, incoming };

/// Equal superposition of the arcs leaving (outgoing) or entering (incoming)
/// vertex a: amplitude 1/sqrt(deg(a)) on each, zero elsewhere.
StateVector vertex_superposition(const ArcBasis& basis, Vertex a, SuperpositionSide side);

enum class Measurement { tail, head, either };

/// Probability mass of a state on arcs whose tail (resp. head, resp. either
/// endpoint) is marked. The tail convention is vertex occupancy in the
/// coined picture.
double marked_probability(const StateVector& state, const ArcBasis& basis,
                          const MarkedSet& marked, Measurement convention);

}  // namespace qwalk
