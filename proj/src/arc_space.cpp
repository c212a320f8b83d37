#include "qwalk/arc_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

ArcBasis::ArcBasis(const Graph& g) {
    const std::size_t n = g.vertex_count();
    arcs_.reserve(g.degree_sum());
    tail_offset_.resize(n + 1, 0);
    for (Vertex a = 0; a < n; ++a) {
        tail_offset_[a] = arcs_.size();
        for (Vertex b : g.neighbors(a)) {
            arcs_.push_back(Arc{a, b});
        }
    }
    tail_offset_[n] = arcs_.size();
    reverse_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        reverse_[i] = static_cast<std::uint32_t>(index_of(Arc{arcs_[i].head, arcs_[i].tail}));
    }
}

std::size_t ArcBasis::index_of(Arc arc) const {
    if (arc.tail < vertex_count()) {
        const auto begin = arcs_.begin() + static_cast<std::ptrdiff_t>(tail_begin(arc.tail));
        const auto end = arcs_.begin() + static_cast<std::ptrdiff_t>(tail_end(arc.tail));
        const auto it = std::lower_bound(begin, end, arc.head,
                                         [](const Arc& a, Vertex h) { return a.head < h; });
        if (it != end && it->head == arc.head) {
            return static_cast<std::size_t>(it - arcs_.begin());
        }
    }
    throw std::invalid_argument("no arc (" + std::to_string(arc.tail) + "," +
                                std::to_string(arc.head) + ") in the basis");
}

double StateVector::norm() const {
    double s = 0.0;
    for (double a : amp_) s += a * a;
    return std::sqrt(s);
}

double distance(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("state dimension mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

StateVector uniform_state(const ArcBasis& basis, InitialState mode) {
    const std::size_t dim = basis.dimension();
    if (dim == 0) {
        throw std::invalid_argument("empty basis");
    }
    StateVector state(dim);
    if (mode == InitialState::arc_uniform) {
        const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
        for (std::size_t i = 0; i < dim; ++i) state[i] = amp;
    } else {
        const auto n = static_cast<double>(basis.vertex_count());
        for (Vertex a = 0; a < basis.vertex_count(); ++a) {
            const double amp = 1.0 / std::sqrt(n * static_cast<double>(basis.degree(a)));
            for (std::size_t i = basis.tail_begin(a); i < basis.tail_end(a); ++i) {
                state[i] = amp;
            }
        }
    }
    return state;
}

StateVector vertex_superposition(const ArcBasis& basis, Vertex a, SuperpositionSide side) {
    if (a >= basis.vertex_count()) {
        throw std::invalid_argument("vertex " + std::to_string(a) + " out of range");
    }
    StateVector state(basis.dimension());
    const double amp = 1.0 / std::sqrt(static_cast<double>(basis.degree(a)));
    for (std::size_t i = basis.tail_begin(a); i < basis.tail_end(a); ++i) {
        state[side == SuperpositionSide::outgoing ? i : basis.reverse_index(i)] = amp;
    }
    return state;
}

double marked_probability(const StateVector& state, const ArcBasis& basis,
                          const MarkedSet& marked, Measurement convention) {
    if (state.size() != basis.dimension()) {
        throw std::invalid_argument("state dimension mismatch");
    }
    marked.require_within(basis.vertex_count());
    std::vector<char> flag(basis.vertex_count(), 0);
    for (Vertex v : marked.vertices()) flag[v] = 1;
    double p = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Arc& arc = basis.arc(i);
        const bool hit = convention == Measurement::tail   ? flag[arc.tail]
                         : convention == Measurement::head ? flag[arc.head]
                                                           : (flag[arc.tail] || flag[arc.head]);
        if (hit) p += state[i] * state[i];
    }
    return p;
}

}  // namespace qwalk
