// Undirected simple graphs: construction and validation, standard families,
// the bipartite double cover, and edge-list / DOT text formats.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::uint32_t;

/// Malformed edge-list input. line() is 1-based; 0 when no single line is at fault.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable undirected graph with sorted adjacency lists.
///
/// Every vertex must have degree >= 1 (the walk operators divide by the
/// degree). A self-loop is stored once in its own adjacency list and
/// contributes one to the degree, so degree_sum() == 2*edge_count() holds
/// exactly when the graph is loopless.
class Graph {
public:
    /// Builds the graph from undirected edges, each listed once in either
    /// orientation. Throws std::invalid_argument on out-of-range endpoints,
    /// duplicate edges, disallowed self-loops, or isolated vertices.
    Graph(std::size_t vertex_count,
          const std::vector<std::pair<Vertex, Vertex>>& edges,
          bool allow_self_loops = false);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t degree_sum() const noexcept { return degree_sum_; }
    bool has_self_loop() const noexcept { return loop_count_ > 0; }
    bool adjacent(Vertex a, Vertex b) const;

    bool operator==(const Graph& other) const noexcept { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
    std::size_t loop_count_ = 0;
    std::size_t max_degree_ = 0;
    std::size_t degree_sum_ = 0;
};

/// Set of marked (searched-for) vertices. May be empty.
class MarkedSet {
public:
    MarkedSet() = default;
    explicit MarkedSet(std::vector<Vertex> vertices);  // sorts and deduplicates

    bool contains(Vertex v) const;
    bool empty() const noexcept { return vertices_.empty(); }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    /// Throws std::invalid_argument if any vertex is >= vertex_count.
    void require_within(std::size_t vertex_count) const;

private:
    std::vector<Vertex> vertices_;
};

enum class Family { complete, complete_loops, cycle, torus2d, hypercube, paley, petersen };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);

/// Builds a standard graph. The parameter is the vertex count for complete,
/// complete_loops (one loop per vertex) and cycle, the side length for
/// torus2d, the dimension for hypercube, and the prime field size for paley
/// (q prime, q = 1 mod 4); petersen takes no parameter.
Graph generate(Family family, long param = 0);

/// Tensor product with a single edge: vertices 0..N-1 form copy X,
/// N..2N-1 copy Y, and (x, y+N) is an edge iff {x,y} is one in g.
/// The result has exactly twice as many edges as g. Rejects self-loops.
Graph bipartite_double_cover(const Graph& g);

/// Parses whitespace-separated "u v" pairs, one edge per line, '#' comments,
/// 0-based indices. Throws ParseError on malformed lines, duplicate edges and
/// (unless allowed) self-loops; std::invalid_argument on isolated vertices.
Graph from_edge_list(std::istream& in, bool allow_self_loops = false);
Graph from_edge_list(std::string_view text, bool allow_self_loops = false);

enum class GraphFormat { edge_list, dot };

/// edge_list: canonical "(min max)" pairs sorted lexicographically, one per
/// line; round-trips through from_edge_list. dot: undirected DOT source.
std::string export_graph(const Graph& g, GraphFormat format);

/// Short human-readable summary, e.g. "N=4 |E|=4".
std::string describe(const Graph& g);

}  // namespace qwalk
