#include "qwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace qwalk {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Graph::Graph(std::size_t vertex_count,
             const std::vector<std::pair<Vertex, Vertex>>& edges,
             bool allow_self_loops) {
    if (vertex_count == 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    adj_.resize(vertex_count);
    for (const auto& [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw std::invalid_argument("edge endpoint " + std::to_string(std::max(a, b)) +
                                        " out of range [0, " + std::to_string(vertex_count) + ")");
        }
        if (a == b) {
            if (!allow_self_loops) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(a) +
                                            " not allowed here");
            }
            adj_[a].push_back(a);
            ++loop_count_;
        } else {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        ++edge_count_;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
        }
        if (nb.empty()) {
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is isolated; every vertex needs degree >= 1");
        }
        max_degree_ = std::max(max_degree_, nb.size());
        degree_sum_ += nb.size();
    }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

MarkedSet::MarkedSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool MarkedSet::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

void MarkedSet::require_within(std::size_t vertex_count) const {
    if (!vertices_.empty() && vertices_.back() >= vertex_count) {
        throw std::invalid_argument("marked vertex " + std::to_string(vertices_.back()) +
                                    " out of range [0, " + std::to_string(vertex_count) + ")");
    }
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "complete") return Family::complete;
    if (name == "complete_loops") return Family::complete_loops;
    if (name == "cycle") return Family::cycle;
    if (name == "torus2d") return Family::torus2d;
    if (name == "hypercube") return Family::hypercube;
    if (name == "paley") return Family::paley;
    if (name == "petersen") return Family::petersen;
    return std::nullopt;
}

std::string_view family_name(Family family) {
    switch (family) {
        case Family::complete: return "complete";
        case Family::complete_loops: return "complete_loops";
        case Family::cycle: return "cycle";
        case Family::torus2d: return "torus2d";
        case Family::hypercube: return "hypercube";
        case Family::paley: return "paley";
        case Family::petersen: return "petersen";
    }
    return "?";
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_complete(long n, bool loops) {
    if (n < 2) {
        throw std::invalid_argument("complete graph requires n >= 2");
    }
    EdgeList edges;
    for (Vertex a = 0; a + 1 < static_cast<Vertex>(n); ++a) {
        for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
            edges.emplace_back(a, b);
        }
    }
    if (loops) {
        for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
            edges.emplace_back(a, a);
        }
    }
    return Graph(static_cast<std::size_t>(n), edges, loops);
}

Graph make_cycle(long n) {
    if (n < 3) {
        throw std::invalid_argument("cycle requires n >= 3");
    }
    EdgeList edges;
    for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
        edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph make_torus2d(long side) {
    if (side < 3) {
        throw std::invalid_argument("torus2d requires side >= 3");
    }
    const auto s = static_cast<Vertex>(side);
    EdgeList edges;
    for (Vertex r = 0; r < s; ++r) {
        for (Vertex c = 0; c < s; ++c) {
            const Vertex v = r * s + c;
            edges.emplace_back(v, r * s + (c + 1) % s);
            edges.emplace_back(v, ((r + 1) % s) * s + c);
        }
    }
    return Graph(static_cast<std::size_t>(side) * side, edges);
}

Graph make_hypercube(long d) {
    if (d < 1 || d > 30) {
        throw std::invalid_argument("hypercube requires dimension between 1 and 30");
    }
    const std::size_t n = std::size_t{1} << d;
    EdgeList edges;
    for (std::size_t v = 0; v < n; ++v) {
        for (long i = 0; i < d; ++i) {
            const std::size_t u = v ^ (std::size_t{1} << i);
            if (u > v) {
                edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(u));
            }
        }
    }
    return Graph(n, edges);
}

bool is_prime(long q) {
    if (q < 2) return false;
    for (long f = 2; f * f <= q; ++f) {
        if (q % f == 0) return false;
    }
    return true;
}

Graph make_paley(long q) {
    if (q % 4 != 1 || !is_prime(q)) {
        throw std::invalid_argument("paley requires a prime q with q = 1 mod 4");
    }
    // Quadratic residues mod q; since q = 1 mod 4, -1 is a residue and the
    // relation x ~ y iff x - y is a nonzero residue is symmetric.
    std::vector<char> residue(static_cast<std::size_t>(q), 0);
    for (long x = 1; x < q; ++x) {
        residue[static_cast<std::size_t>((x * x) % q)] = 1;
    }
    EdgeList edges;
    for (Vertex a = 0; a + 1 < static_cast<Vertex>(q); ++a) {
        for (Vertex b = a + 1; b < static_cast<Vertex>(q); ++b) {
            if (residue[b - a]) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph(static_cast<std::size_t>(q), edges);
}

Graph make_petersen() {
    EdgeList edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);              // outer cycle
        edges.emplace_back(i, i + 5);                    // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);      // inner pentagram
    }
    return Graph(10, edges);
}

}  // namespace

Graph generate(Family family, long param) {
    switch (family) {
        case Family::complete: return make_complete(param, false);
        case Family::complete_loops: return make_complete(param, true);
        case Family::cycle: return make_cycle(param);
        case Family::torus2d: return make_torus2d(param);
        case Family::hypercube: return make_hypercube(param);
        case Family::paley: return make_paley(param);
        case Family::petersen: return make_petersen();
    }
    throw std::invalid_argument("unknown graph family");
}

Graph bipartite_double_cover(const Graph& g) {
    if (g.has_self_loop()) {
        throw std::invalid_argument(
            "bipartite double cover is not defined for graphs with self-loops");
    }
    const std::size_t n = g.vertex_count();
    EdgeList edges;
    edges.reserve(2 * g.edge_count());
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : g.neighbors(x)) {
            if (y > x) {
                edges.emplace_back(x, static_cast<Vertex>(y + n));
                edges.emplace_back(y, static_cast<Vertex>(x + n));
            }
        }
    }
    return Graph(2 * n, edges);
}

namespace {

Vertex parse_vertex(const std::string& token, std::size_t line) {
    Vertex v{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, "expected a nonnegative vertex index, got '" + token + "'");
    }
    return v;
}

}  // namespace

Graph from_edge_list(std::istream& in, bool allow_self_loops) {
    EdgeList edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    Vertex max_index = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string tok_a, tok_b, extra;
        if (!(fields >> tok_a) || tok_a.front() == '#') {
            continue;  // blank or comment line
        }
        if (!(fields >> tok_b)) {
            throw ParseError(line_no, "expected two vertex indices");
        }
        if (fields >> extra) {
            throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
        }
        const Vertex a = parse_vertex(tok_a, line_no);
        const Vertex b = parse_vertex(tok_b, line_no);
        if (a == b && !allow_self_loops) {
            throw ParseError(line_no, "self-loop " + std::to_string(a) + "-" + std::to_string(b));
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        }
        edges.emplace_back(a, b);
        max_index = std::max({max_index, a, b});
    }
    if (edges.empty()) {
        throw ParseError(0, "edge list contains no edges");
    }
    return Graph(static_cast<std::size_t>(max_index) + 1, edges, allow_self_loops);
}

Graph from_edge_list(std::string_view text, bool allow_self_loops) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in, allow_self_loops);
}

std::string export_graph(const Graph& g, GraphFormat format) {
    // Adjacency lists are sorted, so walking tails in order yields the
    // canonical lexicographic (min,max) ordering directly.
    std::string out;
    if (format == GraphFormat::dot) {
        out += "graph G {\n";
    }
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b : g.neighbors(a)) {
            if (b < a) continue;
            if (format == GraphFormat::edge_list) {
                out += std::to_string(a) + " " + std::to_string(b) + "\n";
            } else {
                out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
            }
        }
    }
    if (format == GraphFormat::dot) {
        out += "}\n";
    }
    return out;
}

std::string describe(const Graph& g) {
    return "N=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count());
}

}  // namespace qwalk
