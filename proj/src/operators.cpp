#include "qwalk/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qwalk {

WalkOperator WalkOperator::with_label(std::string label) const {
    WalkOperator copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

StateVector WalkOperator::apply(const StateVector& x) const {
    StateVector y = x;
    std::vector<double> scratch;
    apply_in_place(y, scratch);
    return y;
}

void WalkOperator::apply_in_place(StateVector& x, std::vector<double>& scratch) const {
    if (x.size() != dim_) {
        throw std::invalid_argument("state dimension mismatch for operator " + label_);
    }
    for (const detail::Factor& f : factors_) {
        apply_factor(f, x.data(), scratch);
    }
}

void WalkOperator::apply_factor(const detail::Factor& f, std::vector<double>& x,
                                std::vector<double>& scratch) {
    if (const auto* d = std::get_if<detail::SignDiagonal>(&f)) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] *= d->sign[i];
    } else if (const auto* p = std::get_if<detail::ArcPermutation>(&f)) {
        scratch.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) scratch[p->image[i]] = x[i];
        x.swap(scratch);
    } else {
        const auto& blocks = std::get<detail::BlockReflection>(f);
        const std::size_t group_count = blocks.group_start.size() - 1;
        for (std::size_t g = 0; g < group_count; ++g) {
            const std::size_t begin = blocks.group_start[g];
            const std::size_t end = blocks.group_start[g + 1];
            if (blocks.negate[g]) {
                for (std::size_t k = begin; k < end; ++k) {
                    x[blocks.members[k]] = -x[blocks.members[k]];
                }
            } else {
                double sum = 0.0;
                for (std::size_t k = begin; k < end; ++k) sum += x[blocks.members[k]];
                const double twice_mean = 2.0 * sum / static_cast<double>(end - begin);
                for (std::size_t k = begin; k < end; ++k) {
                    x[blocks.members[k]] = twice_mean - x[blocks.members[k]];
                }
            }
        }
    }
}

SparseMatrix WalkOperator::factor_matrix(const detail::Factor& f, std::size_t dim) {
    std::vector<std::size_t> row_start(dim + 1, 0);
    std::vector<std::uint32_t> col;
    std::vector<double> val;
    if (const auto* d = std::get_if<detail::SignDiagonal>(&f)) {
        col.resize(dim);
        val.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            row_start[i] = i;
            col[i] = static_cast<std::uint32_t>(i);
            val[i] = d->sign[i];
        }
        row_start[dim] = dim;
    } else if (const auto* p = std::get_if<detail::ArcPermutation>(&f)) {
        // Row image[i] has its single 1 in column i.
        std::vector<std::uint32_t> preimage(dim);
        for (std::size_t i = 0; i < dim; ++i) preimage[p->image[i]] = static_cast<std::uint32_t>(i);
        col.resize(dim);
        val.assign(dim, 1.0);
        for (std::size_t r = 0; r < dim; ++r) {
            row_start[r] = r;
            col[r] = preimage[r];
        }
        row_start[dim] = dim;
    } else {
        const auto& blocks = std::get<detail::BlockReflection>(f);
        // Row r belongs to exactly one group; emit rows in index order.
        std::vector<std::uint32_t> group_of(dim);
        const std::size_t group_count = blocks.group_start.size() - 1;
        for (std::size_t g = 0; g < group_count; ++g) {
            for (std::size_t k = blocks.group_start[g]; k < blocks.group_start[g + 1]; ++k) {
                group_of[blocks.members[k]] = static_cast<std::uint32_t>(g);
            }
        }
        for (std::size_t r = 0; r < dim; ++r) {
            const std::size_t g = group_of[r];
            const std::size_t begin = blocks.group_start[g];
            const std::size_t end = blocks.group_start[g + 1];
            if (blocks.negate[g]) {
                col.push_back(static_cast<std::uint32_t>(r));
                val.push_back(-1.0);
            } else {
                const double off_diag = 2.0 / static_cast<double>(end - begin);
                for (std::size_t k = begin; k < end; ++k) {
                    col.push_back(blocks.members[k]);
                    val.push_back(blocks.members[k] == r ? off_diag - 1.0 : off_diag);
                }
            }
            row_start[r + 1] = col.size();
        }
    }
    return SparseMatrix::from_csr(dim, std::move(row_start), std::move(col), std::move(val));
}

SparseMatrix WalkOperator::to_matrix() const {
    SparseMatrix m = factor_matrix(factors_.front(), dim_);
    for (std::size_t i = 1; i < factors_.size(); ++i) {
        m = factor_matrix(factors_[i], dim_) * m;
    }
    return m;
}

namespace {

void require_matching(const Graph& g, const ArcBasis& basis) {
    if (g.vertex_count() != basis.vertex_count() || g.degree_sum() != basis.dimension()) {
        throw std::invalid_argument("graph and arc basis do not match");
    }
}

// Tail groups are contiguous runs in the basis ordering.
detail::BlockReflection tail_blocks(const ArcBasis& basis) {
    detail::BlockReflection blocks;
    const std::size_t dim = basis.dimension();
    blocks.members.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) blocks.members[i] = static_cast<std::uint32_t>(i);
    blocks.group_start.resize(basis.vertex_count() + 1);
    for (Vertex a = 0; a <= basis.vertex_count(); ++a) {
        blocks.group_start[a] = a < basis.vertex_count() ? basis.tail_begin(a) : dim;
    }
    blocks.negate.assign(basis.vertex_count(), 0);
    return blocks;
}

}  // namespace

WalkOperator coin_grover(const Graph& g, const ArcBasis& basis,
                         const std::optional<MarkedSet>& marked, MarkedCoin marked_coin) {
    require_matching(g, basis);
    auto blocks = tail_blocks(basis);
    std::string label = "C";
    if (marked && marked_coin == MarkedCoin::negative_identity) {
        marked->require_within(basis.vertex_count());
        for (Vertex v : marked->vertices()) blocks.negate[v] = 1;
        label = "C_skw";
    }
    std::vector<detail::Factor> factors;
    factors.emplace_back(std::move(blocks));
    return WalkOperator(basis.dimension(), std::move(label), std::move(factors));
}

WalkOperator shift_flipflop(const ArcBasis& basis) {
    detail::ArcPermutation perm;
    perm.image.resize(basis.dimension());
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        perm.image[i] = static_cast<std::uint32_t>(basis.reverse_index(i));
    }
    std::vector<detail::Factor> factors;
    factors.emplace_back(std::move(perm));
    return WalkOperator(basis.dimension(), "S", std::move(factors));
}

WalkOperator oracle(const ArcBasis& basis, const MarkedSet& marked, OracleSide side) {
    marked.require_within(basis.vertex_count());
    detail::SignDiagonal diag;
    diag.sign.resize(basis.dimension());
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const Arc& arc = basis.arc(i);
        const Vertex v = side == OracleSide::tail ? arc.tail : arc.head;
        diag.sign[i] = marked.contains(v) ? -1.0 : 1.0;
    }
    std::vector<detail::Factor> factors;
    factors.emplace_back(std::move(diag));
    return WalkOperator(basis.dimension(), side == OracleSide::tail ? "Q1" : "Q2",
                        std::move(factors));
}

WalkOperator szegedy_reflection(const Graph& g, const ArcBasis& basis, ReflectionSide side,
                                const std::optional<MarkedSet>& absorbing) {
    require_matching(g, basis);
    if (g.has_self_loop()) {
        throw std::invalid_argument(
            "Szegedy reflections are defined on loopless graphs only");
    }
    // Group the edge states |x,y> by their X endpoint (side X) or Y endpoint
    // (side Y); under the arc encoding these are the tail and head vertices.
    const std::size_t dim = basis.dimension();
    const std::size_t n = basis.vertex_count();
    std::vector<std::size_t> count(n, 0);
    auto endpoint = [&](std::size_t i) {
        const Arc& arc = basis.arc(i);
        return side == ReflectionSide::X ? arc.tail : arc.head;
    };
    for (std::size_t i = 0; i < dim; ++i) ++count[endpoint(i)];
    detail::BlockReflection blocks;
    blocks.group_start.resize(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) blocks.group_start[v + 1] = blocks.group_start[v] + count[v];
    blocks.members.resize(dim);
    std::vector<std::size_t> next(blocks.group_start.begin(), blocks.group_start.end() - 1);
    for (std::size_t i = 0; i < dim; ++i) {
        blocks.members[next[endpoint(i)]++] = static_cast<std::uint32_t>(i);
    }
    blocks.negate.assign(n, 0);
    std::string label = side == ReflectionSide::X ? "R1" : "R2";
    if (absorbing) {
        absorbing->require_within(n);
        for (Vertex v : absorbing->vertices()) blocks.negate[v] = 1;
        label += "'";
    }
    std::vector<detail::Factor> factors;
    factors.emplace_back(std::move(blocks));
    return WalkOperator(dim, std::move(label), std::move(factors));
}

WalkOperator compose(std::vector<WalkOperator> ops, std::string label) {
    if (ops.empty()) {
        throw std::invalid_argument("compose needs at least one operator");
    }
    const std::size_t dim = ops.front().dimension();
    for (const auto& op : ops) {
        if (op.dimension() != dim) {
            throw std::invalid_argument("operator dimension mismatch in compose");
        }
    }
    if (label.empty()) {
        for (const auto& op : ops) {
            if (!label.empty()) label += "*";
            label += op.label();
        }
    }
    std::vector<detail::Factor> factors;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        for (auto& f : it->factors_) factors.push_back(std::move(f));
    }
    return WalkOperator(dim, std::move(label), std::move(factors));
}

std::optional<WalkKind> walk_kind_from_name(std::string_view name) {
    if (name == "w") return WalkKind::szegedy_w;
    if (name == "wprime") return WalkKind::szegedy_wprime;
    if (name == "wq1") return WalkKind::szegedy_wq1;
    if (name == "wq2") return WalkKind::szegedy_wq2;
    if (name == "u") return WalkKind::coined_u;
    if (name == "uskw") return WalkKind::coined_uskw;
    if (name == "scq") return WalkKind::coined_scq;
    if (name == "u2q") return WalkKind::coined_u2q;
    return std::nullopt;
}

std::string_view walk_kind_name(WalkKind kind) {
    switch (kind) {
        case WalkKind::szegedy_w: return "w";
        case WalkKind::szegedy_wprime: return "wprime";
        case WalkKind::szegedy_wq1: return "wq1";
        case WalkKind::szegedy_wq2: return "wq2";
        case WalkKind::coined_u: return "u";
        case WalkKind::coined_uskw: return "uskw";
        case WalkKind::coined_scq: return "scq";
        case WalkKind::coined_u2q: return "u2q";
    }
    return "?";
}

bool walk_kind_searches(WalkKind kind) {
    return kind != WalkKind::szegedy_w && kind != WalkKind::coined_u;
}

WalkOperator walk_operator(WalkKind kind, const Graph& g, const ArcBasis& basis,
                           const MarkedSet& marked) {
    // Validate everything up front so no constructor throws from inside the
    // braced operator lists below (gcc fails to destroy earlier list
    // elements on such a throw and leaks them).
    require_matching(g, basis);
    marked.require_within(g.vertex_count());
    if (walk_kind_searches(kind) && marked.empty()) {
        throw std::invalid_argument(std::string("walk kind '") +
                                    std::string(walk_kind_name(kind)) +
                                    "' searches and needs a nonempty marked set");
    }
    const bool szegedy_side = kind == WalkKind::szegedy_w || kind == WalkKind::szegedy_wprime ||
                              kind == WalkKind::szegedy_wq1 || kind == WalkKind::szegedy_wq2;
    if (szegedy_side && g.has_self_loop()) {
        throw std::invalid_argument(
            "Szegedy walk kinds are defined on loopless graphs only");
    }
    switch (kind) {
        case WalkKind::szegedy_w:
            return compose({szegedy_reflection(g, basis, ReflectionSide::Y),
                            szegedy_reflection(g, basis, ReflectionSide::X)},
                           "W");
        case WalkKind::szegedy_wprime:
            return compose({szegedy_reflection(g, basis, ReflectionSide::Y, marked),
                            szegedy_reflection(g, basis, ReflectionSide::X, marked)},
                           "W'");
        case WalkKind::szegedy_wq1:
            return compose({szegedy_reflection(g, basis, ReflectionSide::Y),
                            oracle(basis, marked, OracleSide::head),
                            szegedy_reflection(g, basis, ReflectionSide::X),
                            oracle(basis, marked, OracleSide::tail)},
                           "Wq1");
        case WalkKind::szegedy_wq2:
            return compose({szegedy_reflection(g, basis, ReflectionSide::Y),
                            szegedy_reflection(g, basis, ReflectionSide::X),
                            oracle(basis, marked, OracleSide::tail)},
                           "Wq2");
        case WalkKind::coined_u:
            return compose({shift_flipflop(basis), coin_grover(g, basis)}, "U");
        case WalkKind::coined_uskw:
            return compose({shift_flipflop(basis),
                            coin_grover(g, basis, marked, MarkedCoin::negative_identity)},
                           "U_SKW");
        case WalkKind::coined_scq:
            return compose({shift_flipflop(basis), coin_grover(g, basis),
                            oracle(basis, marked, OracleSide::tail).with_label("Q")},
                           "SCQ");
        case WalkKind::coined_u2q:
            return compose({shift_flipflop(basis), coin_grover(g, basis), shift_flipflop(basis),
                            coin_grover(g, basis),
                            oracle(basis, marked, OracleSide::tail).with_label("Q")},
                           "U2Q");
    }
    throw std::invalid_argument("unknown walk kind");
}

}  // namespace qwalk
