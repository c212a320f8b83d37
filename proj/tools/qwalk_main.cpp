// qwalk command-line front end.
//
// Subcommands:
//   graph gen / graph bdc  -- emit graphs as edge lists or DOT
//   verify                 -- run the operator-identity suite (exit 1 on failure)
//   search                 -- CSV success-probability trajectory
//   peak                   -- simulated and/or predicted success peaks
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or input
// error. Output is deterministic; no randomness is used anywhere.
#include "qwalk/equivalence.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/search.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

struct GraphSource {
    std::string input_path;
    std::string family;
    long param = -1;
    bool allow_loops = false;
};

void add_graph_source_flags(CLI::App* cmd, GraphSource& src, bool with_input = true) {
    if (with_input) {
        cmd->add_option("--input", src.input_path, "edge-list file to read");
        cmd->add_flag("--allow-loops", src.allow_loops, "accept self-loop lines in --input");
    }
    cmd->add_option("--family", src.family,
                    "graph family: complete, complete_loops, cycle, torus2d, hypercube, "
                    "paley, petersen");
    cmd->add_option("--n", src.param,
                    "family parameter (vertex count, grid side, dimension, or prime q)");
}

qwalk::Graph load_graph(const GraphSource& src, std::string& desc) {
    if (!src.input_path.empty() && !src.family.empty()) {
        throw std::invalid_argument("give either --input or --family, not both");
    }
    if (!src.input_path.empty()) {
        std::ifstream in(src.input_path);
        if (!in) {
            throw std::invalid_argument("cannot open '" + src.input_path + "'");
        }
        desc = src.input_path;
        return qwalk::from_edge_list(in, src.allow_loops);
    }
    if (src.family.empty()) {
        throw std::invalid_argument("a graph is required: --input FILE or --family NAME");
    }
    const auto family = qwalk::family_from_name(src.family);
    if (!family) {
        throw std::invalid_argument("unknown family '" + src.family + "'");
    }
    if (*family != qwalk::Family::petersen && src.param < 0) {
        throw std::invalid_argument("--n is required for family '" + src.family + "'");
    }
    desc = src.family;
    if (*family != qwalk::Family::petersen) {
        desc += "(n=" + std::to_string(src.param) + ")";
    }
    return qwalk::generate(*family, src.param);
}

qwalk::MarkedSet parse_marked(const std::string& list) {
    std::vector<qwalk::Vertex> vertices;
    std::size_t pos = 0;
    while (pos < list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        const std::string token = list.substr(pos, comma - pos);
        qwalk::Vertex v{};
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad marked vertex '" + token + "'");
        }
        vertices.push_back(v);
        pos = comma + 1;
    }
    return qwalk::MarkedSet(vertices);
}

qwalk::WalkKind parse_walk(const std::string& name) {
    const auto kind = qwalk::walk_kind_from_name(name);
    if (!kind) {
        throw std::invalid_argument("unknown walk kind '" + name +
                                    "' (expected w, wprime, wq1, wq2, u, uskw, scq, u2q)");
    }
    return *kind;
}

qwalk::Measurement parse_convention(const std::string& name) {
    if (name == "tail") return qwalk::Measurement::tail;
    if (name == "head") return qwalk::Measurement::head;
    if (name == "either") return qwalk::Measurement::either;
    throw std::invalid_argument("unknown measurement convention '" + name + "'");
}

qwalk::InitialState parse_init(const std::string& name) {
    if (name == "arc_uniform") return qwalk::InitialState::arc_uniform;
    if (name == "vertex_uniform") return qwalk::InitialState::vertex_uniform;
    throw std::invalid_argument("unknown initial state '" + name + "'");
}

nlohmann::json peak_record(const std::string& walk, std::size_t n, std::size_t k) {
    return {{"walk", walk}, {"n", n}, {"k", k}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Szegedy and coined quantum walks: construction, equivalence checks, search"};
    app.require_subcommand(1);
    std::function<int()> run;

    // graph gen / graph bdc
    auto* graph_cmd = app.add_subcommand("graph", "emit graphs");
    graph_cmd->require_subcommand(1);
    GraphSource gen_src;
    std::string gen_format = "edge_list";
    auto* gen = graph_cmd->add_subcommand("gen", "generate a standard-family graph");
    add_graph_source_flags(gen, gen_src, /*with_input=*/false);
    gen->add_option("--format", gen_format, "edge_list or dot");
    gen->callback([&] {
        run = [&]() -> int {
            if (gen_format != "dot" && gen_format != "edge_list") {
                throw std::invalid_argument("unknown format '" + gen_format + "'");
            }
            std::string desc;
            const auto g = load_graph(gen_src, desc);
            const auto format = gen_format == "dot" ? qwalk::GraphFormat::dot
                                                    : qwalk::GraphFormat::edge_list;
            std::cout << qwalk::export_graph(g, format);
            return 0;
        };
    });

    GraphSource bdc_src;
    std::string bdc_format = "edge_list";
    auto* bdc = graph_cmd->add_subcommand("bdc", "emit the bipartite double cover of a graph");
    add_graph_source_flags(bdc, bdc_src);
    bdc->add_option("--format", bdc_format, "edge_list or dot");
    bdc->callback([&] {
        run = [&]() -> int {
            std::string desc;
            const auto g = load_graph(bdc_src, desc);
            if (bdc_format != "dot" && bdc_format != "edge_list") {
                throw std::invalid_argument("unknown format '" + bdc_format + "'");
            }
            const auto format = bdc_format == "dot" ? qwalk::GraphFormat::dot
                                                    : qwalk::GraphFormat::edge_list;
            std::cout << qwalk::export_graph(qwalk::bipartite_double_cover(g), format);
            return 0;
        };
    });

    // verify
    GraphSource verify_src;
    std::string verify_marked;
    std::string verify_format = "text";
    double verify_tol = 1e-12;
    auto* verify = app.add_subcommand("verify", "check the operator identities on a graph");
    add_graph_source_flags(verify, verify_src);
    verify->add_option("--marked", verify_marked, "comma-separated 0-based marked vertices");
    verify->add_option("--tol", verify_tol, "entrywise tolerance (default 1e-12)");
    verify->add_option("--format", verify_format, "text or json");
    verify->callback([&] {
        run = [&]() -> int {
            if (verify_format != "text" && verify_format != "json") {
                throw std::invalid_argument("unknown format '" + verify_format + "'");
            }
            std::string desc;
            const auto g = load_graph(verify_src, desc);
            const auto marked = parse_marked(verify_marked);
            const auto suite = qwalk::run_equivalence_suite(g, marked, verify_tol, desc);
            std::cout << (verify_format == "json" ? suite.to_json_string() + "\n"
                                                  : suite.to_text());
            return suite.overall_pass ? 0 : 1;
        };
    });

    // search
    GraphSource search_src;
    std::string search_marked, search_walk;
    std::string search_convention = "tail", search_init = "arc_uniform";
    long search_steps = -1;
    auto* search = app.add_subcommand("search", "CSV trajectory of the success probability");
    add_graph_source_flags(search, search_src);
    search->add_option("--marked", search_marked, "comma-separated 0-based marked vertices");
    search->add_option("--walk", search_walk, "w, wprime, wq1, wq2, u, uskw, scq, u2q")
        ->required();
    search->add_option("--steps", search_steps, "number of applications")->required();
    search->add_option("--convention", search_convention, "tail, head, or either");
    search->add_option("--init", search_init, "arc_uniform or vertex_uniform");
    search->callback([&] {
        run = [&]() -> int {
            if (search_steps < 0) {
                throw std::invalid_argument("--steps must be >= 0");
            }
            std::string desc;
            const auto g = load_graph(search_src, desc);
            const auto marked = parse_marked(search_marked);
            const qwalk::ArcBasis basis(g);
            const auto op = qwalk::walk_operator(parse_walk(search_walk), g, basis, marked);
            const auto init = qwalk::uniform_state(basis, parse_init(search_init));
            const auto traj =
                qwalk::evolve(op, basis, init, static_cast<std::size_t>(search_steps), marked,
                              parse_convention(search_convention));
            std::cout << traj.to_csv();
            return 0;
        };
    });

    // peak
    GraphSource peak_src;
    std::string peak_marked, peak_walk;
    std::string peak_convention = "tail", peak_init = "arc_uniform";
    long peak_steps = -1;
    bool peak_predict = false, peak_compare = false;
    auto* peak = app.add_subcommand("peak", "success-probability peak (simulated or predicted)");
    add_graph_source_flags(peak, peak_src);
    peak->add_option("--marked", peak_marked, "comma-separated 0-based marked vertices");
    peak->add_option("--walk", peak_walk, "walk kind")->required();
    peak->add_option("--steps", peak_steps, "simulation horizon (default 2*t_pred if known)");
    peak->add_option("--convention", peak_convention, "tail, head, or either");
    peak->add_option("--init", peak_init, "arc_uniform or vertex_uniform");
    auto* predict_flag =
        peak->add_flag("--predict", peak_predict, "emit the closed-form peak, no simulation");
    peak->add_flag("--compare", peak_compare, "simulate and compare against the closed form")
        ->excludes(predict_flag);
    peak->callback([&] {
        run = [&]() -> int {
            const auto kind = parse_walk(peak_walk);
            const auto marked = parse_marked(peak_marked);
            const std::size_t k = marked.size();

            const bool want_prediction = peak_predict || peak_compare;
            std::optional<qwalk::Peak> predicted;
            std::optional<std::size_t> n_predicted;
            if (want_prediction) {
                // The closed forms hold for the complete graph only.
                if (peak_src.family != "complete") {
                    throw std::invalid_argument(
                        "--predict/--compare require --family complete");
                }
                if (peak_src.param < 0) {
                    throw std::invalid_argument("--n is required for the prediction");
                }
                n_predicted = static_cast<std::size_t>(peak_src.param);
                predicted = qwalk::predicted_peak(kind, *n_predicted, k);
            }
            if (peak_predict) {
                auto rec = peak_record(peak_walk, *n_predicted, k);
                rec["t_star"] = predicted->t_star;
                rec["p_star"] = predicted->p_star;
                std::cout << rec.dump() << "\n";
                return 0;
            }

            std::string desc;
            const auto g = load_graph(peak_src, desc);
            std::size_t steps = 0;
            if (peak_steps >= 0) {
                steps = static_cast<std::size_t>(peak_steps);
            } else if (predicted) {
                // one full oscillation; the second peak lies beyond 2 t*
                steps = static_cast<std::size_t>(std::ceil(2.0 * predicted->t_star));
            } else {
                throw std::invalid_argument(
                    "--steps is required when no closed-form horizon exists");
            }
            const qwalk::ArcBasis basis(g);
            const auto op = qwalk::walk_operator(kind, g, basis, marked);
            const auto init = qwalk::uniform_state(basis, parse_init(peak_init));
            const auto traj = qwalk::evolve(op, basis, init, steps, marked,
                                            parse_convention(peak_convention));
            const auto sim = qwalk::find_peak(traj);

            auto rec = peak_record(peak_walk, g.vertex_count(), k);
            if (peak_compare) {
                rec["simulated"] = {{"t_star", static_cast<long long>(sim.t_star)},
                                    {"p_star", sim.p_star}};
                rec["predicted"] = {{"t_star", predicted->t_star},
                                    {"p_star", predicted->p_star}};
                const bool ok = std::fabs(sim.t_star - predicted->t_star) <= 1.0 &&
                                std::fabs(sim.p_star - predicted->p_star) <= 0.05;
                rec["within_tolerance"] = ok;
                std::cout << rec.dump() << "\n";
                return ok ? 0 : 1;
            }
            rec["t_star"] = static_cast<long long>(sim.t_star);
            rec["p_star"] = sim.p_star;
            std::cout << rec.dump() << "\n";
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return run ? run() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
