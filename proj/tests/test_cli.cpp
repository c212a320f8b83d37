// End-to-end tests of the qwalk binary: exit-code contract (0 success,
// 1 check failure, 2 usage/input error) and output formats.
#include "test_util.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto out_path = std::filesystem::temp_directory_path() /
                          ("qwalk_test_out_" + std::to_string(++counter) + ".txt");
    const std::string cmd =
        std::string("\"") + QWALK_CLI_PATH + "\" " + args + " > " + out_path.string() +
        " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.out = buffer.str();
    std::filesystem::remove(out_path);
    return result;
}

std::string write_temp_graph(const std::string& text, const std::string& name) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << text;
    return path.string();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("graph gen emits edge lists and validates parameters") {
    const CliResult complete = run_cli("graph gen --family complete --n 4");
    CHECK(complete.exit_code == 0);
    CHECK(count_lines(complete.out) == 6);
    CHECK(complete.out.substr(0, 4) == "0 1\n");

    CHECK(run_cli("graph gen --family petersen").exit_code == 0);
    CHECK(count_lines(run_cli("graph gen --family petersen").out) == 15);

    const CliResult dot = run_cli("graph gen --family cycle --n 3 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("graph G {") == 0);

    CHECK(run_cli("graph gen --family paley --n 6").exit_code == 2);
    CHECK(run_cli("graph gen --family nosuch --n 3").exit_code == 2);
    CHECK(run_cli("graph gen --family cycle").exit_code == 2);  // missing --n
    CHECK(run_cli("graph gen --family cycle --n 4 --format svg").exit_code == 2);
}

TEST_CASE("graph bdc doubles the edge count") {
    const std::string path =
        write_temp_graph(testutil::pendant_triangle_edges, "qwalk_cli_bdc.el");
    const CliResult cover = run_cli("graph bdc --input " + path);
    CHECK(cover.exit_code == 0);
    CHECK(count_lines(cover.out) == 8);
    std::filesystem::remove(path);
}

TEST_CASE("verify passes on a valid graph and honors exit codes") {
    const std::string path =
        write_temp_graph(testutil::pendant_triangle_edges, "qwalk_cli_verify.el");

    const CliResult pass = run_cli("verify --input " + path + " --marked 1");
    CHECK(pass.exit_code == 0);
    std::size_t pass_lines = 0;
    std::istringstream lines(pass.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("PASS  ", 0) == 0) ++pass_lines;
    }
    CHECK(pass_lines == 10);
    CHECK(pass.out.find("overall: PASS") != std::string::npos);

    CHECK(run_cli("verify --family complete --n 8 --marked 0,3").exit_code == 0);

    // An impossible tolerance turns every check into a failure: exit 1.
    CHECK(run_cli("verify --input " + path + " --marked 1 --tol 0").exit_code == 1);

    // Unreadable or malformed input: exit 2.
    CHECK(run_cli("verify --input /nonexistent/graph.el --marked 0").exit_code == 2);
    const std::string corrupt = write_temp_graph("0 1\nbroken", "qwalk_cli_corrupt.el");
    CHECK(run_cli("verify --input " + corrupt + " --marked 0").exit_code == 2);
    CHECK(run_cli("verify --input " + path + " --marked zebra").exit_code == 2);
    CHECK(run_cli("verify --input " + path + " --marked -1").exit_code == 2);
    CHECK(run_cli("verify --input " + path + " --marked 17").exit_code == 2);

    std::filesystem::remove(path);
    std::filesystem::remove(corrupt);
}

TEST_CASE("verify emits machine-readable json") {
    const CliResult res =
        run_cli("verify --family complete --n 4 --marked 0 --format json");
    CHECK(res.exit_code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["overall_pass"] == true);
    CHECK(doc["checks"].size() == 10);
}

TEST_CASE("search prints a deterministic csv trajectory") {
    const CliResult res =
        run_cli("search --family complete --n 16 --marked 0 --walk wq2 --steps 5");
    CHECK(res.exit_code == 0);
    CHECK(res.out.rfind("step,prob\n0,0.0625\n", 0) == 0);
    CHECK(count_lines(res.out) == 7);  // header + steps 0..5

    const CliResult rerun =
        run_cli("search --family complete --n 16 --marked 0 --walk wq2 --steps 5");
    CHECK(rerun.out == res.out);

    const CliResult zero =
        run_cli("search --family complete --n 16 --marked 0 --walk wq2 --steps 0");
    CHECK(count_lines(zero.out) == 2);

    CHECK(run_cli("search --family complete --n 16 --marked 0 --walk bogus --steps 5").exit_code ==
          2);
    CHECK(run_cli("search --family complete --n 16 --marked 0 --walk wq2").exit_code == 2);
    CHECK(run_cli("search --family complete --n 16 --walk wq2 --steps 5").exit_code == 2);
}

TEST_CASE("search honors convention and initial-state flags") {
    // 'either' counts both endpoints: on the pendant triangle with vertex 1
    // marked, 6 of 8 arcs touch it.
    const std::string path =
        write_temp_graph(testutil::pendant_triangle_edges, "qwalk_cli_conv.el");
    const CliResult either = run_cli("search --input " + path +
                                     " --marked 1 --walk wq2 --steps 0 --convention either");
    CHECK(either.exit_code == 0);
    CHECK(either.out == "step,prob\n0,0.75\n");

    const CliResult vertex = run_cli("search --input " + path +
                                     " --marked 0 --walk wq2 --steps 0 --init vertex_uniform");
    CHECK(vertex.exit_code == 0);
    CHECK(vertex.out == "step,prob\n0,0.25\n");  // arc (0,1) alone carries 1/N

    CHECK(run_cli("search --input " + path + " --marked 1 --walk wq2 --steps 1 "
                  "--convention sideways").exit_code == 2);
    CHECK(run_cli("search --input " + path + " --marked 1 --walk wq2 --steps 1 "
                  "--init bogus").exit_code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("peak predicts, simulates, and compares") {
    const CliResult predict =
        run_cli("peak --family complete --n 1024 --marked 0 --walk wprime --predict");
    CHECK(predict.exit_code == 0);
    const auto doc = nlohmann::json::parse(predict.out);
    CHECK(doc["t_star"].get<double>() == doctest::Approx(17.7715).epsilon(1e-4));
    CHECK(doc["p_star"].get<double>() == 0.5);

    CHECK(run_cli("peak --family complete --n 1024 --marked 0 --walk u --predict").exit_code == 2);
    CHECK(run_cli("peak --family cycle --n 8 --marked 0 --walk wq2 --predict").exit_code == 2);

    const CliResult compare =
        run_cli("peak --family complete --n 64 --marked 0 --walk wq2 --compare");
    CHECK(compare.exit_code == 0);
    const auto cmp = nlohmann::json::parse(compare.out);
    CHECK(cmp["within_tolerance"] == true);
    CHECK(cmp["simulated"]["p_star"].get<double>() >= 0.9);

    const CliResult simulate =
        run_cli("peak --family complete --n 64 --marked 0,1 --walk wq2 --steps 30");
    CHECK(simulate.exit_code == 0);
    const auto sim = nlohmann::json::parse(simulate.out);
    CHECK(sim["k"] == 2);
    CHECK(sim["t_star"].is_number_integer());

    // no closed-form horizon and no --steps
    CHECK(run_cli("peak --family cycle --n 8 --marked 0 --walk wq1").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("graph").exit_code == 2);  // missing gen/bdc
}
