#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcr/cli.hpp"
#include "mcr/core_lattice.hpp"
#include "mcr/metrics.hpp"
#include "mcr/multicorerank.hpp"
#include "mcr/multiplex_network.hpp"
#include "support/fixtures.hpp"

namespace {

namespace fs = std::filesystem;

int run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"mcr"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return mcr::cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

std::string example_path() { return mcr::testing::data_file("example.edges").string(); }

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(mcr::testing::split_csv_row(line));
    }
    return rows;
}

}  // namespace

TEST_CASE("decompose emits the 11 known core records") {
    const auto out = tmp("mcr_cli_decompose.csv");
    REQUIRE(run_cli({"decompose", "--input", example_path(), "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 12);  // header + 11 cores
    CHECK(rows[0] == std::vector<std::string>{"level", "vector", "size", "members", "fathers"});

    const auto expected = mcr::testing::example_lattice_expected();
    std::size_t matched = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& vector_text = rows[i][1];
        for (const auto& [vec, members] : expected) {
            const std::string rendered =
                "(" + std::to_string(vec[0]) + "," + std::to_string(vec[1]) + ")";
            if (rendered != vector_text) continue;
            std::string joined;
            for (const auto& m : members) {
                if (!joined.empty()) joined += ' ';
                joined += m;
            }
            CHECK(rows[i][3] == joined);
            ++matched;
        }
    }
    CHECK(matched == 11);
}

TEST_CASE("rank on an edgeless fixture reports one tied level-0 group") {
    const auto fixture = tmp("mcr_cli_edgeless.edges");
    {
        std::ofstream out(fixture);
        out << "#layer 1\n#layer 2\n#node A\n#node B\n#node C\n";
    }
    const auto out = tmp("mcr_cli_edgeless_rank.csv");
    REQUIRE(run_cli({"rank", "--input", fixture.string(), "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "0");  // deepest_level
        CHECK(rows[i][2] == "0");  // log influence of 1
        CHECK(rows[i][3] == "2");  // shared average rank of three tied nodes
    }
}

TEST_CASE("compare matches direct library computation") {
    const auto out = tmp("mcr_cli_compare.csv");
    REQUIRE(run_cli({"compare", "--input", example_path(), "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 5);

    const auto net = mcr::load_network(example_path());
    const auto ranking = mcr::rank(mcr::propagate(mcr::build_lattice(net)), net);
    const auto scores = mcr::rank_scores(ranking, net.node_count());
    const std::vector<std::pair<std::string, std::vector<double>>> expected = {
        {"degree", mcr::degree_centrality(net).aggregate},
        {"eigenvector", mcr::eigenvector_centrality(net).aggregate},
        {"betweenness", mcr::betweenness_centrality(net).aggregate},
        {"closeness", mcr::closeness_centrality(net).aggregate},
    };
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(rows[i + 1][0] == expected[i].first);
        CHECK(std::stod(rows[i + 1][1]) ==
              doctest::Approx(mcr::spearman(scores, expected[i].second)).epsilon(1e-15));
    }
}

TEST_CASE("identical invocations produce byte-identical output files") {
    const auto out1 = tmp("mcr_cli_attack1.csv");
    const auto out2 = tmp("mcr_cli_attack2.csv");
    const std::vector<std::string> args = {"attack",      "--input", example_path(),
                                           "--mode",      "random",  "--trials",
                                           "5",           "--seed",  "321",
                                           "--fractions", "0,0.2,0.4"};
    auto with_out = [&](const fs::path& p) {
        auto a = args;
        a.push_back("--out");
        a.push_back(p.string());
        return a;
    };
    REQUIRE(run_cli(with_out(out1)) == 0);
    REQUIRE(run_cli(with_out(out2)) == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
}

TEST_CASE("attack output feeds fit in both formats") {
    const auto csv_table = tmp("mcr_cli_attack.csv");
    const auto json_table = tmp("mcr_cli_attack.json");
    REQUIRE(run_cli({"attack", "--input", example_path(), "--fractions", "0,0.167,0.34,0.5", "--out",
                     csv_table.string()}) == 0);
    REQUIRE(run_cli({"attack", "--input", example_path(), "--fractions", "0,0.167,0.34,0.5", "--format",
                     "json", "--out", json_table.string()}) == 0);

    const auto fit_csv = tmp("mcr_cli_fit.csv");
    const auto fit_json = tmp("mcr_cli_fit.json");
    REQUIRE(run_cli({"fit", "--input", csv_table.string(), "--out", fit_csv.string()}) == 0);
    REQUIRE(run_cli({"fit", "--input", json_table.string(), "--format", "json", "--out",
                     fit_json.string()}) == 0);

    const auto rows = parse_csv(slurp(fit_csv));
    REQUIRE(rows.size() == 2);
    const auto parsed = nlohmann::json::parse(slurp(fit_json));
    CHECK(std::stod(rows[1][0]) == doctest::Approx(parsed["a"].get<double>()).epsilon(1e-12));
    CHECK(std::stod(rows[1][1]) == doctest::Approx(parsed["b"].get<double>()).epsilon(1e-12));
}

TEST_CASE("json outputs parse and carry the same records") {
    const auto out = tmp("mcr_cli_rank.json");
    REQUIRE(run_cli({"rank", "--input", example_path(), "--format", "json", "--out", out.string()}) == 0);
    const auto parsed = nlohmann::json::parse(slurp(out));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 6);
    CHECK(parsed[0]["node_label"] == "B");
    CHECK(parsed[0]["deepest_level"] == 4);
    CHECK(parsed[5]["node_label"] == "A");

    const auto info_out = tmp("mcr_cli_info.json");
    REQUIRE(run_cli({"info", "--input", example_path(), "--format", "json", "--out",
                     info_out.string()}) == 0);
    const auto info = nlohmann::json::parse(slurp(info_out));
    CHECK(info["nodes"] == 6);
    CHECK(info["layers"] == 2);
    CHECK(info["edges"] == 16);
}

TEST_CASE("centrality emits one column per requested measure") {
    const auto out = tmp("mcr_cli_centrality.csv");
    REQUIRE(run_cli({"centrality", "--input", example_path(), "--measures", "degree,multicorerank",
                     "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == std::vector<std::string>{"node_label", "degree", "multicorerank"});

    const auto net = mcr::load_network(example_path());
    const auto degree = mcr::degree_centrality(net).aggregate;
    const auto ranking = mcr::rank(mcr::propagate(mcr::build_lattice(net)), net);
    const auto scores = mcr::rank_scores(ranking, net.node_count());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto node = *net.find_node(rows[i][0]);
        CHECK(std::stod(rows[i][1]) == degree[node]);
        CHECK(std::stod(rows[i][2]) == scores[node]);
    }

    CHECK(run_cli({"centrality", "--input", example_path(), "--measures", "nonsense"}) ==
          mcr::cli::kExitParseError);
}

TEST_CASE("assortativity output matches the library") {
    const auto out = tmp("mcr_cli_assort.csv");
    REQUIRE(run_cli({"assortativity", "--input", example_path(), "--out", out.string()}) == 0);
    const auto rows = parse_csv(slurp(out));
    REQUIRE(rows.size() == 3);  // header, one pair, global

    const auto net = mcr::load_network(example_path());
    const auto report = mcr::assortativity(net);
    CHECK(rows[1][0] == "1");
    CHECK(rows[1][1] == "2");
    CHECK(std::stod(rows[1][2]) == doctest::Approx(*report.pairwise[0].correlation));
    CHECK(rows[2][0] == "global");
    CHECK(std::stod(rows[2][2]) == doctest::Approx(report.global));
}

TEST_CASE("exit codes distinguish the error families") {
    // Unreadable input.
    CHECK(run_cli({"info", "--input", "/nonexistent/x.edges"}) == mcr::cli::kExitFailure);

    // Malformed file -> parse error.
    const auto bad = tmp("mcr_cli_bad.edges");
    {
        std::ofstream out(bad);
        out << "1 A\n";
    }
    CHECK(run_cli({"info", "--input", bad.string()}) == mcr::cli::kExitParseError);

    // Self-loop -> parse error.
    {
        std::ofstream out(bad);
        out << "1 A A\n";
    }
    CHECK(run_cli({"info", "--input", bad.string()}) == mcr::cli::kExitParseError);

    // Unknown option -> CLI parse error.
    CHECK(run_cli({"info", "--input", example_path(), "--bogus"}) == mcr::cli::kExitParseError);
    CHECK(run_cli({"rank"}) == mcr::cli::kExitParseError);  // missing --input

    // Budget exceeded.
    CHECK(run_cli({"decompose", "--input", example_path(), "--max-cores", "2"}) ==
          mcr::cli::kExitBudgetExceeded);

    // Undefined metric: both layers regular (triangles), no defined pair.
    const auto regular = tmp("mcr_cli_regular.edges");
    {
        std::ofstream out(regular);
        out << "1 A B\n1 B C\n1 A C\n2 A B\n2 B C\n2 A C\n";
    }
    CHECK(run_cli({"assortativity", "--input", regular.string()}) ==
          mcr::cli::kExitUndefinedMetric);

    // Bad fraction list.
    CHECK(run_cli({"attack", "--input", example_path(), "--fractions", "0.5,0.25"}) ==
          mcr::cli::kExitParseError);
}
