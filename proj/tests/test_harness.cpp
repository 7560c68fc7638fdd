#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hamfactor/generators.hpp"
#include "hamfactor/harness.hpp"
#include "hamfactor/io.hpp"

using namespace hamfactor;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "hamfactor_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.n = 600;
    c.d = 3;
    c.trials = 6;
    c.seed = 42;
    c.timing = false;
    return c;
}

}  // namespace

TEST_CASE("zero trials write only the header") {
    ExperimentConfig c = small_config();
    c.trials = 0;
    c.csv_path = scratch("empty.csv");
    const ExperimentReport r = run_experiment(c);
    CHECK(r.rows.empty());
    CHECK(slurp(c.csv_path) == std::string(kResultsHeader) + "\n");
}

TEST_CASE("runs are reproducible regardless of worker count") {
    ExperimentConfig c = small_config();
    c.csv_path = scratch("a.csv");
    run_experiment(c);
    c.csv_path = scratch("b.csv");
    run_experiment(c);
    c.workers = 3;
    c.csv_path = scratch("c.csv");
    run_experiment(c);
    CHECK(slurp(scratch("a.csv")) == slurp(scratch("b.csv")));
    CHECK(slurp(scratch("a.csv")) == slurp(scratch("c.csv")));
}

TEST_CASE("trial rows are consistent") {
    ExperimentConfig c = small_config();
    c.trace_path = scratch("trace.jsonl");
    const ExperimentReport r = run_experiment(c);
    REQUIRE(r.rows.size() == c.trials);
    std::size_t successes = 0;
    for (const auto& row : r.rows) {
        CHECK(row.seed == trial_seed(c.seed, row.index));
        CHECK(row.exposure_ratio == doctest::Approx(static_cast<double>(row.exposures) / std::pow(600.0, 0.75)));
        CHECK(row.ms == 0.0);
        if (row.outcome == TrialOutcome::success) {
            ++successes;
            CHECK(row.cycle.order.size() == 600);
        } else {
            CHECK_FALSE(row.failure.empty());
        }
    }
    CHECK(successes == r.successes);
    std::ifstream trace(c.trace_path);
    std::string line;
    while (std::getline(trace, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("trial"));
        CHECK(j.contains("phase"));
    }
}

TEST_CASE("config JSON") {
    const auto j = nlohmann::json::parse(R"({"n": 1000, "d": 2, "trials": 3, "seed": 9, "sampler": "permutation-projected",
        "graph": "circulant", "phase1": {"preset": "defaults", "lambda": 1.5, "close_neighbors": 2}, "workers": 2})");
    const ExperimentConfig c = ExperimentConfig::from_json(j);
    CHECK(c.n == 1000);
    CHECK(c.sampler == SamplerMode::permutation_projected);
    const Phase1Params p = c.phase1.resolve(1000);
    CHECK(p.target_leaves == static_cast<std::size_t>(std::ceil(1.5 * std::sqrt(1000.0))));
    CHECK(p.n0 == Phase1Params::defaults(1000).n0);
    CHECK(p.close_neighbors == 2);
    const ExperimentConfig back = ExperimentConfig::from_json(c.to_json());
    CHECK(back.to_json() == c.to_json());

    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(R"({"n": 7, "d": 3})")), std::invalid_argument);
    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(R"({"n": 10, "d": 2, "graph": "disjoint-cliques"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json::parse(R"({"phase1": {"preset": "fast"}})")),
                    std::invalid_argument);
}

TEST_CASE("graphs from files") {
    Rng rng(3);
    const Graph g = sample_regular(300, 3, rng);
    const auto path = scratch("g.txt");
    save_graph(path, g);
    CHECK(load_graph(path).edges() == g.edges());

    ExperimentConfig c = small_config();
    c.n = 300;
    c.trials = 2;
    c.graph = "file";
    c.graph_file = path;
    const ExperimentReport r = run_experiment(c);
    CHECK(r.rows.size() == 2);

    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "3 2\n0 1\n1 0\n";
    try {
        load_graph(bad);
        FAIL("duplicate edge accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}
