#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamfactor/diagnostics.hpp"
#include "hamfactor/generators.hpp"
#include "hamfactor/harness.hpp"
#include "hamfactor/io.hpp"
#include "hamfactor/oracle.hpp"
#include "hamfactor/phase2.hpp"
#include "hamfactor/reduction.hpp"

using namespace hamfactor;

namespace {

int cmd_run(const std::string& config_path, std::size_t trials, std::uint64_t seed, std::size_t workers,
            const std::string& csv, const std::string& summary, const std::string& trace, double beta) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (trials != 0) j["trials"] = trials;
    if (seed != 0) j["seed"] = seed;
    if (workers != 0) j["workers"] = workers;
    if (!csv.empty()) j["csv"] = csv;
    if (!summary.empty()) j["summary"] = summary;
    if (!trace.empty()) j["trace"] = trace;
    if (beta > 0) j["beta"] = beta;
    const ExperimentConfig cfg = ExperimentConfig::from_json(j);
    const ExperimentReport rep = run_experiment(cfg);
    std::cout << rep.summary().dump(2) << '\n';
    return 0;
}

void write_graph(const Graph& g, const std::string& out) {
    if (out.empty() || out == "-") {
        write_edge_list(std::cout, g);
    } else {
        save_graph(out, g);
    }
}

int cmd_sample(const std::string& what, std::size_t n, std::size_t d, std::uint64_t seed, const std::string& family,
               const std::string& mode, const std::string& out) {
    Rng rng(seed);
    if (what == "graph") {
        write_graph(family.empty() ? sample_regular(n, d, rng) : deterministic_family(parse_graph_family(family), n, d), out);
    } else {
        const CycleCover f = sample_two_factor(n, parse_sampler_mode(mode), rng);
        write_graph(Graph(n, f.edges()), out);
    }
    return 0;
}

int cmd_diagnose(const std::string& lemma, std::size_t n, std::size_t d, std::size_t m, std::size_t trials, double p,
                 std::size_t t_max, double threshold, const std::string& mode, std::uint64_t seed) {
    Rng rng(seed);
    if (lemma == "branching") {
        BranchingParams bp;
        bp.p = p;
        bp.t_max = t_max;
        if (threshold < 0) threshold = std::pow(3.9, static_cast<double>(t_max));
        std::printf("p,t_max,threshold,trials,survival\n%g,%zu,%g,%zu,%.6f\n", p, t_max, threshold, trials,
                    simulate_branching(bp, trials, threshold, rng));
    } else if (lemma == "embed") {
        const double est = matching_embed_probability(n, d, m, trials, rng);
        const double exact = m == 1 ? static_cast<double>(d) / static_cast<double>(n - 1)
                                    : std::pow(static_cast<double>(d) / static_cast<double>(n), static_cast<double>(m));
        std::printf("n,d,m,trials,estimate,reference\n%zu,%zu,%zu,%zu,%.8f,%.8f\n", n, d, m, trials, est, exact);
    } else if (lemma == "cycles") {
        const std::vector<std::size_t> ts{10, 100, 1000};
        const CycleCountStats s = cycle_count_stats(parse_sampler_mode(mode), n, trials, ts, rng);
        std::printf("mode,n,trials,t,mean_short,mean_cycles,ln_n\n");
        for (auto [t, v] : s.mean_short)
            std::printf("%s,%zu,%zu,%zu,%.4f,%.4f,%.4f\n", mode.c_str(), n, trials, t, v, s.mean_cycles,
                        std::log(static_cast<double>(n)));
    } else if (lemma == "coloring") {
        const Graph g = sample_regular(n, d, rng);
        const EdgeColoring c = vizing_color(g);
        std::printf("n,d,colors,class,size\n");
        const auto sizes = c.class_sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) std::printf("%zu,%zu,%d,%zu,%zu\n", n, d, c.num_colors, i, sizes[i]);
    } else {
        Rng fr = rng.derive("factor");
        const CycleCover f = sample_two_factor(n, parse_sampler_mode(mode), fr);
        const MomentBound b = first_moment_bound(n, d, f);
        std::printf("n,d,cycles,m,bound\n%zu,%zu,%zu,%zu,%.6g\n", n, d, f.num_cycles(), b.m, b.value);
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cycle_path) {
    const Graph g = load_graph(graph_path);
    if (!cycle_path.empty()) {
        std::ifstream in(cycle_path);
        if (!in) throw std::runtime_error("cannot open " + cycle_path);
        const bool ok = is_hamilton_cycle(read_cycle(in), g);
        std::cout << (ok ? "valid Hamilton cycle" : "refuted: not a Hamilton cycle") << '\n';
        return ok ? 0 : 1;
    }
    const auto h = held_karp(g);
    if (!h) {
        std::cout << "not Hamiltonian\n";
        return 1;
    }
    std::cout << "Hamiltonian:";
    for (Vertex v : h->order) std::cout << ' ' << v;
    std::cout << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonicity of a bounded-degree graph plus a random 2-factor"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a seeded batch of trials from a JSON config");
    std::string config, csv, summary, trace;
    double beta = 0;
    std::size_t trials = 0, workers = 0;
    std::uint64_t run_seed = 0;
    run->add_option("--config", config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    run->add_option("--trials", trials, "override the trial count");
    run->add_option("--seed", run_seed, "override the master seed");
    run->add_option("--workers", workers, "override the worker count");
    run->add_option("--csv", csv, "per-trial CSV output");
    run->add_option("--summary", summary, "summary JSON output");
    run->add_option("--trace", trace, "round statistics as JSON lines");
    run->add_option("--expose-budget", beta, "exposure budget factor beta in beta * n^{3/4} * ln n");

    auto* sample = app.add_subcommand("sample", "sample a graph or a 2-factor as an edge list");
    std::string what = "graph", family, mode = "pairing-uniform", out;
    std::size_t sn = 20, sd = 3;
    std::uint64_t sseed = 1;
    sample->add_option("what", what, "graph or factor")->check(CLI::IsMember({"graph", "factor"}));
    sample->add_option("--n", sn, "vertices")->required();
    sample->add_option("--d", sd, "degree");
    sample->add_option("--seed", sseed, "seed");
    sample->add_option("--family", family, "deterministic family instead of a random graph")
        ->check(CLI::IsMember({"disjoint-cliques", "circulant", "prism"}));
    sample->add_option("--mode", mode, "2-factor sampler")->check(CLI::IsMember({"pairing-uniform", "permutation-projected"}));
    sample->add_option("--out", out, "output file (default stdout)");

    auto* diagnose = app.add_subcommand("diagnose", "numeric checks of the probabilistic lemmas, CSV on stdout");
    std::string lemma = "branching", dmode = "permutation-projected";
    std::size_t dn = 100, dd = 3, dm = 1, dtrials = 10000, dt = 10;
    double dp = 0.001, threshold = -1;
    std::uint64_t dseed = 1;
    diagnose->add_option("--lemma", lemma, "branching, embed, cycles, moment or coloring")
        ->required()
        ->check(CLI::IsMember({"branching", "embed", "cycles", "moment", "coloring"}));
    diagnose->add_option("--n", dn, "vertices");
    diagnose->add_option("--d", dd, "degree");
    diagnose->add_option("--m", dm, "matching size (embed)");
    diagnose->add_option("--trials", dtrials, "Monte-Carlo trials");
    diagnose->add_option("--p", dp, "failure probability (branching)");
    diagnose->add_option("--t-max", dt, "steps (branching)");
    diagnose->add_option("--threshold", threshold, "survival threshold (default 3.9^t_max)");
    diagnose->add_option("--mode", dmode, "2-factor sampler")->check(CLI::IsMember({"pairing-uniform", "permutation-projected"}));
    diagnose->add_option("--seed", dseed, "seed");

    auto* verify = app.add_subcommand("verify", "check a claimed Hamilton cycle, or decide small graphs exactly");
    std::string graph_path, cycle_path;
    verify->add_option("--graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
    verify->add_option("--cycle", cycle_path, "vertex order file")->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*run) return cmd_run(config, trials, run_seed, workers, csv, summary, trace, beta);
        if (*sample) return cmd_sample(what, sn, sd, sseed, family, mode, out);
        if (*diagnose) return cmd_diagnose(lemma, dn, dd, dm, dtrials, dp, dt, threshold, dmode, dseed);
        if (*verify) return cmd_verify(graph_path, cycle_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
