#include "hamfactor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hamfactor/exposure.hpp"
#include "hamfactor/io.hpp"
#include "hamfactor/reduction.hpp"

namespace hamfactor {

namespace {

template <typename T>
void apply(std::optional<T> v, T& target) {
    if (v) target = *v;
}

template <typename T>
void read_opt(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void open_or_throw(std::ofstream& out, const std::filesystem::path& path) {
    out.open(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
}

}  // namespace

Phase1Params Phase1Overrides::resolve(std::size_t n) const {
    Phase1Params p;
    if (preset == "tuned") {
        p = Phase1Params::tuned(n);
    } else if (preset == "defaults") {
        p = Phase1Params::defaults(n);
    } else {
        throw std::invalid_argument("unknown phase-1 preset '" + preset + "'");
    }
    if (c0 || tau || lambda) {
        // Re-derive the scale-dependent values from the preset's constants.
        const bool tuned = preset == "tuned";
        const Phase1Params scaled =
            Phase1Params::defaults(n, c0.value_or(tuned ? kTunedC0 : 0.2), tau.value_or(1.0),
                                   lambda.value_or(tuned ? kTunedLambda : 2.0));
        p.n0 = scaled.n0;
        p.t_max = scaled.t_max;
        p.target_leaves = scaled.target_leaves;
    }
    apply(n0, p.n0);
    apply(t_max, p.t_max);
    apply(target_leaves, p.target_leaves);
    apply(grow_quorum, p.grow_quorum);
    apply(lengthen_min_fraction, p.lengthen_min_fraction);
    apply(close_pool_fraction, p.close_pool_fraction);
    apply(close_neighbors, p.close_neighbors);
    apply(close_min_partners, p.close_min_partners);
    apply(cycle_retry_limit, p.cycle_retry_limit);
    apply(retry_budget, p.retry_budget);
    apply(round_exposure_cap, p.round_exposure_cap);
    p.validate();
    return p;
}

void ExperimentConfig::validate() const {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if ((n * d) % 2 != 0) throw std::invalid_argument("n * d must be even");
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (plan_retries < 1 && merge_retry_budget < 1) throw std::invalid_argument("phase-2 budgets must be positive");
    if (graph == "file") {
        if (graph_file.empty()) throw std::invalid_argument("graph = file needs graph_file");
    } else if (graph != "random") {
        deterministic_family(parse_graph_family(graph), n, d);
    }
    phase1.resolve(n);
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.n = j.value("n", c.n);
    c.d = j.value("d", c.d);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    if (j.contains("sampler")) c.sampler = parse_sampler_mode(j.at("sampler").get<std::string>());
    c.graph = j.value("graph", c.graph);
    if (j.contains("graph_file")) c.graph_file = j.at("graph_file").get<std::string>();
    if (j.contains("phase1")) {
        const auto& p = j.at("phase1");
        auto& o = c.phase1;
        o.preset = p.value("preset", o.preset);
        read_opt(p, "c0", o.c0);
        read_opt(p, "tau", o.tau);
        read_opt(p, "lambda", o.lambda);
        read_opt(p, "n0", o.n0);
        read_opt(p, "t_max", o.t_max);
        read_opt(p, "target_leaves", o.target_leaves);
        read_opt(p, "grow_quorum", o.grow_quorum);
        read_opt(p, "lengthen_min_fraction", o.lengthen_min_fraction);
        read_opt(p, "close_pool_fraction", o.close_pool_fraction);
        read_opt(p, "close_neighbors", o.close_neighbors);
        read_opt(p, "close_min_partners", o.close_min_partners);
        read_opt(p, "cycle_retry_limit", o.cycle_retry_limit);
        read_opt(p, "retry_budget", o.retry_budget);
        read_opt(p, "round_exposure_cap", o.round_exposure_cap);
    }
    c.plan_retries = j.value("plan_retries", c.plan_retries);
    c.merge_retry_budget = j.value("merge_retry_budget", c.merge_retry_budget);
    c.beta = j.value("beta", c.beta);
    c.workers = j.value("workers", c.workers);
    c.timing = j.value("timing", c.timing);
    if (j.contains("csv")) c.csv_path = j.at("csv").get<std::string>();
    if (j.contains("trace")) c.trace_path = j.at("trace").get<std::string>();
    if (j.contains("summary")) c.summary_path = j.at("summary").get<std::string>();
    c.validate();
    return c;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json p = {{"preset", phase1.preset}};
    auto put = [&](const char* key, const auto& v) {
        if (v) p[key] = *v;
    };
    put("c0", phase1.c0);
    put("tau", phase1.tau);
    put("lambda", phase1.lambda);
    put("n0", phase1.n0);
    put("t_max", phase1.t_max);
    put("target_leaves", phase1.target_leaves);
    put("grow_quorum", phase1.grow_quorum);
    put("lengthen_min_fraction", phase1.lengthen_min_fraction);
    put("close_pool_fraction", phase1.close_pool_fraction);
    put("close_neighbors", phase1.close_neighbors);
    put("close_min_partners", phase1.close_min_partners);
    put("cycle_retry_limit", phase1.cycle_retry_limit);
    put("retry_budget", phase1.retry_budget);
    put("round_exposure_cap", phase1.round_exposure_cap);
    nlohmann::json j = {{"n", n},
                        {"d", d},
                        {"trials", trials},
                        {"seed", seed},
                        {"sampler", std::string(to_string(sampler))},
                        {"graph", graph},
                        {"phase1", p},
                        {"plan_retries", plan_retries},
                        {"merge_retry_budget", merge_retry_budget},
                        {"beta", beta},
                        {"workers", workers},
                        {"timing", timing}};
    if (!graph_file.empty()) j["graph_file"] = graph_file.string();
    if (!csv_path.empty()) j["csv"] = csv_path.string();
    if (!trace_path.empty()) j["trace"] = trace_path.string();
    if (!summary_path.empty()) j["summary"] = summary_path.string();
    return j;
}

std::string_view to_string(TrialOutcome o) {
    switch (o) {
        case TrialOutcome::success: return "success";
        case TrialOutcome::phase1_fail: return "phase1-fail";
        case TrialOutcome::phase2_fail: return "phase2-fail";
        case TrialOutcome::budget_fail: return "budget-fail";
    }
    return "?";
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) { return Rng(master).derive(index).seed(); }

TrialResult run_trial(const ExperimentConfig& cfg, std::size_t index, const Graph* fixed,
                      std::vector<std::string>* trace_lines) {
    const auto t0 = std::chrono::steady_clock::now();
    TrialResult res;
    res.index = index;
    res.seed = trial_seed(cfg.seed, index);
    const Rng trial(res.seed);

    TraceSink sink;
    std::string phase;
    if (trace_lines) {
        sink = [&](const nlohmann::json& event) {
            nlohmann::json line = event;
            line["trial"] = index;
            line["phase"] = phase;
            trace_lines->push_back(line.dump());
        };
    }

    const std::size_t n = cfg.n;
    Graph sampled;
    if (!fixed) {
        if (cfg.graph == "random") {
            Rng gr = trial.derive("graph");
            sampled = sample_regular(n, cfg.d, gr);
        } else {
            sampled = deterministic_family(parse_graph_family(cfg.graph), n, cfg.d);
        }
    }
    const Graph& g = fixed ? *fixed : sampled;

    Rng fr = trial.derive("factor");
    const CycleCover f = sample_two_factor(n, cfg.sampler, fr);
    const Graph g23 = extract_two_three(g, vizing_color(g));
    ExposureOracle oracle = ExposureOracle::sample(n, trial.derive("pi"), default_exposure_budget(n, cfg.beta));

    const Phase1Params p1 = cfg.phase1.resolve(n);
    res.n0 = p1.n0;
    Phase2Params p2;
    p2.plan_retries = cfg.plan_retries;
    p2.merge_retry_budget = cfg.merge_retry_budget;
    p2.merge = p1;

    try {
        phase = "1";
        const Phase1Result r1 = eliminate_short_cycles(f, g23, oracle, p1, sink);
        res.rounds = r1.rounds.size();
        res.rotations = r1.rotations;
        res.phase1_success = r1.success;
        for (std::size_t t = 1; t < r1.short_history.size(); ++t) {
            const auto& before = r1.short_history[t - 1];
            const auto& after = r1.short_history[t];
            const bool subset = std::includes(before.begin(), before.end(), after.begin(), after.end());
            if (!subset || after.size() >= before.size()) ++res.monotone_violations;
        }
        if (r1.success && r1.cover.min_cycle_length() < p1.n0) ++res.monotone_violations;
        if (!r1.success) {
            res.outcome = TrialOutcome::phase1_fail;
            res.failure = r1.failure;
        } else {
            phase = "2";
            Rng p2rng = trial.derive("phase2");
            const Phase2Result r2 = run_phase2(r1.cover, oracle, g23, p2, p2rng, sink);
            res.rounds += r2.rounds.size();
            res.rotations += r2.rotations;
            res.plan_retries = r2.plan_attempts;
            if (r2.success && verify_ham_cycle(r2.cycle, g, f, oracle.exposed_preimages())) {
                res.outcome = TrialOutcome::success;
                res.cycle = r2.cycle;
            } else {
                res.outcome = TrialOutcome::phase2_fail;
                res.failure = r2.success ? "emitted cycle failed verification" : r2.failure;
            }
        }
    } catch (const BudgetExhausted& e) {
        res.outcome = TrialOutcome::budget_fail;
        res.failure = e.what();
    }

    res.exposures = oracle.exposed_count();
    res.exposure_ratio = static_cast<double>(res.exposures) / std::pow(static_cast<double>(n), 0.75);
    if (cfg.timing)
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

nlohmann::json ExperimentReport::summary() const {
    nlohmann::json counts = nlohmann::json::object();
    for (auto o : {TrialOutcome::success, TrialOutcome::phase1_fail, TrialOutcome::phase2_fail, TrialOutcome::budget_fail})
        counts[std::string(to_string(o))] = std::count_if(rows.begin(), rows.end(), [&](const TrialResult& r) { return r.outcome == o; });
    return {{"trials", rows.size()},
            {"successes", successes},
            {"success_rate", success_rate},
            {"outcomes", counts},
            {"median_exposed_fraction", median_exposed_fraction},
            {"median_exposure_ratio", median_exposure_ratio},
            {"max_ms", max_ms}};
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::optional<Graph> fixed;
    if (cfg.graph == "file") {
        fixed = load_graph(cfg.graph_file);
        if (fixed->num_vertices() != cfg.n)
            throw std::invalid_argument(cfg.graph_file.string() + ": graph has " + std::to_string(fixed->num_vertices()) +
                                        " vertices, config says " + std::to_string(cfg.n));
    }
    const bool tracing = !cfg.trace_path.empty();

    ExperimentReport rep;
    rep.rows.resize(cfg.trials);
    std::vector<std::vector<std::string>> traces(tracing ? cfg.trials : 0);
    std::vector<std::string> errors(cfg.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < cfg.trials; i = next++) {
            try {
                rep.rows[i] = run_trial(cfg, i, fixed ? &*fixed : nullptr, tracing ? &traces[i] : nullptr);
            } catch (const std::exception& e) {
                // Sampling or reduction failures are recorded, never fatal to the batch.
                rep.rows[i].index = i;
                rep.rows[i].seed = trial_seed(cfg.seed, i);
                rep.rows[i].outcome = TrialOutcome::phase1_fail;
                rep.rows[i].failure = e.what();
            }
        }
    };
    const std::size_t workers = std::min(cfg.workers, std::max<std::size_t>(cfg.trials, 1));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<double> fractions, ratios;
    for (const auto& r : rep.rows) {
        rep.max_ms = std::max(rep.max_ms, r.ms);
        if (r.outcome != TrialOutcome::success) continue;
        ++rep.successes;
        fractions.push_back(static_cast<double>(r.exposures) / static_cast<double>(cfg.n));
        ratios.push_back(r.exposure_ratio);
    }
    rep.success_rate = cfg.trials ? static_cast<double>(rep.successes) / static_cast<double>(cfg.trials) : 0.0;
    rep.median_exposed_fraction = median(fractions);
    rep.median_exposure_ratio = median(ratios);

    if (!cfg.csv_path.empty()) write_results(cfg.csv_path, rep.rows);
    if (tracing) {
        std::ofstream out;
        open_or_throw(out, cfg.trace_path);
        for (const auto& lines : traces)
            for (const auto& line : lines) out << line << '\n';
    }
    if (!cfg.summary_path.empty()) {
        std::ofstream out;
        open_or_throw(out, cfg.summary_path);
        nlohmann::json s = rep.summary();
        s["config"] = cfg.to_json();
        out << s.dump(2) << '\n';
    }
    return rep;
}

void write_results(std::ostream& out, const std::vector<TrialResult>& rows) {
    out << kResultsHeader << '\n';
    char ratio[32], ms[32];
    for (const auto& r : rows) {
        std::snprintf(ratio, sizeof ratio, "%.6f", r.exposure_ratio);
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        out << r.seed << ',' << to_string(r.outcome) << ',' << r.exposures << ',' << ratio << ',' << r.rounds << ','
            << r.rotations << ',' << r.plan_retries << ',' << ms << '\n';
    }
}

void write_results(const std::filesystem::path& path, const std::vector<TrialResult>& rows) {
    std::ofstream out;
    open_or_throw(out, path);
    write_results(out, rows);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace hamfactor
