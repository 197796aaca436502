// Command-line front end: verified workload runs (run), timer tree vs
// naive BST side-by-side timing (bench), and a step-by-step illustrated
// trace of small ascending inserts (demo).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "timertree/dot.hpp"
#include "timertree/metrics.hpp"
#include "timertree/naive_bst.hpp"
#include "timertree/tree.hpp"
#include "timertree/validation.hpp"
#include "timertree/workload.hpp"

namespace {

using namespace timertree;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct KFraction {
    std::uint64_t num = 1;
    std::uint64_t den = 2;
};

std::optional<KFraction> parse_k(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 >= text.size()) return std::nullopt;
    KFraction k;
    try {
        std::size_t used = 0;
        k.num = std::stoull(text.substr(0, slash), &used);
        if (used != slash) return std::nullopt;
        const std::string den = text.substr(slash + 1);
        k.den = std::stoull(den, &used);
        if (used != den.size()) return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (k.num == 0 || k.num >= k.den) return std::nullopt;
    return k;
}

const char* op_name(OpKind op) {
    switch (op) {
        case OpKind::insert:
            return "insert";
        case OpKind::erase:
            return "delete";
        case OpKind::contains:
            return "contains";
    }
    return "?";
}

void write_csv(const std::string& path, const std::vector<StepSample>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open CSV path: " + path);
    out << "step,op,key,success,size,height,height_bound,rebuild_size,total_decrements,"
           "total_rebuilt_nodes\n";
    for (const StepSample& s : samples) {
        out << s.step << ',' << op_name(s.op) << ',' << s.key << ',' << (s.success ? 1 : 0) << ','
            << s.size << ',' << s.height << ',' << s.height_bound << ',' << s.rebuild_size << ','
            << s.total_decrements << ',' << s.total_rebuilt_nodes << '\n';
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open path: " + path);
    out << text;
}

// out.csv -> out.s7.k1-2.csv when several (seed, k) runs share one path.
std::string suffixed_path(const std::string& path, std::uint64_t seed, const KFraction& k) {
    const auto dot = path.rfind('.');
    const std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    return stem + ".s" + std::to_string(seed) + ".k" + std::to_string(k.num) + "-" +
           std::to_string(k.den) + ext;
}

struct RunConfig {
    std::string workload = "ascending";
    std::uint64_t n = 1000;
    std::uint64_t seed = 1;
    std::string k_text = "1/2";
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> ks;
    std::uint64_t check_every = 0;
    std::string csv_path;
    std::string dot_path;
    double p_delete = 0.4;
    std::uint64_t churn_pairs = 0;
    bool no_per_op = false;
    unsigned jobs = 1;
};

struct OneRun {
    std::uint64_t seed;
    KFraction k;
    RunReport report;
};

int cmd_run(const RunConfig& cfg) {
    const std::vector<std::uint64_t> seeds =
        cfg.seeds.empty() ? std::vector<std::uint64_t>{cfg.seed} : cfg.seeds;
    const std::vector<std::string> k_texts =
        cfg.ks.empty() ? std::vector<std::string>{cfg.k_text} : cfg.ks;

    std::vector<OneRun> runs;
    for (const std::uint64_t seed : seeds) {
        for (const std::string& kt : k_texts) {
            const auto k = parse_k(kt);
            if (!k) {
                std::cerr << "error: k must be NUM/DEN with 0 < NUM < DEN, got '" << kt << "'\n";
                return kExitUsage;
            }
            runs.push_back({seed, *k, {}});
        }
    }

    GenParams params;
    params.p_delete = cfg.p_delete;
    params.churn_pairs = cfg.churn_pairs;

    RunOptions options;
    options.check_every = cfg.check_every;
    options.per_op_oracle = !cfg.no_per_op;
    options.per_op_height = !cfg.no_per_op;
    options.collect_samples = !cfg.csv_path.empty();

    const auto execute = [&](OneRun& r) {
        const Workload w = gen(cfg.workload, cfg.n, r.seed, params);
        r.report = run(w, r.k.num, r.k.den, options);
    };

    const unsigned jobs = cfg.jobs == 0 ? 1 : cfg.jobs;
    if (jobs <= 1 || runs.size() <= 1) {
        for (OneRun& r : runs) execute(r);
    } else {
        std::vector<std::thread> pool;
        std::mutex mu;
        std::size_t next = 0;
        const std::size_t used = std::min<std::size_t>(jobs, runs.size());
        for (std::size_t t = 0; t < used; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i;
                    {
                        const std::lock_guard<std::mutex> lock(mu);
                        if (next >= runs.size()) return;
                        i = next++;
                    }
                    execute(runs[i]);
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }

    const bool multi = runs.size() > 1;
    int exit_code = kExitOk;
    for (const OneRun& r : runs) {
        const RunReport& rep = r.report;
        std::cout << "workload=" << cfg.workload << " n=" << cfg.n << " seed=" << r.seed
                  << " k=" << r.k.num << "/" << r.k.den << "\n"
                  << "  final: size=" << rep.final_size << " height=" << rep.final_height
                  << " height_bound=" << rep.final_height_bound
                  << " max_height=" << rep.max_height << "\n"
                  << "  counters: updates=" << rep.counters.updates_succeeded
                  << " decrements=" << rep.counters.total_decrements
                  << " rebuilds=" << rep.counters.total_rebuilds
                  << " rebuilt_nodes=" << rep.counters.total_rebuilt_nodes << "\n";
        const std::string csv =
            cfg.csv_path.empty() ? ""
                                 : (multi ? suffixed_path(cfg.csv_path, r.seed, r.k) : cfg.csv_path);
        const std::string dot =
            cfg.dot_path.empty() ? ""
                                 : (multi ? suffixed_path(cfg.dot_path, r.seed, r.k) : cfg.dot_path);
        if (!csv.empty()) {
            write_csv(csv, rep.samples);
            std::cout << "  csv: " << csv << "\n";
        }
        if (rep.ok) {
            std::cout << "  result: OK\n";
            if (!dot.empty()) write_text(dot, rep.final_dot);
        } else {
            std::cout << "  result: VIOLATION " << rep.violation << " at step "
                      << rep.violation_step << "\n";
            if (!dot.empty()) {
                write_text(dot, rep.dot_dump);
                std::cout << "  dot dump: " << dot << "\n";
            } else {
                std::cerr << rep.dot_dump;
            }
            exit_code = kExitViolation;
        }
    }
    return exit_code;
}

struct BenchConfig {
    std::string workload = "ascending";
    std::uint64_t n = 10000;
    std::uint64_t seed = 1;
    std::string k_text = "1/2";
    std::string baseline = "naive";
    double p_delete = 0.4;
    std::uint64_t churn_pairs = 0;
};

int cmd_bench(const BenchConfig& cfg) {
    const auto k = parse_k(cfg.k_text);
    if (!k) {
        std::cerr << "error: k must be NUM/DEN with 0 < NUM < DEN, got '" << cfg.k_text << "'\n";
        return kExitUsage;
    }
    if (cfg.baseline != "naive" && cfg.baseline != "none") {
        std::cerr << "error: baseline must be 'naive' or 'none', got '" << cfg.baseline << "'\n";
        return kExitUsage;
    }

    GenParams params;
    params.p_delete = cfg.p_delete;
    params.churn_pairs = cfg.churn_pairs;
    const Workload w = gen(cfg.workload, cfg.n, cfg.seed, params);

    using clock = std::chrono::steady_clock;
    const auto run_ops = [&w](auto& tree) {
        const auto start = clock::now();
        for (const Op& op : w.ops) {
            switch (op.kind) {
                case OpKind::insert:
                    tree.insert(op.key);
                    break;
                case OpKind::erase:
                    tree.erase(op.key);
                    break;
                case OpKind::contains:
                    tree.contains(op.key);
                    break;
            }
        }
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    std::cout << "workload=" << cfg.workload << " n=" << cfg.n << " ops=" << w.ops.size()
              << " seed=" << cfg.seed << "\n";
    std::printf("%-16s %10s  %8s  %8s  %12s\n", "structure", "time_ms", "size", "height",
                "height_bound");

    TimerTree timer_tree(k->num, k->den);
    const double timer_ms = run_ops(timer_tree);
    const std::uint64_t bound =
        timer_tree.size() ? height_bound(timer_tree.size(), k->num, k->den) : 0;
    const std::string label = "timer(k=" + cfg.k_text + ")";
    std::printf("%-16s %10.3f  %8llu  %8llu  %12llu\n", label.c_str(), timer_ms,
                static_cast<unsigned long long>(timer_tree.size()),
                static_cast<unsigned long long>(timer_tree.height()),
                static_cast<unsigned long long>(bound));

    if (cfg.baseline == "naive") {
        NaiveBst naive;
        const double naive_ms = run_ops(naive);
        std::printf("%-16s %10.3f  %8llu  %8llu  %12s\n", "naive", naive_ms,
                    static_cast<unsigned long long>(naive.size()),
                    static_cast<unsigned long long>(naive.height()), "-");
    }
    return kExitOk;
}

struct DemoConfig {
    std::uint64_t n = 8;
    std::string k_text = "1/2";
};

void render(const TreeNode* node, int depth, std::string& out) {
    if (!node) return;
    render(node->right.get(), depth + 1, out);
    out.append(static_cast<std::size_t>(4 * depth), ' ');
    out += std::to_string(node->key) + " [t=" + std::to_string(node->timer) + "/" +
           std::to_string(node->timer_start) + "]\n";
    render(node->left.get(), depth + 1, out);
}

int cmd_demo(const DemoConfig& cfg) {
    const auto k = parse_k(cfg.k_text);
    if (!k) {
        std::cerr << "error: k must be NUM/DEN with 0 < NUM < DEN, got '" << cfg.k_text << "'\n";
        return kExitUsage;
    }
    TimerTree tree(k->num, k->den);
    MetricsSink sink;
    tree.attach_sink(&sink);
    std::cout << "ascending inserts 1.." << cfg.n << " with k=" << k->num << "/" << k->den
              << "; timers shown as t=<remaining>/<start>\n";
    std::size_t triggers_seen = 0;
    for (std::uint64_t i = 1; i <= cfg.n; ++i) {
        tree.insert(static_cast<key_type>(i));
        std::cout << "\nstep " << i << ": insert " << i;
        if (triggers_seen < sink.triggers().size()) {
            const Event& e = sink.triggers()[triggers_seen++];
            std::cout << "  -> timer hit 0 at depth " << e.depth << ", rebuilt a subtree of size "
                      << e.subtree_size;
        }
        std::cout << "\n";
        std::string picture;
        render(tree.root(), 1, picture);
        std::cout << picture;
    }
    std::cout << "\nfinal: size=" << tree.size() << " height=" << tree.height()
              << " height_bound=" << height_bound(tree.size(), k->num, k->den)
              << " rebuilds=" << sink.counters().total_rebuilds << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balance-criterion-free ordered set: scheduled-rebuild workload runner"};
    app.require_subcommand(1);

    RunConfig run_cfg;
    CLI::App* run_cmd = app.add_subcommand("run", "replay a workload with invariant checks");
    run_cmd->add_option("--workload", run_cfg.workload,
                        "ascending|descending|zigzag|random-insert|random-mixed|churn");
    run_cmd->add_option("--n", run_cfg.n, "workload size parameter");
    run_cmd->add_option("--seed", run_cfg.seed, "workload seed");
    run_cmd->add_option("--k", run_cfg.k_text, "rebalance fraction as NUM/DEN in (0,1)");
    run_cmd->add_option("--seeds", run_cfg.seeds, "comma-separated seed list")->delimiter(',');
    run_cmd->add_option("--ks", run_cfg.ks, "comma-separated k list")->delimiter(',');
    run_cmd->add_option("--check-every", run_cfg.check_every,
                        "structural sweep interval in steps (0 = end of run only)");
    run_cmd->add_option("--csv", run_cfg.csv_path, "write one row per operation here");
    run_cmd->add_option("--dot", run_cfg.dot_path, "write final tree (or violation dump) here");
    run_cmd->add_option("--p-delete", run_cfg.p_delete, "random-mixed delete probability");
    run_cmd->add_option("--churn-pairs", run_cfg.churn_pairs,
                        "churn delete/insert pairs (0 = n)");
    run_cmd->add_flag("--no-per-op", run_cfg.no_per_op,
                      "skip per-operation oracle/height checks (for very large n)");
    run_cmd->add_option("--jobs", run_cfg.jobs, "threads for fanning out (seed, k) runs");

    BenchConfig bench_cfg;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the tree against a naive BST");
    bench_cmd->add_option("--workload", bench_cfg.workload,
                          "ascending|descending|zigzag|random-insert|random-mixed|churn");
    bench_cmd->add_option("--n", bench_cfg.n, "workload size parameter");
    bench_cmd->add_option("--seed", bench_cfg.seed, "workload seed");
    bench_cmd->add_option("--k", bench_cfg.k_text, "rebalance fraction as NUM/DEN in (0,1)");
    bench_cmd->add_option("--baseline", bench_cfg.baseline, "naive|none");
    bench_cmd->add_option("--p-delete", bench_cfg.p_delete, "random-mixed delete probability");
    bench_cmd->add_option("--churn-pairs", bench_cfg.churn_pairs,
                          "churn delete/insert pairs (0 = n)");

    DemoConfig demo_cfg;
    CLI::App* demo_cmd = app.add_subcommand("demo", "print small ascending inserts step by step");
    demo_cmd->add_option("--n", demo_cfg.n, "number of inserts");
    demo_cmd->add_option("--k", demo_cfg.k_text, "rebalance fraction as NUM/DEN in (0,1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(run_cmd)) return cmd_run(run_cfg);
        if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_cfg);
        if (app.got_subcommand(demo_cmd)) return cmd_demo(demo_cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
