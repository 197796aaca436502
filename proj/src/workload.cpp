#include "timertree/workload.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "timertree/dot.hpp"
#include "timertree/validation.hpp"

namespace timertree {

namespace {

// A step of random-mixed is a delete iff the top 53 bits of the draw fall
// below p_delete scaled to 2^53.
std::uint64_t delete_threshold(double p_delete) {
    if (p_delete <= 0.0) return 0;
    if (p_delete >= 1.0) return 1ull << 53;
    return static_cast<std::uint64_t>(p_delete * 9007199254740992.0);  // 2^53
}

Workload gen_random_mixed(std::uint64_t n, std::uint64_t seed, const GenParams& params) {
    Workload w{"random-mixed", seed, {}};
    w.ops.reserve(n);
    SplitMix64 rng(seed);
    const std::uint64_t threshold = delete_threshold(params.p_delete);
    const std::uint64_t universe = n < 1 ? 4 : 4 * n;
    std::vector<key_type> live;
    std::unordered_set<key_type> live_set;
    for (std::uint64_t i = 0; i < n; ++i) {
        const bool want_delete = (rng.next() >> 11) < threshold;
        if (want_delete && !live.empty()) {
            const std::uint64_t idx = rng.next_below(live.size());
            const key_type key = live[idx];
            live[idx] = live.back();
            live.pop_back();
            live_set.erase(key);
            w.ops.push_back({OpKind::erase, key});
        } else {
            const key_type key = 1 + static_cast<key_type>(rng.next_below(universe));
            if (live_set.insert(key).second) live.push_back(key);
            w.ops.push_back({OpKind::insert, key});
        }
    }
    return w;
}

}  // namespace

const std::vector<std::string>& workload_names() {
    static const std::vector<std::string> names = {"ascending",     "descending",   "zigzag",
                                                   "random-insert", "random-mixed", "churn"};
    return names;
}

Workload gen(std::string_view name, std::uint64_t n, std::uint64_t seed,
             const GenParams& params) {
    Workload w{std::string(name), seed, {}};
    SplitMix64 rng(seed);
    if (name == "ascending") {
        w.ops.reserve(n);
        for (std::uint64_t i = 1; i <= n; ++i)
            w.ops.push_back({OpKind::insert, static_cast<key_type>(i)});
    } else if (name == "descending") {
        w.ops.reserve(n);
        for (std::uint64_t i = n; i >= 1; --i)
            w.ops.push_back({OpKind::insert, static_cast<key_type>(i)});
    } else if (name == "zigzag") {
        w.ops.reserve(n);
        std::uint64_t lo = 1;
        std::uint64_t hi = n;
        bool low = true;
        while (lo <= hi) {
            const std::uint64_t key = low ? lo++ : hi--;
            w.ops.push_back({OpKind::insert, static_cast<key_type>(key)});
            low = !low;
        }
    } else if (name == "random-insert") {
        w.ops.reserve(n);
        const std::uint64_t universe = n < 1 ? 4 : 4 * n;
        for (std::uint64_t i = 0; i < n; ++i)
            w.ops.push_back({OpKind::insert, 1 + static_cast<key_type>(rng.next_below(universe))});
    } else if (name == "random-mixed") {
        return gen_random_mixed(n, seed, params);
    } else if (name == "churn") {
        // Fill 1..n, then pairs of delete + immediate re-insert of a random
        // key; the key set returns to 1..n after every pair.
        const std::uint64_t pairs = params.churn_pairs == 0 ? n : params.churn_pairs;
        w.ops.reserve(n + 2 * pairs);
        for (std::uint64_t i = 1; i <= n; ++i)
            w.ops.push_back({OpKind::insert, static_cast<key_type>(i)});
        if (n > 0) {
            for (std::uint64_t i = 0; i < pairs; ++i) {
                const auto key = static_cast<key_type>(1 + rng.next_below(n));
                w.ops.push_back({OpKind::erase, key});
                w.ops.push_back({OpKind::insert, key});
            }
        }
    } else {
        throw std::invalid_argument("unknown workload: " + std::string(name));
    }
    return w;
}

namespace {

struct Runner {
    const Workload& workload;
    const std::uint64_t k_num;
    const std::uint64_t k_den;
    const RunOptions& options;

    TimerTree tree;
    MetricsSink sink;
    OracleModel model;
    RunReport report;

    std::uint64_t prev_height = 0;
    std::uint64_t prev_decrements = 0;
    std::uint64_t prev_rebuilt_nodes = 0;
    std::size_t triggers_checked = 0;

    Runner(const Workload& w, std::uint64_t kn, std::uint64_t kd, const RunOptions& opts)
        : workload(w), k_num(kn), k_den(kd), options(opts), tree(kn, kd),
          sink(opts.keep_events) {
        tree.attach_sink(&sink);
    }

    bool fail(const char* check, std::uint64_t step) {
        report.ok = false;
        report.violation = check;
        report.violation_step = step;
        report.dot_dump = to_dot(tree);
        return false;
    }

    bool apply(const Op& op) {
        switch (op.kind) {
            case OpKind::insert:
                return tree.insert(op.key);
            case OpKind::erase:
                return tree.erase(op.key);
            case OpKind::contains:
                return tree.contains(op.key);
        }
        return false;
    }

    bool structural_sweep(std::uint64_t step) {
        if (!check_bst(tree.root())) return fail("bst-order", step);
        if (!check_timer_hygiene(tree.root())) return fail("timer-hygiene", step);
        if (subtree_size(tree.root()) != tree.size()) return fail("count-mismatch", step);
        if (!options.per_op_oracle && !oracle_equal(model, tree))
            return fail("oracle-sequence-mismatch", step);
        return true;
    }

    bool step_checks(std::uint64_t step, const Op& op, bool result) {
        const Counters& c = sink.counters();

        // Fresh triggers: credit bound per rebuild.
        for (; triggers_checked < sink.triggers().size(); ++triggers_checked) {
            if (!check_credit_bound(sink.triggers()[triggers_checked], k_num, k_den))
                return fail("credit-bound", step);
        }
        // Postconditions on the subtree the last update rebuilt.
        if (const TreeNode* r = tree.last_rebuild_root()) {
            if (!check_perfectly_balanced(r)) return fail("rebuild-not-perfectly-balanced", step);
            if (!check_timer_reset_law(r, k_num, k_den)) return fail("rebuild-timer-reset-law", step);
            if (!check_child_size_halving(r)) return fail("rebuild-child-size-halving", step);
        }

        const std::uint64_t dec_delta = c.total_decrements - prev_decrements;
        const std::uint64_t rebuilt_delta = c.total_rebuilt_nodes - prev_rebuilt_nodes;
        prev_decrements = c.total_decrements;
        prev_rebuilt_nodes = c.total_rebuilt_nodes;

        const bool want_height = options.per_op_height || options.collect_samples;
        std::uint64_t h = 0;
        std::uint64_t hb = 0;
        if (want_height) {
            h = tree.height();
            hb = tree.size() ? height_bound(tree.size(), k_num, k_den) : 0;
            if (h > report.max_height) report.max_height = h;
            // The bound caps the deepest node's edge depth, i.e. height - 1.
            if (tree.size() && h - 1 > hb) return fail("height-bound", step);
            // Decrements run along a single root-to-node path that existed
            // before the update, so they cannot outnumber its height.
            if (options.per_op_height && dec_delta > prev_height)
                return fail("decrements-exceed-height", step);
            prev_height = h;
        }

        if (options.per_op_oracle && !oracle_equal(model, tree))
            return fail("oracle-sequence-mismatch", step);

        if (options.check_every != 0 && step % options.check_every == 0) {
            if (!structural_sweep(step)) return false;
        }

        if (options.collect_samples) {
            report.samples.push_back({step, op.kind, op.key, result, tree.size(), h, hb,
                                      rebuilt_delta, c.total_decrements, c.total_rebuilt_nodes});
        }
        return true;
    }

    RunReport operator()() {
        const std::uint64_t total = workload.ops.size();
        for (std::uint64_t step = 1; step <= total; ++step) {
            const Op& op = workload.ops[step - 1];
            const bool result = apply(op);
            const bool model_result = oracle_apply(model, op.kind, op.key);
            if (result != model_result) {
                fail("oracle-result-mismatch", step);
                break;
            }
            if (!step_checks(step, op, result)) break;
        }
        if (report.ok) {
            if (structural_sweep(0)) {
                if (options.per_op_oracle && !oracle_equal(model, tree))
                    fail("oracle-sequence-mismatch", 0);
                else if (!check_height_bound(tree))
                    fail("height-bound", 0);
                else if (!check_aggregate_amortized(sink.counters(), k_num, k_den))
                    fail("aggregate-amortized", 0);
            }
        }
        report.final_size = tree.size();
        report.final_height = tree.height();
        report.final_height_bound =
            tree.size() ? height_bound(tree.size(), k_num, k_den) : 0;
        if (report.final_height > report.max_height) report.max_height = report.final_height;
        report.counters = sink.counters();
        report.triggers = sink.triggers();
        report.final_dot = to_dot(tree);
        return std::move(report);
    }
};

}  // namespace

RunReport run(const Workload& workload, std::uint64_t k_num, std::uint64_t k_den,
              const RunOptions& options) {
    return Runner(workload, k_num, k_den, options)();
}

RunReport run(const Workload& workload, std::uint64_t k_num, std::uint64_t k_den,
              std::uint64_t check_every) {
    RunOptions options;
    options.check_every = check_every;
    return run(workload, k_num, k_den, options);
}

}  // namespace timertree
