/*
 * Deterministic operation-sequence generators and a runner that drives a
 * tree, the reference model, and the checkers in lockstep.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "timertree/metrics.hpp"
#include "timertree/tree.hpp"

namespace timertree {

// splitmix64 (public-domain mix function). Chosen over a platform RNG so
// workloads replay bit-identically anywhere, including other languages.
struct SplitMix64 {
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Modulo-reduced; the bias is irrelevant for workload generation and
    // keeps the mapping trivially reproducible.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    std::uint64_t state;
};

struct Op {
    OpKind kind;
    key_type key;

    friend bool operator==(const Op&, const Op&) = default;
};

struct Workload {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<Op> ops;
};

struct GenParams {
    double p_delete = 0.4;         // random-mixed: probability a step is a delete
    std::uint64_t churn_pairs = 0;  // churn: delete/insert pairs after the fill; 0 means n
};

/// Builds one of the named workloads: ascending, descending, zigzag,
/// random-insert, random-mixed, churn. Same (name, n, seed, params)
/// always yields the same sequence. Throws std::invalid_argument for an
/// unknown name.
Workload gen(std::string_view name, std::uint64_t n, std::uint64_t seed,
             const GenParams& params = {});

const std::vector<std::string>& workload_names();

struct RunOptions {
    // Run the O(n) structural sweep (BST order, timer hygiene, node count)
    // every this many steps; 0 = only at the end.
    std::uint64_t check_every = 0;
    // Compare the full in-order sequence against the model after every op.
    bool per_op_oracle = true;
    // Recompute the height and check it against height_bound after every op.
    bool per_op_height = true;
    // Keep one StepSample per op (the CSV rows).
    bool collect_samples = false;
    // Retain the full per-event log in the sink, not just counters/triggers.
    bool keep_events = false;
};

struct StepSample {
    std::uint64_t step = 0;  // 1-based
    OpKind op = OpKind::insert;
    key_type key = 0;
    bool success = false;
    std::uint64_t size = 0;
    std::uint64_t height = 0;
    std::uint64_t height_bound = 0;
    std::uint64_t rebuild_size = 0;  // 0 when no rebuild fired at this step
    std::uint64_t total_decrements = 0;
    std::uint64_t total_rebuilt_nodes = 0;

    friend bool operator==(const StepSample&, const StepSample&) = default;
};

struct RunReport {
    bool ok = true;
    std::string violation;            // name of the violated check; empty when ok
    std::uint64_t violation_step = 0;  // 1-based; 0 = end-of-run check
    std::string dot_dump;             // tree at the moment of violation
    std::string final_dot;            // tree after the last op

    std::uint64_t final_size = 0;
    std::uint64_t final_height = 0;
    std::uint64_t final_height_bound = 0;
    std::uint64_t max_height = 0;  // over the steps where height was computed
    Counters counters;
    std::vector<Event> triggers;
    std::vector<StepSample> samples;
};

/// Feeds the workload to a fresh tree with an attached sink and a parallel
/// reference model, checking as it goes: per op the result and (optionally)
/// the in-order sequence against the model, the height bound, the
/// per-trigger credit bound, and the three rebuild postconditions on any
/// just-rebuilt subtree; per check_every steps plus at the end, the full
/// structural sweep and the aggregate credit bound. Stops at the first
/// violation with a diagnostic DOT dump in the report.
RunReport run(const Workload& workload, std::uint64_t k_num, std::uint64_t k_den,
              const RunOptions& options = {});

/// Convenience overload: default options except check_every.
RunReport run(const Workload& workload, std::uint64_t k_num, std::uint64_t k_den,
              std::uint64_t check_every);

}  // namespace timertree
