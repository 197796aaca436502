#include <doctest.h>

#include <set>
#include <stdexcept>

#include "timertree/workload.hpp"

using namespace timertree;

TEST_CASE("ascending, descending and zigzag sequences") {
    const Workload asc = gen("ascending", 3, 0);
    REQUIRE(asc.ops.size() == 3);
    CHECK(asc.ops[0] == Op{OpKind::insert, 1});
    CHECK(asc.ops[1] == Op{OpKind::insert, 2});
    CHECK(asc.ops[2] == Op{OpKind::insert, 3});

    const Workload desc = gen("descending", 3, 0);
    CHECK(desc.ops[0].key == 3);
    CHECK(desc.ops[2].key == 1);

    const Workload zig = gen("zigzag", 4, 0);
    REQUIRE(zig.ops.size() == 4);
    CHECK(zig.ops[0].key == 1);
    CHECK(zig.ops[1].key == 4);
    CHECK(zig.ops[2].key == 2);
    CHECK(zig.ops[3].key == 3);

    const Workload zig5 = gen("zigzag", 5, 0);
    CHECK(zig5.ops[4].key == 3);  // middle element arrives last
}

TEST_CASE("unknown workload name is a usage error") {
    CHECK_THROWS_AS(gen("bogus", 10, 0), std::invalid_argument);
}

TEST_CASE("generation is deterministic in the seed") {
    const Workload a = gen("random-mixed", 2000, 42);
    const Workload b = gen("random-mixed", 2000, 42);
    CHECK(a.ops == b.ops);

    const Workload c = gen("random-mixed", 2000, 43);
    CHECK(a.ops != c.ops);

    CHECK(gen("random-insert", 500, 7).ops == gen("random-insert", 500, 7).ops);
}

TEST_CASE("random-mixed deletes target previously inserted keys") {
    GenParams params;
    params.p_delete = 0.4;
    const Workload w = gen("random-mixed", 10000, 9, params);
    REQUIRE(w.ops.size() == 10000);

    std::set<key_type> inserted;
    std::uint64_t deletes = 0;
    for (const Op& op : w.ops) {
        if (op.kind == OpKind::insert) {
            inserted.insert(op.key);
        } else {
            REQUIRE(op.kind == OpKind::erase);
            ++deletes;
            CHECK(inserted.count(op.key) == 1);
        }
    }
    // Loose sanity band around p_delete (deterministic for this seed).
    CHECK(deletes > 3000);
    CHECK(deletes < 5000);
}

TEST_CASE("random-mixed with p_delete=0 only inserts") {
    GenParams params;
    params.p_delete = 0.0;
    const Workload w = gen("random-mixed", 300, 4, params);
    for (const Op& op : w.ops) CHECK(op.kind == OpKind::insert);
}

TEST_CASE("churn fills then alternates delete/insert pairs on the same key") {
    GenParams params;
    params.churn_pairs = 3;
    const Workload w = gen("churn", 4, 1, params);
    REQUIRE(w.ops.size() == 4 + 6);
    for (int i = 0; i < 4; ++i) {
        CHECK(w.ops[i].kind == OpKind::insert);
        CHECK(w.ops[i].key == i + 1);
    }
    for (int p = 0; p < 3; ++p) {
        const Op& del = w.ops[4 + 2 * p];
        const Op& ins = w.ops[4 + 2 * p + 1];
        CHECK(del.kind == OpKind::erase);
        CHECK(ins.kind == OpKind::insert);
        CHECK(del.key == ins.key);
        CHECK(del.key >= 1);
        CHECK(del.key <= 4);
    }
}

TEST_CASE("run of ascending n=3 reproduces the hand trace") {
    const RunReport rep = run(gen("ascending", 3, 0), 1, 2, std::uint64_t{1});
    CHECK(rep.ok);
    CHECK(rep.final_size == 3);
    CHECK(rep.final_height == 2);
    CHECK(rep.counters.total_decrements == 3);
    CHECK(rep.counters.total_rebuilds == 2);
    CHECK(rep.counters.total_rebuilt_nodes == 5);
    REQUIRE(rep.triggers.size() == 2);
    CHECK(rep.triggers[0].subtree_size == 2);
    CHECK(rep.triggers[1].subtree_size == 3);
    // Final tree is the balanced {1,2,3} with every timer reset to 1.
    CHECK(rep.final_dot.find("n0 [label=\"2\\nt=1/1\"];") != std::string::npos);
}

TEST_CASE("run of an empty workload reports zeros") {
    const RunReport rep = run(gen("ascending", 0, 0), 1, 2, std::uint64_t{0});
    CHECK(rep.ok);
    CHECK(rep.final_size == 0);
    CHECK(rep.final_height == 0);
    CHECK(rep.final_height_bound == 0);
    CHECK(rep.counters.total_decrements == 0);
    CHECK(rep.counters.total_rebuilds == 0);
    CHECK(rep.counters.updates_succeeded == 0);
    CHECK(rep.samples.empty());
}

TEST_CASE("random-mixed 10^4 with sampling interval passes all checks") {
    const RunReport rep = run(gen("random-mixed", 10000, 5), 1, 2, std::uint64_t{100});
    CHECK(rep.ok);
    CHECK(rep.violation.empty());
    CHECK(rep.counters.total_rebuilds > 0);
}

TEST_CASE("identical parameters replay to identical reports") {
    RunOptions options;
    options.check_every = 50;
    options.collect_samples = true;
    const RunReport a = run(gen("random-mixed", 2000, 21), 1, 2, options);
    const RunReport b = run(gen("random-mixed", 2000, 21), 1, 2, options);
    REQUIRE(a.ok);
    REQUIRE(b.ok);
    CHECK(a.final_size == b.final_size);
    CHECK(a.max_height == b.max_height);
    CHECK(a.counters.total_decrements == b.counters.total_decrements);
    CHECK(a.counters.total_rebuilds == b.counters.total_rebuilds);
    CHECK(a.counters.total_rebuilt_nodes == b.counters.total_rebuilt_nodes);
    CHECK(a.counters.updates_succeeded == b.counters.updates_succeeded);
    CHECK(a.samples == b.samples);
    CHECK(a.final_dot == b.final_dot);
}

TEST_CASE("every built-in workload stays clean for each k (property)") {
    const std::uint64_t ks[][2] = {{1, 4}, {1, 2}, {3, 4}};
    for (const std::string& name : workload_names()) {
        for (const auto& k : ks) {
            const RunReport rep = run(gen(name, 500, 13), k[0], k[1], std::uint64_t{25});
            INFO(name, " k=", k[0], "/", k[1], " violation=", rep.violation);
            CHECK(rep.ok);
        }
    }
}

TEST_CASE("extreme rebalance fractions stay clean") {
    // k -> 0: a rebuild after almost every update; k -> 1: hardly any.
    const RunReport eager = run(gen("random-mixed", 2000, 17), 1, 1000, std::uint64_t{50});
    CHECK(eager.ok);
    CHECK(eager.counters.total_rebuilds >= eager.counters.updates_succeeded / 2);

    const RunReport lazy = run(gen("random-mixed", 2000, 17), 999, 1000, std::uint64_t{50});
    CHECK(lazy.ok);
    CHECK(lazy.counters.total_rebuilds < eager.counters.total_rebuilds);
}

TEST_CASE("max observed height respects the bound at every sampled size") {
    RunOptions options;
    options.collect_samples = true;
    const RunReport rep = run(gen("churn", 800, 3), 1, 2, options);
    REQUIRE(rep.ok);
    std::uint64_t max_bound = 0;
    for (const StepSample& s : rep.samples)
        if (s.height_bound > max_bound) max_bound = s.height_bound;
    CHECK(rep.max_height <= max_bound);
}
