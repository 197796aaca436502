/*
 * Timer lifecycle instrumentation and the amortized-cost checks built on
 * top of it. Recording through a null sink is a no-op, so the tree runs
 * uninstrumented unless a sink is attached.
 */
#pragma once

#include <cstdint>
#include <vector>

namespace timertree {

enum class EventKind { timer_reset, decrement, rebuild_triggered };

struct Event {
    EventKind kind;
    std::uint64_t subtree_size = 0;  // timer_reset, rebuild_triggered
    std::uint64_t timer0 = 0;        // value the timer was (re)set to / held at trigger time
    std::uint64_t depth = 0;         // rebuild_triggered: depth of the target, root = 1
};

struct Counters {
    std::uint64_t total_decrements = 0;
    std::uint64_t total_rebuilds = 0;
    std::uint64_t total_rebuilt_nodes = 0;  // sum of subtree sizes at trigger
    std::uint64_t updates_succeeded = 0;
};

class MetricsSink {
public:
    // keep_events=false drops the per-event log (counters and trigger
    // events are still kept); use it for runs large enough that per-node
    // reset events would dominate memory.
    explicit MetricsSink(bool keep_events = true) : keep_events_(keep_events) {}

    void record_reset(std::uint64_t size, std::uint64_t timer0);
    void record_decrement();
    void record_trigger(std::uint64_t size, std::uint64_t timer0, std::uint64_t depth);
    void record_update_success();

    const Counters& counters() const { return counters_; }
    /// Full event log; empty when constructed with keep_events=false.
    const std::vector<Event>& events() const { return events_; }
    /// RebuildTriggered events only; always retained.
    const std::vector<Event>& triggers() const { return triggers_; }

private:
    Counters counters_;
    std::vector<Event> events_;
    std::vector<Event> triggers_;
    bool keep_events_;
};

/// Per-rebuild credit bound: size < (2/k + 1) * timer0, cross-multiplied
/// to size * k_num < (2 * k_den + k_num) * timer0 in exact integers.
bool check_credit_bound(const Event& trigger, std::uint64_t k_num, std::uint64_t k_den);

/// Whole-run credit bound: total_rebuilt_nodes < (2/k + 1) * total_decrements,
/// cross-multiplied as above. Vacuously true when nothing was rebuilt.
bool check_aggregate_amortized(const Counters& counters, std::uint64_t k_num,
                               std::uint64_t k_den);

}  // namespace timertree
