#include "timertree/metrics.hpp"

namespace timertree {

void MetricsSink::record_reset(std::uint64_t size, std::uint64_t timer0) {
    if (keep_events_) events_.push_back({EventKind::timer_reset, size, timer0, 0});
}

void MetricsSink::record_decrement() {
    ++counters_.total_decrements;
    if (keep_events_) events_.push_back({EventKind::decrement, 0, 0, 0});
}

void MetricsSink::record_trigger(std::uint64_t size, std::uint64_t timer0, std::uint64_t depth) {
    ++counters_.total_rebuilds;
    counters_.total_rebuilt_nodes += size;
    const Event e{EventKind::rebuild_triggered, size, timer0, depth};
    triggers_.push_back(e);
    if (keep_events_) events_.push_back(e);
}

void MetricsSink::record_update_success() { ++counters_.updates_succeeded; }

namespace {
using u128 = unsigned __int128;
}

bool check_credit_bound(const Event& trigger, std::uint64_t k_num, std::uint64_t k_den) {
    return u128(trigger.subtree_size) * k_num < (u128(2) * k_den + k_num) * trigger.timer0;
}

bool check_aggregate_amortized(const Counters& counters, std::uint64_t k_num,
                               std::uint64_t k_den) {
    if (counters.total_rebuilt_nodes == 0) return true;
    return u128(counters.total_rebuilt_nodes) * k_num <
           (u128(2) * k_den + k_num) * counters.total_decrements;
}

}  // namespace timertree
