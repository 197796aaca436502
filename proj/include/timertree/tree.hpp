/*
 * Ordered integer set kept balanced by scheduled partial rebuilds.
 *
 * Every node carries a countdown timer. A successful insert or delete
 * decrements the timer of each node on the update path while the
 * recursion unwinds; when a timer hits zero, the subtree rooted at the
 * least-deep such node is rebuilt perfectly balanced and all timers in
 * it are reset to max(1, floor(k * subtree_size)). No balance criterion
 * is ever evaluated.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace timertree {

using key_type = std::int64_t;

class MetricsSink;

enum class OpKind { insert, erase, contains };

struct TreeNode {
    explicit TreeNode(key_type k) : key(k) {}

    key_type key;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    // Remaining successful updates in this subtree before it is rebuilt.
    // Stays in [1, timer_start] between public operations.
    std::uint64_t timer = 1;
    // Value the timer held at its last (re)set.
    std::uint64_t timer_start = 1;
};

enum class ChildDir { left, right, root };

// Per-update scratch threaded through the recursive insert/erase.
struct UpdateContext {
    bool succeeded = false;
    TreeNode* rebuild_target = nullptr;
    TreeNode* target_parent = nullptr;
    ChildDir target_dir = ChildDir::root;
};

/// max(1, floor(k_num * n / k_den)), exact in integers.
std::uint64_t timer_reset_value(std::uint64_t n, std::uint64_t k_num, std::uint64_t k_den);

/// Leftmost node of a subtree.
const TreeNode& min_node(const TreeNode& node);

std::uint64_t subtree_size(const TreeNode* node);

/// Unwind step at one node of a successful update: decrement the timer,
/// take over the rebuild target if it just hit zero (the unwind visits
/// nodes deepest-first, so the last writer is the least-deep one), and
/// record the parent link when a child holds the current target.
void decrement_and_mark(TreeNode& node, UpdateContext& ctx, MetricsSink* sink);

class TimerTree {
public:
    TimerTree() : TimerTree(1, 2) {}
    // Requires 0 < k_num < k_den; throws std::invalid_argument otherwise.
    TimerTree(std::uint64_t k_num, std::uint64_t k_den);

    TimerTree(TimerTree&&) noexcept = default;
    TimerTree& operator=(TimerTree&&) noexcept = default;

    /// Returns false (and changes nothing) when the key is already present.
    bool insert(key_type key);
    /// Returns false (and changes nothing) when the key is absent.
    bool erase(key_type key);
    bool contains(key_type key) const;

    std::uint64_t size() const { return count_; }
    /// Nodes on the longest root-to-leaf path; 0 for the empty tree.
    std::uint64_t height() const;
    /// Keys in ascending order.
    std::vector<key_type> in_order() const;

    std::uint64_t k_num() const { return k_num_; }
    std::uint64_t k_den() const { return k_den_; }

    const TreeNode* root() const { return root_.get(); }

    /// Root of the subtree rebuilt by the most recent update, or nullptr
    /// if that update rebuilt nothing. Valid until the next update.
    const TreeNode* last_rebuild_root() const { return last_rebuild_root_; }

    /// Optional instrumentation; pass nullptr to detach. The sink must
    /// outlive every subsequent operation on this tree.
    void attach_sink(MetricsSink* sink) { sink_ = sink; }

private:
    std::unique_ptr<TreeNode> insert_rec(std::unique_ptr<TreeNode> node, key_type key,
                                         UpdateContext& ctx);
    std::unique_ptr<TreeNode> erase_rec(std::unique_ptr<TreeNode> node, key_type key,
                                        UpdateContext& ctx);
    void apply_rebuild(UpdateContext& ctx);
    std::uint64_t node_depth(const TreeNode& target) const;

    std::unique_ptr<TreeNode> root_;
    std::uint64_t k_num_;
    std::uint64_t k_den_;
    std::uint64_t count_ = 0;
    MetricsSink* sink_ = nullptr;
    const TreeNode* last_rebuild_root_ = nullptr;
};

}  // namespace timertree
