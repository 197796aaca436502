#include "timertree/tree.hpp"

#include <stdexcept>
#include <utility>

#include "timertree/metrics.hpp"
#include "timertree/rebuild.hpp"

namespace timertree {

std::uint64_t timer_reset_value(std::uint64_t n, std::uint64_t k_num, std::uint64_t k_den) {
    const auto scaled =
        static_cast<std::uint64_t>(static_cast<unsigned __int128>(k_num) * n / k_den);
    return scaled < 1 ? 1 : scaled;
}

const TreeNode& min_node(const TreeNode& node) {
    const TreeNode* n = &node;
    while (n->left) n = n->left.get();
    return *n;
}

std::uint64_t subtree_size(const TreeNode* node) {
    if (!node) return 0;
    return 1 + subtree_size(node->left.get()) + subtree_size(node->right.get());
}

void decrement_and_mark(TreeNode& node, UpdateContext& ctx, MetricsSink* sink) {
    --node.timer;
    if (sink) sink->record_decrement();
    if (node.timer == 0) {
        // Deeper timer-0 nodes were recorded first; this overwrite leaves
        // the least-deep one as the final target.
        ctx.rebuild_target = &node;
        ctx.target_parent = nullptr;
        ctx.target_dir = ChildDir::root;
    }
    if (ctx.rebuild_target) {
        if (node.left.get() == ctx.rebuild_target) {
            ctx.target_parent = &node;
            ctx.target_dir = ChildDir::left;
        } else if (node.right.get() == ctx.rebuild_target) {
            ctx.target_parent = &node;
            ctx.target_dir = ChildDir::right;
        }
    }
}

TimerTree::TimerTree(std::uint64_t k_num, std::uint64_t k_den) : k_num_(k_num), k_den_(k_den) {
    if (k_num == 0 || k_num >= k_den)
        throw std::invalid_argument("rebalance fraction k must satisfy 0 < k_num/k_den < 1");
}

bool TimerTree::insert(key_type key) {
    last_rebuild_root_ = nullptr;
    UpdateContext ctx;
    root_ = insert_rec(std::move(root_), key, ctx);
    if (!ctx.succeeded) return false;
    ++count_;
    if (sink_) sink_->record_update_success();
    if (ctx.rebuild_target) apply_rebuild(ctx);
    return true;
}

std::unique_ptr<TreeNode> TimerTree::insert_rec(std::unique_ptr<TreeNode> node, key_type key,
                                                UpdateContext& ctx) {
    if (!node) {
        ctx.succeeded = true;
        auto fresh = std::make_unique<TreeNode>(key);  // timer = timer_start = 1
        if (sink_) sink_->record_reset(1, 1);
        return fresh;
    }
    if (key < node->key) {
        node->left = insert_rec(std::move(node->left), key, ctx);
    } else if (key > node->key) {
        node->right = insert_rec(std::move(node->right), key, ctx);
    } else {
        ctx.succeeded = false;
        return node;
    }
    if (ctx.succeeded) decrement_and_mark(*node, ctx, sink_);
    return node;
}

bool TimerTree::erase(key_type key) {
    last_rebuild_root_ = nullptr;
    UpdateContext ctx;
    root_ = erase_rec(std::move(root_), key, ctx);
    if (!ctx.succeeded) return false;
    --count_;
    if (sink_) sink_->record_update_success();
    if (ctx.rebuild_target) apply_rebuild(ctx);
    return true;
}

std::unique_ptr<TreeNode> TimerTree::erase_rec(std::unique_ptr<TreeNode> node, key_type key,
                                               UpdateContext& ctx) {
    if (!node) {
        ctx.succeeded = false;
        return node;
    }
    if (key < node->key) {
        node->left = erase_rec(std::move(node->left), key, ctx);
    } else if (key > node->key) {
        node->right = erase_rec(std::move(node->right), key, ctx);
    } else if (node->left && node->right) {
        // Two children: take over the inorder successor's key and delete
        // that key from the right subtree instead.
        node->key = min_node(*node->right).key;
        node->right = erase_rec(std::move(node->right), node->key, ctx);
    } else {
        // The physical removal; the surviving child (if any) moves up
        // keeping its own timer. No decrement here, the node is gone.
        ctx.succeeded = true;
        return node->left ? std::move(node->left) : std::move(node->right);
    }
    if (ctx.succeeded) decrement_and_mark(*node, ctx, sink_);
    return node;
}

bool TimerTree::contains(key_type key) const {
    const TreeNode* n = root_.get();
    while (n) {
        if (key < n->key)
            n = n->left.get();
        else if (key > n->key)
            n = n->right.get();
        else
            return true;
    }
    return false;
}

namespace {

std::uint64_t height_of(const TreeNode* node) {
    if (!node) return 0;
    const std::uint64_t l = height_of(node->left.get());
    const std::uint64_t r = height_of(node->right.get());
    return 1 + (l > r ? l : r);
}

void in_order_collect(const TreeNode* node, std::vector<key_type>& out) {
    if (!node) return;
    in_order_collect(node->left.get(), out);
    out.push_back(node->key);
    in_order_collect(node->right.get(), out);
}

}  // namespace

std::uint64_t TimerTree::height() const { return height_of(root_.get()); }

std::vector<key_type> TimerTree::in_order() const {
    std::vector<key_type> out;
    out.reserve(count_);
    in_order_collect(root_.get(), out);
    return out;
}

void TimerTree::apply_rebuild(UpdateContext& ctx) {
    std::unique_ptr<TreeNode>& slot =
        ctx.target_parent
            ? (ctx.target_dir == ChildDir::left ? ctx.target_parent->left
                                                : ctx.target_parent->right)
            : root_;
    if (sink_) {
        sink_->record_trigger(subtree_size(ctx.rebuild_target), ctx.rebuild_target->timer_start,
                              node_depth(*ctx.rebuild_target));
    }
    slot = rebuild(std::move(slot), k_num_, k_den_, sink_);
    last_rebuild_root_ = slot.get();
}

std::uint64_t TimerTree::node_depth(const TreeNode& target) const {
    const TreeNode* n = root_.get();
    std::uint64_t depth = 1;
    while (n && n != &target) {
        n = target.key < n->key ? n->left.get() : n->right.get();
        ++depth;
    }
    return n ? depth : 0;
}

}  // namespace timertree
