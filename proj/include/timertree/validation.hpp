/*
 * Structural checkers for the tree's guarantees plus a sorted-sequence
 * reference model for black-box equivalence testing. All checkers are
 * pure functions over a quiescent tree.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "timertree/tree.hpp"

namespace timertree {

/// In-order keys strictly ascending.
bool check_bst(const TreeNode* node);

/// Left and right subtree sizes differ by at most 1 at every node.
bool check_perfectly_balanced(const TreeNode* node);

/// 1 <= timer <= timer_start at every node.
bool check_timer_hygiene(const TreeNode* node);

/// Upper bound on the deepest node's edge depth (number of parent links
/// from the root; a single node sits at depth 0) in a tree of size n:
/// floor(log_b(n / (2 - 2k))) + 1 with b = (2 + 2k) / (1 + 2k), evaluated
/// by exact rational power comparison so the floor is never off by one;
/// 1 when n / (2 - 2k) < 1. In node-count terms the longest path holds at
/// most height_bound + 1 nodes, and the edge form is tight: a perfectly
/// balanced 2-node tree at k = 1/4 has edge depth 1 == height_bound(2).
std::uint64_t height_bound(std::uint64_t n, std::uint64_t k_num, std::uint64_t k_den);

/// height(tree) - 1 <= height_bound(size, k), i.e. the deepest node's
/// edge depth stays under the bound; empty trees pass.
bool check_height_bound(const TimerTree& tree);

/// Every node of a just-rebuilt subtree has
/// timer == timer_start == timer_reset_value(its own subtree size).
bool check_timer_reset_law(const TreeNode* node, std::uint64_t k_num, std::uint64_t k_den);

/// Every node's child subtrees hold at most floor(size/2) nodes each,
/// size being the node's own subtree size.
bool check_child_size_halving(const TreeNode* node);

// Reference model: the set as a sorted vector.
class OracleModel {
public:
    bool insert(key_type key);
    bool erase(key_type key);
    bool contains(key_type key) const;

    std::size_t size() const { return keys_.size(); }
    const std::vector<key_type>& keys() const { return keys_; }

private:
    std::vector<key_type> keys_;
};

/// Mirrors the tree's insert/erase/contains result semantics on the model.
bool oracle_apply(OracleModel& model, OpKind op, key_type key);

/// True iff the tree's in-order key sequence equals the model exactly.
bool oracle_equal(const OracleModel& model, const TimerTree& tree);

}  // namespace timertree
