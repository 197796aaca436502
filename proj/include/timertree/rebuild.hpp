/*
 * Partial rebuilding: flatten a subtree into a sorted array of the same
 * nodes, then relink them into a perfectly balanced shape with every
 * timer reset for its new subtree size.
 */
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "timertree/tree.hpp"

namespace timertree {

class MetricsSink;

using NodeArray = std::vector<std::unique_ptr<TreeNode>>;

/// In-order traversal appending every node of the subtree to `array`.
/// Nodes are moved, not cloned; their child links are left empty.
void copy_to_array(std::unique_ptr<TreeNode> node, NodeArray& array);

/// Perfectly balanced subtree over array[begin..end] (inclusive; an empty
/// range yields nullptr). The lower median becomes the root and each
/// node's timer and timer_start are reset to timer_reset_value of its own
/// subtree size.
std::unique_ptr<TreeNode> build_tree(NodeArray& array, std::ptrdiff_t begin, std::ptrdiff_t end,
                                     std::uint64_t k_num, std::uint64_t k_den,
                                     MetricsSink* sink = nullptr);

/// copy_to_array + build_tree over the whole subtree. Records one
/// TimerReset event per node when a sink is attached.
std::unique_ptr<TreeNode> rebuild(std::unique_ptr<TreeNode> node, std::uint64_t k_num,
                                  std::uint64_t k_den, MetricsSink* sink = nullptr);

}  // namespace timertree
