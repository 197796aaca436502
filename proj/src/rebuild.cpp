#include "timertree/rebuild.hpp"

#include <utility>

#include "timertree/metrics.hpp"

namespace timertree {

void copy_to_array(std::unique_ptr<TreeNode> node, NodeArray& array) {
    if (!node) return;
    copy_to_array(std::move(node->left), array);
    auto right = std::move(node->right);
    array.push_back(std::move(node));
    copy_to_array(std::move(right), array);
}

std::unique_ptr<TreeNode> build_tree(NodeArray& array, std::ptrdiff_t begin, std::ptrdiff_t end,
                                     std::uint64_t k_num, std::uint64_t k_den, MetricsSink* sink) {
    if (begin > end) return nullptr;
    const std::ptrdiff_t m = (begin + end) / 2;  // lower median
    std::unique_ptr<TreeNode> root = std::move(array[m]);
    root->left = build_tree(array, begin, m - 1, k_num, k_den, sink);
    root->right = build_tree(array, m + 1, end, k_num, k_den, sink);
    const auto size = static_cast<std::uint64_t>(end - begin + 1);
    const std::uint64_t t = timer_reset_value(size, k_num, k_den);
    root->timer = t;
    root->timer_start = t;
    if (sink) sink->record_reset(size, t);
    return root;
}

std::unique_ptr<TreeNode> rebuild(std::unique_ptr<TreeNode> node, std::uint64_t k_num,
                                  std::uint64_t k_den, MetricsSink* sink) {
    NodeArray array;
    copy_to_array(std::move(node), array);
    return build_tree(array, 0, static_cast<std::ptrdiff_t>(array.size()) - 1, k_num, k_den,
                      sink);
}

}  // namespace timertree
