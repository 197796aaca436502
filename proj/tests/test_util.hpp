#pragma once

#include <memory>
#include <utility>

#include <doctest.h>

#include "timertree/tree.hpp"

namespace testutil {

inline std::unique_ptr<timertree::TreeNode> node(
    timertree::key_type key, std::uint64_t timer, std::uint64_t timer_start,
    std::unique_ptr<timertree::TreeNode> left = nullptr,
    std::unique_ptr<timertree::TreeNode> right = nullptr) {
    auto n = std::make_unique<timertree::TreeNode>(key);
    n->timer = timer;
    n->timer_start = timer_start;
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

inline void expect_node(const timertree::TreeNode* n, timertree::key_type key,
                        std::uint64_t timer, std::uint64_t timer_start) {
    REQUIRE(n != nullptr);
    CHECK(n->key == key);
    CHECK(n->timer == timer);
    CHECK(n->timer_start == timer_start);
}

inline std::uint64_t node_height(const timertree::TreeNode* n) {
    if (!n) return 0;
    const auto l = node_height(n->left.get());
    const auto r = node_height(n->right.get());
    return 1 + (l > r ? l : r);
}

}  // namespace testutil
