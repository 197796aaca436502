#include <doctest.h>

#include <vector>

#include "timertree/metrics.hpp"
#include "timertree/rebuild.hpp"
#include "timertree/tree.hpp"
#include "timertree/validation.hpp"
#include "timertree/workload.hpp"

#include "test_util.hpp"

using namespace timertree;
using testutil::expect_node;
using testutil::node;

namespace {

std::unique_ptr<TreeNode> right_spine(key_type from, key_type to) {
    std::unique_ptr<TreeNode> head;
    for (key_type k = to; k >= from; --k) head = node(k, 1, 1, nullptr, std::move(head));
    return head;
}

std::vector<key_type> keys_of(const NodeArray& array) {
    std::vector<key_type> out;
    for (const auto& n : array) out.push_back(n->key);
    return out;
}

std::vector<key_type> in_order_keys(const TreeNode* n) {
    std::vector<key_type> out;
    if (!n) return out;
    out = in_order_keys(n->left.get());
    out.push_back(n->key);
    const auto right = in_order_keys(n->right.get());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

}  // namespace

TEST_CASE("copy_to_array") {
    NodeArray array;

    SUBCASE("absent subtree leaves the array unchanged") {
        copy_to_array(nullptr, array);
        CHECK(array.empty());
    }

    SUBCASE("single node") {
        copy_to_array(node(5, 1, 1), array);
        CHECK(keys_of(array) == std::vector<key_type>{5});
    }

    SUBCASE("in-order flattening and appending") {
        copy_to_array(node(2, 1, 1, node(1, 1, 1), node(3, 1, 1)), array);
        CHECK(keys_of(array) == std::vector<key_type>{1, 2, 3});

        copy_to_array(node(9, 1, 1), array);  // appends after existing content
        CHECK(keys_of(array) == std::vector<key_type>{1, 2, 3, 9});
    }

    SUBCASE("spine flattens sorted") {
        copy_to_array(right_spine(1, 5), array);
        CHECK(keys_of(array) == std::vector<key_type>{1, 2, 3, 4, 5});
    }
}

TEST_CASE("build_tree golden over [1..5] with k=1/2") {
    NodeArray array;
    copy_to_array(right_spine(1, 5), array);
    const auto root = build_tree(array, 0, 4, 1, 2);

    expect_node(root.get(), 3, 2, 2);
    expect_node(root->left.get(), 1, 1, 1);
    CHECK(root->left->left == nullptr);
    expect_node(root->left->right.get(), 2, 1, 1);
    expect_node(root->right.get(), 4, 1, 1);
    CHECK(root->right->left == nullptr);
    expect_node(root->right->right.get(), 5, 1, 1);
}

TEST_CASE("build_tree edge ranges") {
    NodeArray array;
    CHECK(build_tree(array, 0, -1, 1, 2) == nullptr);

    copy_to_array(node(7, 3, 9), array);
    const auto single = build_tree(array, 0, 0, 1, 2);
    expect_node(single.get(), 7, 1, 1);  // size-1 clamp resets 3/9 to 1/1
}

TEST_CASE("rebuild of a right spine equals building from the sorted array") {
    const auto rebuilt = rebuild(right_spine(1, 5), 1, 2);
    expect_node(rebuilt.get(), 3, 2, 2);
    expect_node(rebuilt->left.get(), 1, 1, 1);
    expect_node(rebuilt->left->right.get(), 2, 1, 1);
    expect_node(rebuilt->right.get(), 4, 1, 1);
    expect_node(rebuilt->right->right.get(), 5, 1, 1);
    CHECK(check_perfectly_balanced(rebuilt.get()));
    CHECK(check_timer_reset_law(rebuilt.get(), 1, 2));
}

TEST_CASE("rebuild is shape-idempotent and resets timers again") {
    auto first = rebuild(right_spine(1, 5), 1, 2);
    first->timer = 1;  // pretend an update went through
    auto second = rebuild(std::move(first), 1, 2);
    expect_node(second.get(), 3, 2, 2);
    CHECK(check_perfectly_balanced(second.get()));
    CHECK(check_timer_reset_law(second.get(), 1, 2));
}

TEST_CASE("two-node rebuild roots the smaller key") {
    auto rebuilt = rebuild(node(2, 1, 1, node(1, 1, 1)), 1, 2);
    expect_node(rebuilt.get(), 1, 1, 1);
    CHECK(rebuilt->left == nullptr);
    expect_node(rebuilt->right.get(), 2, 1, 1);
}

TEST_CASE("rebuilt sizes 3 and 7 are complete trees") {
    CHECK(testutil::node_height(rebuild(right_spine(1, 3), 1, 2).get()) == 2);
    CHECK(testutil::node_height(rebuild(right_spine(1, 7), 1, 2).get()) == 3);
    CHECK(testutil::node_height(rebuild(right_spine(1, 15), 1, 2).get()) == 4);
}

TEST_CASE("rebuild records one TimerReset per node in build order") {
    MetricsSink sink;
    const auto rebuilt = rebuild(right_spine(1, 5), 1, 2, &sink);
    REQUIRE(rebuilt != nullptr);

    REQUIRE(sink.events().size() == 5);
    const std::vector<std::uint64_t> sizes = {1, 2, 1, 2, 5};
    const std::vector<std::uint64_t> timers = {1, 1, 1, 1, 2};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(sink.events()[i].kind == EventKind::timer_reset);
        CHECK(sink.events()[i].subtree_size == sizes[i]);
        CHECK(sink.events()[i].timer0 == timers[i]);
    }
}

TEST_CASE("rebuild properties across sizes and k values (property)") {
    const std::uint64_t ks[][2] = {{1, 4}, {1, 2}, {3, 4}};
    SplitMix64 rng(99);
    for (const auto& k : ks) {
        for (std::uint64_t n = 1; n <= 150; ++n) {
            auto spine = right_spine(1, static_cast<key_type>(n));
            for (TreeNode* p = spine.get(); p; p = p->right.get()) {
                p->timer_start = 1 + rng.next_below(9);
                p->timer = 1 + rng.next_below(p->timer_start);
            }
            MetricsSink sink;
            const auto rebuilt = rebuild(std::move(spine), k[0], k[1], &sink);

            CHECK(check_perfectly_balanced(rebuilt.get()));
            CHECK(check_timer_reset_law(rebuilt.get(), k[0], k[1]));
            CHECK(check_child_size_halving(rebuilt.get()));
            CHECK(subtree_size(rebuilt.get()) == n);
            CHECK(sink.events().size() == n);  // one reset per node: build visits each once

            std::vector<key_type> expected(n);
            for (std::uint64_t i = 0; i < n; ++i) expected[i] = static_cast<key_type>(i + 1);
            CHECK(in_order_keys(rebuilt.get()) == expected);

            const std::uint64_t left = subtree_size(rebuilt->left.get());
            const std::uint64_t right = subtree_size(rebuilt->right.get());
            CHECK(left <= n / 2);
            CHECK(right <= n / 2);
        }
    }
}
