/*
 * Unbalanced BST baseline for the benchmark harness. Same insert/delete
 * structure as the timer tree minus the timers, written iteratively so a
 * degenerate spine of 10^4+ nodes cannot overflow the stack.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "timertree/tree.hpp"

namespace timertree {

class NaiveBst {
public:
    NaiveBst() = default;
    ~NaiveBst();

    NaiveBst(const NaiveBst&) = delete;
    NaiveBst& operator=(const NaiveBst&) = delete;

    bool insert(key_type key);
    bool erase(key_type key);
    bool contains(key_type key) const;

    std::uint64_t size() const { return count_; }
    std::uint64_t height() const;
    std::vector<key_type> in_order() const;

private:
    struct Node {
        key_type key;
        Node* left = nullptr;
        Node* right = nullptr;
    };

    Node* root_ = nullptr;
    std::uint64_t count_ = 0;
};

}  // namespace timertree
