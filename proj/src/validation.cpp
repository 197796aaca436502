#include "timertree/validation.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace timertree {

namespace {

bool bst_rec(const TreeNode* node, const TreeNode*& prev) {
    if (!node) return true;
    if (!bst_rec(node->left.get(), prev)) return false;
    if (prev && prev->key >= node->key) return false;
    prev = node;
    return bst_rec(node->right.get(), prev);
}

// Size of the subtree, or nullopt-style failure via bool out parameters is
// avoided: each checker walks once returning (size, ok) packed in a struct.
struct SizeCheck {
    std::uint64_t size;
    bool ok;
};

SizeCheck balanced_rec(const TreeNode* node) {
    if (!node) return {0, true};
    const SizeCheck l = balanced_rec(node->left.get());
    const SizeCheck r = balanced_rec(node->right.get());
    const std::uint64_t diff = l.size > r.size ? l.size - r.size : r.size - l.size;
    return {l.size + r.size + 1, l.ok && r.ok && diff <= 1};
}

SizeCheck reset_law_rec(const TreeNode* node, std::uint64_t k_num, std::uint64_t k_den) {
    if (!node) return {0, true};
    const SizeCheck l = reset_law_rec(node->left.get(), k_num, k_den);
    const SizeCheck r = reset_law_rec(node->right.get(), k_num, k_den);
    const std::uint64_t size = l.size + r.size + 1;
    const std::uint64_t expected = timer_reset_value(size, k_num, k_den);
    const bool ok = node->timer == expected && node->timer_start == expected;
    return {size, l.ok && r.ok && ok};
}

SizeCheck child_halving_rec(const TreeNode* node) {
    if (!node) return {0, true};
    const SizeCheck l = child_halving_rec(node->left.get());
    const SizeCheck r = child_halving_rec(node->right.get());
    const std::uint64_t size = l.size + r.size + 1;
    const bool ok = l.size <= size / 2 && r.size <= size / 2;
    return {size, l.ok && r.ok && ok};
}

}  // namespace

bool check_bst(const TreeNode* node) {
    const TreeNode* prev = nullptr;
    return bst_rec(node, prev);
}

bool check_perfectly_balanced(const TreeNode* node) { return balanced_rec(node).ok; }

bool check_timer_hygiene(const TreeNode* node) {
    if (!node) return true;
    if (node->timer < 1 || node->timer > node->timer_start) return false;
    return check_timer_hygiene(node->left.get()) && check_timer_hygiene(node->right.get());
}

std::uint64_t height_bound(std::uint64_t n, std::uint64_t k_num, std::uint64_t k_den) {
    using boost::multiprecision::cpp_int;
    // b = (2 + 2k)/(1 + 2k) = (2*k_den + 2*k_num)/(k_den + 2*k_num) > 1,
    // x = n/(2 - 2k) = n*k_den / (2*(k_den - k_num)).
    const cpp_int b_num = 2 * (cpp_int(k_den) + k_num);
    const cpp_int b_den = cpp_int(k_den) + 2 * k_num;
    const cpp_int x_num = cpp_int(n) * k_den;
    const cpp_int x_den = 2 * (cpp_int(k_den) - k_num);
    if (x_num < x_den) return 1;  // x < 1, the log is negative
    // Largest d with b^d <= x, i.e. b_num^d * x_den <= x_num * b_den^d.
    std::uint64_t d = 0;
    cpp_int pow_num = 1;
    cpp_int pow_den = 1;
    for (;;) {
        const cpp_int next_num = pow_num * b_num;
        const cpp_int next_den = pow_den * b_den;
        if (next_num * x_den <= x_num * next_den) {
            pow_num = next_num;
            pow_den = next_den;
            ++d;
        } else {
            break;
        }
    }
    return d + 1;
}

bool check_height_bound(const TimerTree& tree) {
    if (tree.size() == 0) return true;
    return tree.height() - 1 <= height_bound(tree.size(), tree.k_num(), tree.k_den());
}

bool check_timer_reset_law(const TreeNode* node, std::uint64_t k_num, std::uint64_t k_den) {
    return reset_law_rec(node, k_num, k_den).ok;
}

bool check_child_size_halving(const TreeNode* node) { return child_halving_rec(node).ok; }

bool OracleModel::insert(key_type key) {
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it != keys_.end() && *it == key) return false;
    keys_.insert(it, key);
    return true;
}

bool OracleModel::erase(key_type key) {
    const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return false;
    keys_.erase(it);
    return true;
}

bool OracleModel::contains(key_type key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

bool oracle_apply(OracleModel& model, OpKind op, key_type key) {
    switch (op) {
        case OpKind::insert:
            return model.insert(key);
        case OpKind::erase:
            return model.erase(key);
        case OpKind::contains:
            return model.contains(key);
    }
    return false;
}

bool oracle_equal(const OracleModel& model, const TimerTree& tree) {
    if (model.size() != tree.size()) return false;
    const std::vector<key_type>& keys = model.keys();
    std::vector<const TreeNode*> stack;
    stack.reserve(64);
    std::size_t i = 0;
    const TreeNode* n = tree.root();
    while (n || !stack.empty()) {
        while (n) {
            stack.push_back(n);
            n = n->left.get();
        }
        n = stack.back();
        stack.pop_back();
        if (i >= keys.size() || n->key != keys[i]) return false;
        ++i;
        n = n->right.get();
    }
    return i == keys.size();
}

}  // namespace timertree
