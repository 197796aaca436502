#include "timertree/naive_bst.hpp"

namespace timertree {

NaiveBst::~NaiveBst() {
    // Iterative destroy: rotate left children up until the tree is a right
    // spine, freeing as we go.
    Node* n = root_;
    while (n) {
        if (n->left) {
            Node* l = n->left;
            n->left = l->right;
            l->right = n;
            n = l;
        } else {
            Node* r = n->right;
            delete n;
            n = r;
        }
    }
}

bool NaiveBst::insert(key_type key) {
    Node** slot = &root_;
    while (*slot) {
        if (key < (*slot)->key)
            slot = &(*slot)->left;
        else if (key > (*slot)->key)
            slot = &(*slot)->right;
        else
            return false;
    }
    *slot = new Node{key};
    ++count_;
    return true;
}

bool NaiveBst::erase(key_type key) {
    Node** slot = &root_;
    while (*slot) {
        if (key < (*slot)->key) {
            slot = &(*slot)->left;
        } else if (key > (*slot)->key) {
            slot = &(*slot)->right;
        } else {
            Node* n = *slot;
            if (n->left && n->right) {
                // Two children: swap in the inorder successor's key and
                // unlink that node instead.
                Node** succ = &n->right;
                while ((*succ)->left) succ = &(*succ)->left;
                n->key = (*succ)->key;
                Node* victim = *succ;
                *succ = victim->right;
                delete victim;
            } else {
                *slot = n->left ? n->left : n->right;
                delete n;
            }
            --count_;
            return true;
        }
    }
    return false;
}

bool NaiveBst::contains(key_type key) const {
    const Node* n = root_;
    while (n) {
        if (key < n->key)
            n = n->left;
        else if (key > n->key)
            n = n->right;
        else
            return true;
    }
    return false;
}

std::uint64_t NaiveBst::height() const {
    // Depth-first with an explicit stack; the tree may be a long spine.
    struct Frame {
        const Node* node;
        std::uint64_t depth;
    };
    std::vector<Frame> stack;
    if (root_) stack.push_back({root_, 1});
    std::uint64_t best = 0;
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.depth > best) best = f.depth;
        if (f.node->left) stack.push_back({f.node->left, f.depth + 1});
        if (f.node->right) stack.push_back({f.node->right, f.depth + 1});
    }
    return best;
}

std::vector<key_type> NaiveBst::in_order() const {
    std::vector<key_type> out;
    out.reserve(count_);
    std::vector<const Node*> stack;
    const Node* n = root_;
    while (n || !stack.empty()) {
        while (n) {
            stack.push_back(n);
            n = n->left;
        }
        n = stack.back();
        stack.pop_back();
        out.push_back(n->key);
        n = n->right;
    }
    return out;
}

}  // namespace timertree
