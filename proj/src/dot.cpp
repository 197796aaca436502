#include "timertree/dot.hpp"

#include <string>

namespace timertree {

namespace {

// Pre-order emission; returns the id following the subtree's last node.
std::uint64_t emit(const TreeNode* node, std::uint64_t id, std::string& out) {
    out += "  n" + std::to_string(id) + " [label=\"" + std::to_string(node->key) +
           "\\nt=" + std::to_string(node->timer) + "/" + std::to_string(node->timer_start) +
           "\"];\n";
    std::uint64_t next = id + 1;
    if (node->left) {
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(next) + " [label=\"L\"];\n";
        next = emit(node->left.get(), next, out);
    }
    if (node->right) {
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(next) + " [label=\"R\"];\n";
        next = emit(node->right.get(), next, out);
    }
    return next;
}

}  // namespace

std::string to_dot(const TreeNode* root) {
    std::string out = "digraph timertree {\n  node [shape=box];\n";
    if (root) emit(root, 0, out);
    out += "}\n";
    return out;
}

std::string to_dot(const TimerTree& tree) { return to_dot(tree.root()); }

}  // namespace timertree
