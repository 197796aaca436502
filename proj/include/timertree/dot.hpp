#pragma once

#include <string>

#include "timertree/tree.hpp"

namespace timertree {

/// Graphviz dump. Node ids follow pre-order, labels are
/// "<key>\nt=<timer>/<timer_start>", edges are labeled L/R, so identical
/// trees produce byte-identical output.
std::string to_dot(const TreeNode* root);
std::string to_dot(const TimerTree& tree);

}  // namespace timertree
