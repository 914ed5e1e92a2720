#pragma once

#include <utility>
#include <vector>

namespace clucol {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;            // per decomposition node
    std::vector<std::pair<int, int>> tree_edges;   // edges of the node tree
};

struct Layering {
    std::vector<std::vector<int>> layers;  // ordered parts of V(G) - Z
    std::vector<int> excluded;             // Z
};

}  // namespace clucol
