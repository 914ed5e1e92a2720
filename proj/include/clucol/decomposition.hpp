#pragma once

#include "clucol/decomposition_fwd.hpp"
#include "clucol/separation.hpp"

namespace clucol {

// All three tree-decomposition conditions; rejects malformed node trees.
Verdict validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);  // max bag size - 1

inline constexpr int kTreewidthExactCap = 12;
inline constexpr int kLayeredExactCap = 8;

// Optimal treewidth plus a witness decomposition, by elimination-order DP
// over vertex subsets.
std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int cap = kTreewidthExactCap);

// Min-fill greedy elimination; valid but not necessarily optimal.
TreeDecomposition minfill_decomposition(const Graph& g);

Verdict validate_layering(const Graph& g, const Layering& layering);

// max over bags and layers of |bag ∩ layer|. Throws input_error when the
// decomposition and layering cover different vertex sets.
int v_width(const TreeDecomposition& td, const Layering& layering);

struct LayeredResult {
    int value = 0;
    TreeDecomposition td;
    Layering layering;
};

// Upper bound: best (exact-per-layering when small, min-fill otherwise)
// decomposition over BFS layerings from every root plus the single layer.
LayeredResult layered_treewidth_upper(const Graph& g, int exact_cap = kTreewidthExactCap);

// Exhausts all layerings per component; only under the cap.
LayeredResult layered_treewidth_exact(const Graph& g, int cap = kLayeredExactCap);

}  // namespace clucol
