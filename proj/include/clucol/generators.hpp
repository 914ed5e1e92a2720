#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "clucol/graph.hpp"

namespace clucol {

inline constexpr long long kGeneratorVertexCap = 200000;

// eta x eta grid with one NE-SW diagonal per cell; max degree 6, planar.
Graph triangular_grid(int eta);

// G_1 = triangular_grid(eta); G_s = apex vertex joined to eta disjoint copies
// of G_{s-1}. The apex is vertex 0; copies follow in order.
Graph standard_minor_example(int s, int eta);

// Same recursion with base case P_c and c copies per level.
Graph standard_treewidth_example(int s, int c);

// K_s joined to an independent set of size t; clique vertices come first.
Graph k_star(int s, int t);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
Graph gnp_random(int n, double p, std::uint64_t seed);

struct FamilySpec {
    std::string family;
    std::vector<long long> parameters;
    std::optional<std::uint64_t> seed;
};

// Dispatches on FamilySpec.family; validates parameter arity and ranges.
Graph build_family(const FamilySpec& spec);

}  // namespace clucol
