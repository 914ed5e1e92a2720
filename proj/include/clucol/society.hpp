#pragma once

#include <optional>

#include "clucol/separation.hpp"

namespace clucol {

// Graph plus a cyclic order omega over a subset of its vertices. Rotations of
// omega are the same society; reflections are not.
struct Society {
    Graph graph;
    std::vector<int> omega;
};

Verdict validate_society(const Society& society);

inline constexpr int kVortexVertexCap = 64;

// No rho+1 vertex-disjoint paths between I ∪ {u} and J ∪ {v} for any ordered
// pair u, v of omega vertices, where I runs after u and before v in cyclic
// order and J runs after v and before u. Exact, via unit-capacity max-flow.
bool is_rho_vortex(const Society& society, int rho, int vertex_cap = kVortexVertexCap);

// Bags indexed 1..|omega| along the path, in omega order.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
};

// Path decomposition of the society graph whose i-th bag holds the i-th
// omega vertex.
Verdict validate_vortical(const Society& society, const PathDecomposition& pd);

// max |X_i ∩ X_j| over distinct bag pairs. Throws input_error when the node
// count differs from |omega|.
int vortical_adhesion(const Society& society, const PathDecomposition& pd);

// Exhaustive search for a vortical decomposition of adhesion <= max_adhesion.
std::optional<PathDecomposition> find_vortical_decomposition(const Society& society,
                                                             int max_adhesion);

// Segregation member: a subgraph of the ambient graph (explicit vertex and
// edge sets over ambient ids) with a cyclic order on some of its vertices.
struct SubgraphSociety {
    std::vector<int> vertices;               // sorted
    std::vector<std::pair<int, int>> edges;  // subset of ambient edges
    std::vector<int> omega;
};

struct Segregation {
    std::vector<SubgraphSociety> members;
};

Verdict validate_segregation(const Graph& g, const Segregation& seg);

// Standalone society for a member, vertices relabeled to 0..k-1.
Society member_society(const SubgraphSociety& member);

// Type (kappa, rho): every member with |omega| > 3 must be a rho-vortex, and
// there may be at most kappa of them.
bool segregation_has_type(const Segregation& seg, int kappa, int rho);

Verdict validate_location(const Graph& g, const std::vector<Separation>& loc);

// G[∩ V(B)] over the location's members; the whole graph for an empty one.
Graph location_interior(const Graph& g, const std::vector<Separation>& loc,
                        std::vector<int>* old_of_new = nullptr);

}  // namespace clucol
