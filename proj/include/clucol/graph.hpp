#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clucol/errors.hpp"

namespace clucol {

// Finite simple undirected graph with vertex ids 0..n-1. Immutable after
// construction; rejects loops and parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    // Edges are stored as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    int edge_index(int u, int v) const;  // -1 if absent

    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;

    // Induced subgraph on `vs` (sorted, unique); old_of_new[i] is the original
    // id of new vertex i.
    Graph induced(const std::vector<int>& vs, std::vector<int>* old_of_new = nullptr) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::unordered_map<std::int64_t, int> edge_idx_;
};

// Total map vertex -> color for a graph on `size` vertices.
class Coloring {
public:
    Coloring() = default;
    Coloring(const Graph& g, std::vector<int> colors);

    int color(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
    int size() const { return static_cast<int>(colors_.size()); }
    const std::vector<int>& values() const { return colors_; }

private:
    std::vector<int> colors_;
};

// ---- sorted vertex-set helpers -------------------------------------------

inline bool set_contains(const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b);

// Sorts, dedups and range-checks a vertex set against g; throws input_error.
std::vector<int> normalized_vertex_set(const Graph& g, std::vector<int> xs,
                                       const std::string& what = "vertex set");

// ---- neighborhood and coloring queries ------------------------------------

// {v not in x : |N(v) ∩ x| >= s}
std::vector<int> n_geq_s(const Graph& g, const std::vector<int>& x, int s);
// {v not in x : 1 <= |N(v) ∩ x| < s}
std::vector<int> n_lt_s(const Graph& g, const std::vector<int>& x, int s);

// Partition of V(g) into connected color-constant parts; parts sorted
// internally and ordered by smallest member.
std::vector<std::vector<int>> monochromatic_components(const Graph& g, const Coloring& c);

// Max part size of monochromatic_components; 0 for the empty graph.
int clustering_of(const Graph& g, const Coloring& c);

}  // namespace clucol
