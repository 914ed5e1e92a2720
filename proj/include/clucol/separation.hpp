#pragma once

#include <functional>
#include <vector>

#include "clucol/graph.hpp"

namespace clucol {

struct Verdict {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Ordered pair (A,B) of edge-disjoint subgraphs covering G. va/vb are the
// vertex sets (sorted); edge_side[e] says which side owns edge e of the
// ambient graph (0 = A, 1 = B). Edges with both ends in va ∩ vb may sit on
// either side; all other edges are forced.
struct Separation {
    std::vector<int> va;
    std::vector<int> vb;
    std::vector<std::uint8_t> edge_side;

    bool operator==(const Separation&) const = default;
};

Verdict validate_separation(const Graph& g, const Separation& sep);
int separation_order(const Separation& sep);                 // |va ∩ vb|
std::vector<int> separation_interface(const Separation& sep);  // va ∩ vb
Separation reversed(const Separation& sep);

inline constexpr int kSeparationVertexCap = 12;

// Yields every separation of order <= max_order exactly once, both
// orientations included. Refuses graphs above vertex_cap.
void enumerate_separations(const Graph& g, int max_order,
                           const std::function<void(const Separation&)>& yield,
                           int vertex_cap = kSeparationVertexCap);

std::vector<Separation> all_separations(const Graph& g, int max_order,
                                        int vertex_cap = kSeparationVertexCap);

}  // namespace clucol
