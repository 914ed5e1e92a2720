#pragma once

#include <optional>

#include "clucol/separation.hpp"

namespace clucol {

// Branch sets keyed by pattern vertex; edge_images[i] realizes the i-th edge
// of the pattern graph (its edges() order).
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;
    std::vector<std::pair<int, int>> edge_images;
};

// 2-coloring of the union of branch sets; -1 outside. Proper on each induced
// branch subgraph, and both ends of every edge image get equal colors.
struct OddCertificate {
    std::vector<int> two_coloring;
};

struct KstWitness {
    std::vector<int> side_s;
    std::vector<int> side_t;
};

inline constexpr int kMinorHostCap = 12;
inline constexpr int kMinorPatternCap = 6;

// Complete-bipartite subgraph K_{s,t}, not necessarily induced.
std::optional<KstWitness> has_kst_subgraph(const Graph& g, int s, int t);

std::optional<MinorModel> has_minor(const Graph& g, const Graph& h, int host_cap = kMinorHostCap,
                                    int pattern_cap = kMinorPatternCap);

std::optional<std::pair<MinorModel, OddCertificate>> has_odd_minor(
    const Graph& g, const Graph& h, int host_cap = kMinorHostCap,
    int pattern_cap = kMinorPatternCap);

Verdict validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m);
Verdict validate_odd_certificate(const Graph& g, const Graph& h, const MinorModel& m,
                                 const OddCertificate& cert);

}  // namespace clucol
