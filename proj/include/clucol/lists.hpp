#pragma once

#include <cstdint>
#include <optional>

#include "clucol/decomposition_fwd.hpp"
#include "clucol/separation.hpp"

namespace clucol {

// Per-vertex finite color sets; lists are kept sorted and must be nonempty.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    int size() const { return static_cast<int>(lists.size()); }
    const std::vector<int>& at(int v) const { return lists.at(static_cast<std::size_t>(v)); }

    // Y1 = vertices with a one-element list.
    std::vector<int> singleton_vertices() const;
    void normalize();  // sort + dedup each list
};

ListAssignment uniform_lists(const Graph& g, int lo, int hi);  // every list = [lo..hi]

// Verdict for the list axioms; names the first violated axiom and a witness
// vertex, and carries the derived Y1 on success.
struct AxiomVerdict {
    bool ok = true;
    std::string axiom;
    int witness = -1;
    std::string detail;
    std::vector<int> y1;
    explicit operator bool() const { return ok; }
};

// (s,r,Y1)-list-assignment axioms L1..L5 with Y1 derived from the lists.
AxiomVerdict validate_list_axioms(const Graph& g, const ListAssignment& L, int s, int r);

// (s,Y1,ell,r)-list-assignment axioms R1..R5 (R2 delegates to the L axioms
// with r+2).
AxiomVerdict validate_r_axioms(const Graph& g, const ListAssignment& L, int s, int ell, int r);

// (W,F)-progress. Singleton choices take the seeded pick from L(y)-F; trimmed
// lists maximize |L'(v) ∩ F| with lexicographically-smallest tie-breaking.
ListAssignment progress(const Graph& g, const ListAssignment& L, int s, int r,
                        const std::vector<int>& w, const std::vector<int>& f, std::uint64_t seed);

struct GrowthResult {
    ListAssignment lists;
    std::vector<int> y1;
};

// (Z,ell)-growth: s+3 progress rounds with F_i = {ell,i} ∪ [s+3,s+2+r],
// preserving high-color intersections outside the pinned sets.
GrowthResult growth(const Graph& g, const ListAssignment& L, int s, int ell, int r,
                    const std::vector<int>& z, std::uint64_t seed);

// The iterated construction behind precolored-set enlargement: one progress
// round per Y1 vertex plus a final round with the extra color ell.
GrowthResult enlarge_precolored(const Graph& g, const ListAssignment& L, int s, int r,
                                const std::vector<int>& f, int ell, std::uint64_t seed);

enum class SeparationSide { A, B };

struct SideRestriction {
    Graph graph;                   // induced graph on the chosen side
    std::vector<int> old_of_new;
    ListAssignment lists;          // over the new ids
    std::vector<int> y_side;       // (Y1 ∩ side) ∪ interface, original ids
};

// Side restriction of a list-assignment across a separation: interface
// vertices outside Y1 get pinned to a color outside F (identically for both
// sides), nearby lists shrink per the L3 pattern keeping their F-part.
SideRestriction side_restrict(const Graph& g, const ListAssignment& L, int s, int r,
                              const Separation& sep, SeparationSide side,
                              const std::vector<int>& f, std::uint64_t seed);

// Compatibility with a layering: lists inside [s+2] and layer i's class
// forbids color i mod s+2.
bool is_sv_compatible(const Graph& g, const ListAssignment& L, const Layering& layering, int s);
bool is_v_standard_pair(const Graph& g, const ListAssignment& L, const Layering& layering, int s);

// Nondecreasing integer table with a constant fallback below the first point.
struct GrowthTable {
    long long base = 1;
    std::vector<std::pair<long long, long long>> points;  // sorted by x
    long long eval(long long x) const;
};

struct BoundedPolicy {
    long long eta = 1;
    GrowthTable g;
    std::vector<int> stable_colors;  // F
};

struct BoundedVerdict {
    bool y1_union_ok = true;   // union of Y1-touching components small enough
    bool global_ok = true;     // every component small enough
    bool stability_ok = true;  // every F-class a stable set
    std::string detail;
    bool ok() const { return y1_union_ok && global_ok && stability_ok; }
};

BoundedVerdict check_bounded(const Graph& g, const ListAssignment& L, const Coloring& c,
                             const BoundedPolicy& policy);

}  // namespace clucol
