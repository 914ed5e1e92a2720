#pragma once

#include "clucol/containment.hpp"
#include "clucol/separation.hpp"

namespace clucol {

struct Tangle {
    int order = 0;
    std::vector<Separation> separations;
};

// Axiom-by-axiom verdict with a concrete witness for the first violation.
struct TangleVerdict {
    bool members_ok = true;  // every member a valid separation of order < theta
    bool t1 = true;          // every small separation oriented
    bool t2 = true;          // no three small sides cover G
    bool t3 = true;          // no small side spans all vertices
    std::string detail;

    bool is_tangle() const { return members_ok && t1 && t2 && t3; }
};

TangleVerdict tangle_axioms_check(const Graph& g, const Tangle& tangle,
                                  int vertex_cap = kSeparationVertexCap);

// Materializes {(A,B) : order < theta, |V(A) ∩ Y1| <= 3*theta}.
Tangle tangle_from_y1(const Graph& g, int theta, const std::vector<int>& y1,
                      int vertex_cap = kSeparationVertexCap);

// True iff no tangle member of order < |V(H)| has a branch set inside V(A).
bool controls_minor(const Graph& g, const Graph& h, const Tangle& tangle, const MinorModel& m);

struct TangleMinusZ {
    Tangle tangle;               // on the reduced graph
    Graph graph;                 // G - Z
    std::vector<int> old_of_new;
};

// Restriction of the tangle to G - Z per the members with Z inside their
// interface; order drops by |Z|.
TangleMinusZ tangle_minus_z(const Graph& g, const Tangle& tangle, const std::vector<int>& z);

}  // namespace clucol
