#pragma once

#include <iosfwd>
#include <string>

#include "clucol/decomposition_fwd.hpp"
#include "clucol/graph.hpp"
#include "clucol/separation.hpp"

namespace clucol {

struct ListAssignment;
struct Tangle;
struct Society;
struct BoundedPolicy;

// Graph text format (bit-exact): "p <n> <m>\n" then m lines "e <u> <v>\n"
// with 0 <= u < v < n. Duplicate edges and loops are rejected.
Graph read_graph(std::istream& in);
Graph read_graph_text(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string write_graph(const Graph& g);

// List-assignment: one line "v <id> : c1 c2 ..." per vertex.
ListAssignment read_lists(std::istream& in, const Graph& g);
ListAssignment read_lists_file(const std::string& path, const Graph& g);
std::string write_lists(const ListAssignment& lists);

// Policy: "eta <k>", "g <x>=<y>" table rows, "F c1 c2 ...".
BoundedPolicy read_policy(std::istream& in);
BoundedPolicy read_policy_file(const std::string& path);
std::string write_policy(const BoundedPolicy& policy);

// Decomposition: "nodes <k>", one "bag <i> v..." per node, "edge <i> <j>".
TreeDecomposition read_decomposition(std::istream& in);
TreeDecomposition read_decomposition_file(const std::string& path);
std::string write_decomposition(const TreeDecomposition& td);

// Layering: "layer v..." lines in order, optional "Z v..." line.
Layering read_layering(std::istream& in);
Layering read_layering_file(const std::string& path);
std::string write_layering(const Layering& layering);

// Tangle: "order <theta>" then blocks "sep" / "va ..." / "vb ..." /
// "ae <u> <v>" lines listing A-side edges; unlisted edges are B-side.
Tangle read_tangle(std::istream& in, const Graph& g);
Tangle read_tangle_file(const std::string& path, const Graph& g);
std::string write_tangle(const Graph& g, const Tangle& tangle);

// Society: graph block followed by "omega v1 v2 ..." (cyclic order).
Society read_society(std::istream& in);
Society read_society_file(const std::string& path);
std::string write_society(const Society& society);

// Coloring lines "v <id> <color>" (solver output format).
std::string write_coloring(const Coloring& c);
Coloring read_coloring(std::istream& in, const Graph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace clucol
