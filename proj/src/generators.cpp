#include "clucol/generators.hpp"

#include "clucol/rng.hpp"

namespace clucol {

namespace {

void check_cap(long long n, const std::string& what) {
    if (n > kGeneratorVertexCap)
        throw size_error(what + ": instance would have " + std::to_string(n) + " vertices");
}

// Disjoint copies of `part`, all joined to a fresh apex at id 0.
Graph apex_over_copies(const Graph& part, int copies) {
    long long total = 1ll + static_cast<long long>(copies) * part.vertex_count();
    check_cap(total, "apex_over_copies");
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < copies; ++c) {
        int base = 1 + c * part.vertex_count();
        for (auto [u, v] : part.edges()) es.emplace_back(base + u, base + v);
        for (int v = 0; v < part.vertex_count(); ++v) es.emplace_back(0, base + v);
    }
    return Graph(static_cast<int>(total), std::move(es));
}

}  // namespace

Graph triangular_grid(int eta) {
    if (eta < 1) throw input_error("triangular_grid: eta must be >= 1");
    check_cap(static_cast<long long>(eta) * eta, "triangular_grid");
    auto id = [eta](int r, int c) { return r * eta + c; };
    std::vector<std::pair<int, int>> es;
    for (int r = 0; r < eta; ++r)
        for (int c = 0; c < eta; ++c) {
            if (c + 1 < eta) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < eta) es.emplace_back(id(r, c), id(r + 1, c));
            // NE-SW diagonal of the cell with top-left corner (r, c)
            if (r + 1 < eta && c + 1 < eta) es.emplace_back(id(r, c + 1), id(r + 1, c));
        }
    return Graph(eta * eta, std::move(es));
}

Graph standard_minor_example(int s, int eta) {
    if (s < 1 || eta < 1) throw input_error("standard_minor_example: s, eta must be >= 1");
    Graph g = triangular_grid(eta);
    for (int level = 2; level <= s; ++level) g = apex_over_copies(g, eta);
    return g;
}

Graph standard_treewidth_example(int s, int c) {
    if (s < 1 || c < 1) throw input_error("standard_treewidth_example: s, c must be >= 1");
    Graph g = path_graph(c);
    for (int level = 2; level <= s; ++level) g = apex_over_copies(g, c);
    return g;
}

Graph k_star(int s, int t) {
    if (s < 1 || t < 1) throw input_error("k_star: s, t must be >= 1");
    check_cap(static_cast<long long>(s) + t, "k_star");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) es.emplace_back(i, j);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) es.emplace_back(i, s + j);
    return Graph(s + t, std::move(es));
}

Graph complete_graph(int n) {
    if (n < 1) throw input_error("complete_graph: n must be >= 1");
    check_cap(n, "complete_graph");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw input_error("complete_bipartite: sides must be >= 1");
    check_cap(static_cast<long long>(a) + b, "complete_bipartite");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, std::move(es));
}

Graph path_graph(int n) {
    if (n < 1) throw input_error("path_graph: n must be >= 1");
    check_cap(n, "path_graph");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph gnp_random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw input_error("gnp_random: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw input_error("gnp_random: p must be in [0,1]");
    check_cap(n, "gnp_random");
    SeededRng rng(seed);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph build_family(const FamilySpec& spec) {
    auto need = [&](std::size_t k) {
        if (spec.parameters.size() != k)
            throw input_error("family " + spec.family + ": expected " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(spec.parameters.size()));
    };
    auto p = [&](std::size_t i) { return static_cast<int>(spec.parameters[i]); };
    if (spec.family == "triangular_grid") {
        need(1);
        return triangular_grid(p(0));
    }
    if (spec.family == "standard_minor_example") {
        need(2);
        return standard_minor_example(p(0), p(1));
    }
    if (spec.family == "standard_treewidth_example") {
        need(2);
        return standard_treewidth_example(p(0), p(1));
    }
    if (spec.family == "complete") {
        need(1);
        return complete_graph(p(0));
    }
    if (spec.family == "complete_bipartite") {
        need(2);
        return complete_bipartite(p(0), p(1));
    }
    if (spec.family == "k_star") {
        need(2);
        return k_star(p(0), p(1));
    }
    if (spec.family == "path") {
        need(1);
        return path_graph(p(0));
    }
    if (spec.family == "gnp_random") {
        if (spec.parameters.size() != 2)
            throw input_error("family gnp_random: expected parameters n,p_percent");
        return gnp_random(p(0), static_cast<double>(spec.parameters[1]) / 100.0,
                          spec.seed.value_or(0));
    }
    throw input_error("unknown family: " + spec.family);
}

}  // namespace clucol
