#include "clucol/separation.hpp"

#include <bit>

namespace clucol {

Verdict validate_separation(const Graph& g, const Separation& sep) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    for (int v : sep.va)
        if (!g.has_vertex(v)) return bad("va has out-of-range vertex " + std::to_string(v));
    for (int v : sep.vb)
        if (!g.has_vertex(v)) return bad("vb has out-of-range vertex " + std::to_string(v));
    if (!std::is_sorted(sep.va.begin(), sep.va.end()) ||
        std::adjacent_find(sep.va.begin(), sep.va.end()) != sep.va.end())
        return bad("va not sorted/unique");
    if (!std::is_sorted(sep.vb.begin(), sep.vb.end()) ||
        std::adjacent_find(sep.vb.begin(), sep.vb.end()) != sep.vb.end())
        return bad("vb not sorted/unique");
    if (static_cast<int>(sorted_union(sep.va, sep.vb).size()) != g.vertex_count())
        return bad("va ∪ vb != V(G)");
    if (static_cast<int>(sep.edge_side.size()) != g.edge_count())
        return bad("edge_side size != edge count");
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        if (sep.edge_side[static_cast<std::size_t>(e)] > 1)
            return bad("edge_side must be 0 or 1");
        const auto& side = sep.edge_side[static_cast<std::size_t>(e)] == 0 ? sep.va : sep.vb;
        if (!set_contains(side, u) || !set_contains(side, v))
            return bad("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " not inside its assigned side");
    }
    return {};
}

int separation_order(const Separation& sep) {
    return static_cast<int>(sorted_intersection(sep.va, sep.vb).size());
}

std::vector<int> separation_interface(const Separation& sep) {
    return sorted_intersection(sep.va, sep.vb);
}

Separation reversed(const Separation& sep) {
    Separation r;
    r.va = sep.vb;
    r.vb = sep.va;
    r.edge_side.reserve(sep.edge_side.size());
    for (auto s : sep.edge_side) r.edge_side.push_back(static_cast<std::uint8_t>(1 - s));
    return r;
}

namespace {

// Components of g - S, as vertex masks.
std::vector<std::uint32_t> components_outside(const Graph& g, std::uint32_t s_mask) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> comps;
    std::uint32_t seen = s_mask;
    for (int v = 0; v < n; ++v) {
        if (seen & (1u << v)) continue;
        std::uint32_t comp = 0;
        std::vector<int> stack{v};
        seen |= 1u << v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp |= 1u << x;
            for (int w : g.neighbors(x))
                if (!(seen & (1u << w))) {
                    seen |= 1u << w;
                    stack.push_back(w);
                }
        }
        comps.push_back(comp);
    }
    return comps;
}

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}

}  // namespace

void enumerate_separations(const Graph& g, int max_order,
                           const std::function<void(const Separation&)>& yield, int vertex_cap) {
    int n = g.vertex_count();
    if (vertex_cap > 30) throw input_error("enumerate_separations: vertex_cap above 30");
    if (n > vertex_cap)
        throw size_error("enumerate_separations: graph has " + std::to_string(n) +
                         " vertices, cap is " + std::to_string(vertex_cap));
    if (max_order < 0) throw input_error("enumerate_separations: negative max_order");
    max_order = std::min(max_order, n);

    // Interfaces S = V(A ∩ B), enumerated by cardinality.
    std::vector<std::uint32_t> interfaces{0};
    std::vector<std::uint32_t> frontier{0};
    for (int k = 1; k <= max_order; ++k) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t m : frontier) {
            int lo = m == 0 ? 0 : 32 - std::countl_zero(m);
            for (int v = lo; v < n; ++v) next.push_back(m | (1u << v));
        }
        interfaces.insert(interfaces.end(), next.begin(), next.end());
        frontier = std::move(next);
    }

    for (std::uint32_t s_mask : interfaces) {
        std::vector<int> inner_edges;  // edges with both ends in the interface
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
            if ((s_mask >> u & 1u) && (s_mask >> v & 1u)) inner_edges.push_back(e);
        }
        auto comps = components_outside(g, s_mask);
        const std::size_t c = comps.size();
        for (std::uint64_t assign = 0; assign < (1ull << c); ++assign) {
            std::uint32_t a_mask = s_mask, b_mask = s_mask;
            for (std::size_t i = 0; i < c; ++i)
                (assign >> i & 1ull) ? b_mask |= comps[i] : a_mask |= comps[i];
            Separation base;
            base.va = mask_to_set(a_mask, n);
            base.vb = mask_to_set(b_mask, n);
            base.edge_side.assign(static_cast<std::size_t>(g.edge_count()), 0);
            for (int e = 0; e < g.edge_count(); ++e) {
                auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
                bool in_a = (a_mask >> u & 1u) && (a_mask >> v & 1u);
                bool in_s = (s_mask >> u & 1u) && (s_mask >> v & 1u);
                if (!in_s) base.edge_side[static_cast<std::size_t>(e)] = in_a ? 0 : 1;
            }
            // Edges inside the interface are free: enumerate both side choices.
            for (std::uint64_t eb = 0; eb < (1ull << inner_edges.size()); ++eb) {
                Separation sep = base;
                for (std::size_t i = 0; i < inner_edges.size(); ++i)
                    sep.edge_side[static_cast<std::size_t>(inner_edges[i])] =
                        static_cast<std::uint8_t>(eb >> i & 1ull);
                yield(sep);
            }
        }
    }
}

std::vector<Separation> all_separations(const Graph& g, int max_order, int vertex_cap) {
    std::vector<Separation> out;
    enumerate_separations(
        g, max_order, [&](const Separation& s) { out.push_back(s); }, vertex_cap);
    return out;
}

}  // namespace clucol
