#include "clucol/decomposition.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace clucol {

Verdict validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    const int k = static_cast<int>(td.bags.size());
    if (k == 0) return bad("decomposition has no nodes");
    for (const auto& bag : td.bags)
        for (int v : bag)
            if (!g.has_vertex(v)) return bad("bag contains out-of-range vertex");

    // Node tree: k-1 distinct edges, connected, no loops.
    if (static_cast<int>(td.tree_edges.size()) != k - 1)
        return bad("node tree must have exactly " + std::to_string(k - 1) + " edges");
    std::vector<std::vector<int>> node_adj(static_cast<std::size_t>(k));
    std::set<std::pair<int, int>> seen_edges;
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || x >= k || y < 0 || y >= k) return bad("tree edge endpoint out of range");
        if (x == y) return bad("tree edge is a loop");
        auto key = std::minmax(x, y);
        if (!seen_edges.insert({key.first, key.second}).second)
            return bad("duplicate tree edge");
        node_adj[static_cast<std::size_t>(x)].push_back(y);
        node_adj[static_cast<std::size_t>(y)].push_back(x);
    }
    {
        std::vector<char> vis(static_cast<std::size_t>(k), 0);
        std::queue<int> q;
        q.push(0);
        vis[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int y : node_adj[static_cast<std::size_t>(x)])
                if (!vis[static_cast<std::size_t>(y)]) {
                    vis[static_cast<std::size_t>(y)] = 1;
                    q.push(y);
                }
        }
        if (cnt != k) return bad("node tree is disconnected");
    }

    // Each vertex induces a nonempty connected subtree.
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> holders;
        for (int x = 0; x < k; ++x)
            if (std::find(td.bags[static_cast<std::size_t>(x)].begin(),
                          td.bags[static_cast<std::size_t>(x)].end(),
                          v) != td.bags[static_cast<std::size_t>(x)].end())
                holders.push_back(x);
        if (holders.empty())
            return bad("vertex " + std::to_string(v) + " appears in no bag");
        std::set<int> holder_set(holders.begin(), holders.end());
        std::queue<int> q;
        std::set<int> vis;
        q.push(holders[0]);
        vis.insert(holders[0]);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : node_adj[static_cast<std::size_t>(x)])
                if (holder_set.count(y) && !vis.count(y)) {
                    vis.insert(y);
                    q.push(y);
                }
        }
        if (vis.size() != holder_set.size())
            return bad("bags of vertex " + std::to_string(v) + " are not connected in the tree");
    }

    // Each edge covered by some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : td.bags) {
            bool has_u = std::find(bag.begin(), bag.end(), u) != bag.end();
            bool has_v = std::find(bag.begin(), bag.end(), v) != bag.end();
            if (has_u && has_v) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return bad("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
    }
    return {};
}

int width(const TreeDecomposition& td) {
    int w = -1;
    for (const auto& bag : td.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

namespace {

// Bitmask helper for elimination-order DPs on small graphs.
struct SubsetTool {
    int n;
    std::vector<std::uint32_t> adj;

    explicit SubsetTool(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(n), 0) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)] |= 1u << v;
            adj[static_cast<std::size_t>(v)] |= 1u << u;
        }
    }

    // Vertices outside S ∪ {v} adjacent to v or connected to it through S.
    std::uint32_t q_set(std::uint32_t s, int v) const {
        std::uint32_t region = 1u << v;
        std::uint32_t out = 0;
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            std::uint32_t nb = adj[static_cast<std::size_t>(x)] & ~region;
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (s >> w & 1u) {
                    region |= 1u << w;
                    stack.push_back(w);
                } else {
                    out |= 1u << w;
                }
            }
        }
        return out & ~(1u << v);
    }
};

// Cost function maps a prospective bag mask to a penalty; the DP minimizes
// the max penalty along an elimination order.
template <typename Cost>
std::pair<int, std::vector<int>> elimination_dp(const SubsetTool& tool, Cost cost) {
    const int n = tool.n;
    const std::size_t full = std::size_t{1} << n;
    std::vector<int> best(full, 0);
    std::vector<std::int8_t> choice(full, -1);
    for (std::size_t s = 1; s < full; ++s) {
        int mini = INT32_MAX;
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!(s >> v & 1u)) continue;
            std::uint32_t rest = static_cast<std::uint32_t>(s) & ~(1u << v);
            int c = std::max(best[rest], cost(tool.q_set(rest, v) | (1u << v)));
            if (c < mini) {
                mini = c;
                pick = v;
            }
        }
        best[s] = mini;
        choice[s] = static_cast<std::int8_t>(pick);
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::uint32_t s = static_cast<std::uint32_t>(full - 1);
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[static_cast<std::size_t>(i)] = v;
        s &= ~(1u << v);
    }
    return {n == 0 ? 0 : best[full - 1], order};
}

std::vector<int> mask_vertices(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

TreeDecomposition td_from_order(const SubsetTool& tool, const std::vector<int>& order) {
    const int n = tool.n;
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::uint32_t prefix = 0;
    std::vector<std::uint32_t> bag_masks;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        bag_masks.push_back(tool.q_set(prefix, v) | (1u << v));
        prefix |= 1u << v;
    }
    for (const auto& m : bag_masks) td.bags.push_back(mask_vertices(m));
    for (int i = 0; i + 1 < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        int link = i + 1;
        int best_pos = INT32_MAX;
        for (int w : mask_vertices(bag_masks[static_cast<std::size_t>(i)] & ~(1u << v)))
            best_pos = std::min(best_pos, pos[static_cast<std::size_t>(w)]);
        if (best_pos != INT32_MAX) link = best_pos;
        td.tree_edges.emplace_back(i, link);
    }
    return td;
}

}  // namespace

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw size_error("treewidth_exact: " + std::to_string(g.vertex_count()) +
                         " vertices exceeds cap " + std::to_string(cap));
    SubsetTool tool(g);
    auto [w, order] =
        elimination_dp(tool, [](std::uint32_t bag) { return std::popcount(bag) - 1; });
    return {g.vertex_count() == 0 ? -1 : w, td_from_order(tool, order)};
}

TreeDecomposition minfill_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<std::set<int>> nb(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        nb[static_cast<std::size_t>(u)].insert(v);
        nb[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    std::vector<std::vector<int>> bags;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        long long pick_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            long long fill = 0;
            const auto& nv = nb[static_cast<std::size_t>(v)];
            for (auto it = nv.begin(); it != nv.end(); ++it)
                for (auto jt = std::next(it); jt != nv.end(); ++jt)
                    if (!nb[static_cast<std::size_t>(*it)].count(*jt)) ++fill;
            if (pick == -1 || fill < pick_fill ||
                (fill == pick_fill &&
                 nv.size() < nb[static_cast<std::size_t>(pick)].size()))
                pick = v, pick_fill = fill;
        }
        std::vector<int> bag{pick};
        for (int w : nb[static_cast<std::size_t>(pick)]) bag.push_back(w);
        std::sort(bag.begin(), bag.end());
        bags.push_back(bag);
        order.push_back(pick);
        const auto nv = nb[static_cast<std::size_t>(pick)];
        for (int a : nv)
            for (int b : nv)
                if (a != b) nb[static_cast<std::size_t>(a)].insert(b);
        for (int a : nv) nb[static_cast<std::size_t>(a)].erase(pick);
        nb[static_cast<std::size_t>(pick)].clear();
        gone[static_cast<std::size_t>(pick)] = 1;
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    td.bags = bags;
    for (int i = 0; i + 1 < n; ++i) {
        int link = i + 1;
        int best_pos = INT32_MAX;
        for (int w : bags[static_cast<std::size_t>(i)])
            if (w != order[static_cast<std::size_t>(i)])
                best_pos = std::min(best_pos, pos[static_cast<std::size_t>(w)]);
        if (best_pos != INT32_MAX) link = best_pos;
        td.tree_edges.emplace_back(i, link);
    }
    return td;
}

Verdict validate_layering(const Graph& g, const Layering& layering) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    std::vector<int> level(static_cast<std::size_t>(g.vertex_count()), -2);
    for (int z : layering.excluded) {
        if (!g.has_vertex(z)) return bad("Z has out-of-range vertex");
        if (level[static_cast<std::size_t>(z)] != -2) return bad("Z has duplicate vertex");
        level[static_cast<std::size_t>(z)] = -1;
    }
    for (std::size_t i = 0; i < layering.layers.size(); ++i)
        for (int v : layering.layers[i]) {
            if (!g.has_vertex(v)) return bad("layer has out-of-range vertex");
            if (level[static_cast<std::size_t>(v)] != -2)
                return bad("vertex " + std::to_string(v) + " assigned twice");
            level[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (level[static_cast<std::size_t>(v)] == -2)
            return bad("vertex " + std::to_string(v) + " in no layer and not in Z");
    for (auto [u, v] : g.edges()) {
        int lu = level[static_cast<std::size_t>(u)], lv = level[static_cast<std::size_t>(v)];
        if (lu < 0 || lv < 0) continue;  // touches Z
        if (std::abs(lu - lv) > 1)
            return bad("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " spans non-consecutive layers");
    }
    return {};
}

int v_width(const TreeDecomposition& td, const Layering& layering) {
    std::vector<int> td_universe, lay_universe;
    for (const auto& bag : td.bags) td_universe.insert(td_universe.end(), bag.begin(), bag.end());
    for (const auto& layer : layering.layers)
        lay_universe.insert(lay_universe.end(), layer.begin(), layer.end());
    auto canon = [](std::vector<int>& xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    canon(td_universe);
    canon(lay_universe);
    if (td_universe != lay_universe)
        throw input_error("v_width: decomposition and layering cover different vertex sets");
    int best = 0;
    for (const auto& bag : td.bags) {
        std::vector<int> sorted_bag = bag;
        std::sort(sorted_bag.begin(), sorted_bag.end());
        for (const auto& layer : layering.layers) {
            int cnt = 0;
            for (int v : layer)
                if (set_contains(sorted_bag, v)) ++cnt;
            best = std::max(best, cnt);
        }
    }
    return best;
}

namespace {

// Exact min v-width over all decompositions for a fixed layering (component
// must fit in the subset DP).
std::pair<int, TreeDecomposition> min_v_width_exact(const Graph& g,
                                                    const std::vector<int>& level) {
    SubsetTool tool(g);
    int layer_count = 0;
    for (int l : level) layer_count = std::max(layer_count, l + 1);
    auto cost = [&](std::uint32_t bag) {
        std::vector<int> per(static_cast<std::size_t>(layer_count), 0);
        int worst = 0;
        std::uint32_t m = bag;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            worst = std::max(worst, ++per[static_cast<std::size_t>(level[static_cast<std::size_t>(v)])]);
        }
        return worst;
    };
    auto [w, order] = elimination_dp(tool, cost);
    return {w, td_from_order(tool, order)};
}

Layering layering_from_levels(const std::vector<int>& level, int vertex_count) {
    int layer_count = 0;
    for (int l : level) layer_count = std::max(layer_count, l + 1);
    Layering lay;
    lay.layers.assign(static_cast<std::size_t>(layer_count), {});
    for (int v = 0; v < vertex_count; ++v)
        lay.layers[static_cast<std::size_t>(level[static_cast<std::size_t>(v)])].push_back(v);
    return lay;
}

struct ComponentBest {
    int value = INT32_MAX;
    TreeDecomposition td;
    std::vector<int> level;
};

// Remaps a component-local result into global ids and appends it.
void append_component(LayeredResult& acc, const ComponentBest& best,
                      const std::vector<int>& old_of_new) {
    int offset = static_cast<int>(acc.td.bags.size());
    for (const auto& bag : best.td.bags) {
        std::vector<int> mapped;
        for (int v : bag) mapped.push_back(old_of_new[static_cast<std::size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        acc.td.bags.push_back(mapped);
    }
    for (auto [x, y] : best.td.tree_edges) acc.td.tree_edges.emplace_back(offset + x, offset + y);
    if (offset > 0) acc.td.tree_edges.emplace_back(offset - 1, offset);
    for (std::size_t v = 0; v < best.level.size(); ++v) {
        std::size_t layer = static_cast<std::size_t>(best.level[v]);
        if (acc.layering.layers.size() <= layer) acc.layering.layers.resize(layer + 1);
        acc.layering.layers[layer].push_back(old_of_new[v]);
    }
    acc.value = std::max(acc.value, best.value);
}

}  // namespace

LayeredResult layered_treewidth_upper(const Graph& g, int exact_cap) {
    LayeredResult out;
    if (g.vertex_count() == 0) {
        out.td.bags.push_back({});
        return out;
    }
    for (const auto& comp : g.connected_components()) {
        std::vector<int> old_of_new;
        Graph sub = g.induced(comp, &old_of_new);
        const int n = sub.vertex_count();
        ComponentBest best;
        std::vector<std::vector<int>> candidates;
        candidates.emplace_back(static_cast<std::size_t>(n), 0);  // single layer
        for (int root = 0; root < n; ++root) {
            std::vector<int> level(static_cast<std::size_t>(n), -1);
            std::queue<int> q;
            q.push(root);
            level[static_cast<std::size_t>(root)] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : sub.neighbors(v))
                    if (level[static_cast<std::size_t>(w)] < 0) {
                        level[static_cast<std::size_t>(w)] =
                            level[static_cast<std::size_t>(v)] + 1;
                        q.push(w);
                    }
            }
            candidates.push_back(level);
        }
        for (const auto& level : candidates) {
            int value;
            TreeDecomposition td;
            if (n <= exact_cap) {
                std::tie(value, td) = min_v_width_exact(sub, level);
            } else {
                td = minfill_decomposition(sub);
                value = v_width(td, layering_from_levels(level, n));
            }
            if (value < best.value) best = ComponentBest{value, td, level};
        }
        append_component(out, best, old_of_new);
    }
    return out;
}

LayeredResult layered_treewidth_exact(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw size_error("layered_treewidth_exact: cap " + std::to_string(cap) + " exceeded");
    LayeredResult out;
    if (g.vertex_count() == 0) {
        out.td.bags.push_back({});
        return out;
    }
    for (const auto& comp : g.connected_components()) {
        std::vector<int> old_of_new;
        Graph sub = g.induced(comp, &old_of_new);
        const int n = sub.vertex_count();

        // BFS order so every later vertex has an earlier neighbor.
        std::vector<int> order;
        {
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            std::queue<int> q;
            q.push(0);
            seen[0] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                order.push_back(v);
                for (int w : sub.neighbors(v))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
            }
        }

        ComponentBest best;
        std::set<std::vector<int>> tried;
        std::vector<int> level(static_cast<std::size_t>(n), 0);
        // All level functions with |level(u)-level(v)| <= 1 across edges,
        // canonicalized so the minimum level is 0.
        auto consider = [&](const std::vector<int>& raw) {
            int lo = *std::min_element(raw.begin(), raw.end());
            std::vector<int> canon(raw.size());
            for (std::size_t i = 0; i < raw.size(); ++i) canon[i] = raw[i] - lo;
            if (!tried.insert(canon).second) return;
            auto [value, td] = min_v_width_exact(sub, canon);
            if (value < best.value) best = ComponentBest{value, td, canon};
        };
        std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
            if (idx == order.size()) {
                consider(level);
                return;
            }
            int v = order[idx];
            int lo = -n, hi = n;
            for (int w : sub.neighbors(v)) {
                // only constrain against already-assigned vertices
                auto it = std::find(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(idx), w);
                if (it == order.begin() + static_cast<std::ptrdiff_t>(idx)) continue;
                lo = std::max(lo, level[static_cast<std::size_t>(w)] - 1);
                hi = std::min(hi, level[static_cast<std::size_t>(w)] + 1);
            }
            if (idx == 0) lo = hi = 0;
            for (int l = lo; l <= hi; ++l) {
                level[static_cast<std::size_t>(v)] = l;
                dfs(idx + 1);
            }
        };
        dfs(0);
        append_component(out, best, old_of_new);
    }
    return out;
}

}  // namespace clucol
