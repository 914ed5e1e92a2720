#include "clucol/graph.hpp"

#include <queue>

namespace clucol {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw input_error("graph: negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("graph: edge endpoint out of range: " + std::to_string(u) + "," +
                              std::to_string(v));
        if (u == v) throw input_error("graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i)
        if (edge_list[i] == edge_list[i - 1])
            throw input_error("graph: duplicate edge " + std::to_string(edge_list[i].first) + "-" +
                              std::to_string(edge_list[i].second));
    edges_ = std::move(edge_list);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        edge_idx_[static_cast<std::int64_t>(u) * n_ + v] = static_cast<int>(i);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw input_error("graph: vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::edge_index(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return -1;
    if (u > v) std::swap(u, v);
    auto it = edge_idx_.find(static_cast<std::int64_t>(u) * n_ + v);
    return it == edge_idx_.end() ? -1 : it->second;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || connected_components().size() == 1; }

Graph Graph::induced(const std::vector<int>& vs, std::vector<int>* old_of_new) const {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::unordered_map<int, int> new_of_old;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (!has_vertex(sorted[i]))
            throw input_error("induced: vertex " + std::to_string(sorted[i]) + " out of range");
        new_of_old[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_) {
        auto iu = new_of_old.find(u), iv = new_of_old.find(v);
        if (iu != new_of_old.end() && iv != new_of_old.end())
            es.emplace_back(iu->second, iv->second);
    }
    if (old_of_new) *old_of_new = sorted;
    return Graph(static_cast<int>(sorted.size()), std::move(es));
}

Coloring::Coloring(const Graph& g, std::vector<int> colors) : colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != g.vertex_count())
        throw input_error("coloring: expected " + std::to_string(g.vertex_count()) +
                          " colors, got " + std::to_string(colors_.size()));
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> normalized_vertex_set(const Graph& g, std::vector<int> xs,
                                       const std::string& what) {
    for (int v : xs)
        if (!g.has_vertex(v))
            throw input_error(what + ": vertex " + std::to_string(v) + " out of range");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

std::vector<int> n_geq_s(const Graph& g, const std::vector<int>& x, int s) {
    if (s < 1) throw input_error("n_geq_s: s must be >= 1");
    auto xs = normalized_vertex_set(g, x, "n_geq_s");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (set_contains(xs, v)) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if (set_contains(xs, w)) ++d;
        if (d >= s) out.push_back(v);
    }
    return out;
}

std::vector<int> n_lt_s(const Graph& g, const std::vector<int>& x, int s) {
    if (s < 1) throw input_error("n_lt_s: s must be >= 1");
    auto xs = normalized_vertex_set(g, x, "n_lt_s");
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (set_contains(xs, v)) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if (set_contains(xs, w)) ++d;
        if (d >= 1 && d < s) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> monochromatic_components(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw input_error("monochromatic_components: coloring size mismatch");
    std::vector<std::vector<int>> parts;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> part;
        std::queue<int> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            part.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)] && c.color(w) == c.color(v)) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

int clustering_of(const Graph& g, const Coloring& c) {
    int best = 0;
    for (const auto& part : monochromatic_components(g, c))
        best = std::max(best, static_cast<int>(part.size()));
    return best;
}

}  // namespace clucol
