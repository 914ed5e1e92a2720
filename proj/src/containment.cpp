#include "clucol/containment.hpp"

#include <bit>
#include <functional>
#include <queue>
#include <set>

namespace clucol {

std::optional<KstWitness> has_kst_subgraph(const Graph& g, int s, int t) {
    if (s < 1 || t < 1) throw input_error("has_kst_subgraph: s, t must be >= 1");
    const int n = g.vertex_count();
    if (s + t > n) return std::nullopt;

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;

    std::vector<int> chosen;
    std::optional<KstWitness> found;
    // Combination search over the s-side; the common neighborhood shrinks
    // monotonically, so prune as soon as it drops below t.
    std::function<void(int, std::vector<int>)> rec = [&](int start, std::vector<int> common) {
        if (found) return;
        if (static_cast<int>(chosen.size()) == s) {
            auto t_side = sorted_difference(common, chosen);
            if (static_cast<int>(t_side.size()) >= t) {
                t_side.resize(static_cast<std::size_t>(t));
                found = KstWitness{chosen, t_side};
            }
            return;
        }
        for (int v = start; v < n; ++v) {
            std::vector<int> next_common =
                chosen.empty() ? g.neighbors(v) : sorted_intersection(common, g.neighbors(v));
            if (static_cast<int>(next_common.size()) < t) continue;
            chosen.push_back(v);
            rec(v + 1, std::move(next_common));
            chosen.pop_back();
            if (found) return;
        }
    };
    rec(0, all);
    return found;
}

namespace {

struct MaskGraph {
    int n;
    std::vector<std::uint32_t> adj;
    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(static_cast<std::size_t>(n), 0) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<std::size_t>(u)] |= 1u << v;
            adj[static_cast<std::size_t>(v)] |= 1u << u;
        }
    }
    std::uint32_t neighborhood(std::uint32_t m) const {
        std::uint32_t out = 0;
        std::uint32_t rest = m;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out |= adj[static_cast<std::size_t>(v)];
        }
        return out & ~m;
    }
};

// Every connected subset of `allowed` whose minimum vertex is `root`, sizes
// capped by max_size. yield returns false to abort the search.
bool enumerate_connected_from(const MaskGraph& mg, int root, std::uint32_t allowed, int max_size,
                              const std::function<bool(std::uint32_t)>& yield) {
    allowed &= ~((1u << root) - 1);  // keep the minimum at root
    std::function<bool(std::uint32_t, std::uint32_t)> go = [&](std::uint32_t cur,
                                                               std::uint32_t banned) -> bool {
        std::uint32_t frontier = mg.neighborhood(cur) & allowed & ~banned;
        if (frontier == 0 || std::popcount(cur) == max_size) {
            if (!yield(cur)) return false;
            if (frontier == 0) return true;
        }
        if (std::popcount(cur) == max_size) return true;
        int v = std::countr_zero(frontier);
        if (!go(cur | (1u << v), banned)) return false;
        return go(cur, banned | (1u << v));
    };
    return go(1u << root, 0);
}

// BFS order of pattern vertices (per component, max-degree roots first) so
// most placements can be pruned against an already-placed neighbor.
std::vector<int> pattern_order(const Graph& h) {
    const int n = h.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return h.degree(a) != h.degree(b) ? h.degree(a) > h.degree(b)
                                                                    : a < b; });
    for (int root : by_degree) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        std::queue<int> q;
        q.push(root);
        seen[static_cast<std::size_t>(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : h.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
        }
    }
    return order;
}

std::vector<int> mask_vertices(std::uint32_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Proper 2-coloring of the induced subgraph on `mask`; part-1 mask on
// success, nullopt when it is odd.
std::optional<std::uint32_t> induced_bipartition(const MaskGraph& mg, std::uint32_t mask) {
    std::uint32_t part1 = 0, seen = 0;
    std::uint32_t rest = mask;
    while (rest) {
        int start = std::countr_zero(rest);
        if (!(seen >> start & 1u)) {
            std::vector<int> stack{start};
            seen |= 1u << start;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                std::uint32_t nb = mg.adj[static_cast<std::size_t>(v)] & mask;
                bool v_in_1 = (part1 >> v & 1u) != 0;
                while (nb) {
                    int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    if (!(seen >> w & 1u)) {
                        seen |= 1u << w;
                        if (!v_in_1) part1 |= 1u << w;
                        stack.push_back(w);
                    } else if (((part1 >> w & 1u) != 0) == v_in_1) {
                        return std::nullopt;
                    }
                }
            }
        }
        rest &= rest - 1;
    }
    return part1;
}

struct MinorSearch {
    const Graph& g;
    const Graph& h;
    MaskGraph mg;
    std::vector<int> order;          // pattern placement order
    std::vector<std::uint32_t> set_of;  // branch-set mask per pattern vertex, 0 if unplaced
    std::vector<std::uint32_t> part_of;  // part-1 mask (odd search only)
    bool odd;

    MinorSearch(const Graph& g_, const Graph& h_, bool odd_)
        : g(g_), h(h_), mg(g_), order(pattern_order(h_)),
          set_of(static_cast<std::size_t>(h_.vertex_count()), 0),
          part_of(static_cast<std::size_t>(h_.vertex_count()), 0), odd(odd_) {}

    // Parity labels achievable for pattern edge (a,b) over available host
    // edges; bit0 set => label 0 achievable, bit1 => label 1.
    int label_options(int a, int b) const {
        int opts = 0;
        for (auto [u, v] : g.edges()) {
            bool fwd = (set_of[static_cast<std::size_t>(a)] >> u & 1u) &&
                       (set_of[static_cast<std::size_t>(b)] >> v & 1u);
            bool rev = (set_of[static_cast<std::size_t>(b)] >> u & 1u) &&
                       (set_of[static_cast<std::size_t>(a)] >> v & 1u);
            if (!fwd && !rev) continue;
            int pu = fwd ? (part_of[static_cast<std::size_t>(a)] >> u & 1u)
                         : (part_of[static_cast<std::size_t>(b)] >> u & 1u);
            int pv = fwd ? (part_of[static_cast<std::size_t>(b)] >> v & 1u)
                         : (part_of[static_cast<std::size_t>(a)] >> v & 1u);
            opts |= 1 << (pu ^ pv);
            if (opts == 3) break;
        }
        return opts;
    }

    // Solves the phase-parity system over forced pattern edges. Returns the
    // phase vector, or nullopt on an odd constraint cycle.
    std::optional<std::vector<int>> solve_phases() const {
        const int hn = h.vertex_count();
        std::vector<int> phase(static_cast<std::size_t>(hn), -1);
        std::vector<std::vector<std::pair<int, int>>> cons(static_cast<std::size_t>(hn));
        for (auto [a, b] : h.edges()) {
            int opts = label_options(a, b);
            if (opts == 0) return std::nullopt;
            if (opts == 3) continue;  // either label available: no constraint
            int lab = opts == 2 ? 1 : 0;
            cons[static_cast<std::size_t>(a)].push_back({b, lab});
            cons[static_cast<std::size_t>(b)].push_back({a, lab});
        }
        for (int s = 0; s < hn; ++s) {
            if (phase[static_cast<std::size_t>(s)] != -1) continue;
            phase[static_cast<std::size_t>(s)] = 0;
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (auto [y, lab] : cons[static_cast<std::size_t>(x)]) {
                    int want = phase[static_cast<std::size_t>(x)] ^ lab;
                    if (phase[static_cast<std::size_t>(y)] == -1) {
                        phase[static_cast<std::size_t>(y)] = want;
                        q.push(y);
                    } else if (phase[static_cast<std::size_t>(y)] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
        return phase;
    }

    std::pair<int, int> pick_image(int a, int b, int needed_label) const {
        for (auto [u, v] : g.edges()) {
            bool fwd = (set_of[static_cast<std::size_t>(a)] >> u & 1u) &&
                       (set_of[static_cast<std::size_t>(b)] >> v & 1u);
            bool rev = (set_of[static_cast<std::size_t>(b)] >> u & 1u) &&
                       (set_of[static_cast<std::size_t>(a)] >> v & 1u);
            if (!fwd && !rev) continue;
            if (needed_label >= 0) {
                int pu = fwd ? (part_of[static_cast<std::size_t>(a)] >> u & 1u)
                             : (part_of[static_cast<std::size_t>(b)] >> u & 1u);
                int pv = fwd ? (part_of[static_cast<std::size_t>(b)] >> v & 1u)
                             : (part_of[static_cast<std::size_t>(a)] >> v & 1u);
                if ((pu ^ pv) != needed_label) continue;
            }
            return {u, v};
        }
        throw std::logic_error("pick_image: no edge found for a verified placement");
    }

    std::optional<std::pair<MinorModel, OddCertificate>> run() {
        const int hn = h.vertex_count();
        std::optional<std::pair<MinorModel, OddCertificate>> result;
        std::function<bool(std::size_t, std::uint32_t)> place = [&](std::size_t idx,
                                                                    std::uint32_t used) -> bool {
            if (idx == order.size()) {
                std::vector<int> phase(static_cast<std::size_t>(hn), 0);
                if (odd) {
                    auto solved = solve_phases();
                    if (!solved) return true;  // keep searching
                    phase = *solved;
                }
                MinorModel model;
                model.branch_sets.resize(static_cast<std::size_t>(hn));
                for (int hv = 0; hv < hn; ++hv)
                    model.branch_sets[static_cast<std::size_t>(hv)] =
                        mask_vertices(set_of[static_cast<std::size_t>(hv)]);
                for (auto [a, b] : h.edges())
                    model.edge_images.push_back(pick_image(
                        a, b,
                        odd ? (phase[static_cast<std::size_t>(a)] ^ phase[static_cast<std::size_t>(b)])
                            : -1));
                OddCertificate cert;
                if (odd) {
                    cert.two_coloring.assign(static_cast<std::size_t>(g.vertex_count()), -1);
                    for (int hv = 0; hv < hn; ++hv)
                        for (int v : mask_vertices(set_of[static_cast<std::size_t>(hv)]))
                            cert.two_coloring[static_cast<std::size_t>(v)] =
                                ((part_of[static_cast<std::size_t>(hv)] >> v & 1u) ^
                                 static_cast<std::uint32_t>(phase[static_cast<std::size_t>(hv)]));
                }
                result = {std::move(model), std::move(cert)};
                return false;  // stop
            }
            int hv = order[idx];
            std::uint32_t free = ~used & ((g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1u));
            int slack = std::popcount(free) - (static_cast<int>(order.size() - idx) - 1);
            if (slack <= 0) return true;
            // earlier pattern neighbors this placement must touch
            std::vector<std::uint32_t> need;
            for (std::size_t j = 0; j < idx; ++j)
                if (h.has_edge(order[j], hv)) need.push_back(set_of[static_cast<std::size_t>(order[j])]);
            for (int root = 0; root < g.vertex_count(); ++root) {
                if (!(free >> root & 1u)) continue;
                bool keep = enumerate_connected_from(
                    mg, root, free, slack, [&](std::uint32_t bmask) -> bool {
                        std::uint32_t touch = mg.neighborhood(bmask);
                        for (std::uint32_t req : need)
                            if (!(touch & req)) return true;  // fails adjacency; continue
                        std::uint32_t part1 = 0;
                        if (odd) {
                            auto part = induced_bipartition(mg, bmask);
                            if (!part) return true;  // branch set not usable
                            part1 = *part;
                        }
                        set_of[static_cast<std::size_t>(hv)] = bmask;
                        part_of[static_cast<std::size_t>(hv)] = part1;
                        bool cont = place(idx + 1, used | bmask);
                        set_of[static_cast<std::size_t>(hv)] = 0;
                        part_of[static_cast<std::size_t>(hv)] = 0;
                        return cont;
                    });
                if (!keep) return false;
            }
            return true;
        };
        place(0, 0);
        return result;
    }
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& g, const Graph& h, int host_cap,
                                    int pattern_cap) {
    if (g.vertex_count() > host_cap)
        throw size_error("has_minor: host exceeds cap " + std::to_string(host_cap));
    if (h.vertex_count() > pattern_cap)
        throw size_error("has_minor: pattern exceeds cap " + std::to_string(pattern_cap));
    if (g.vertex_count() < h.vertex_count() || g.edge_count() < h.edge_count())
        return std::nullopt;
    MinorSearch search(g, h, false);
    auto found = search.run();
    if (!found) return std::nullopt;
    return found->first;
}

std::optional<std::pair<MinorModel, OddCertificate>> has_odd_minor(const Graph& g, const Graph& h,
                                                                   int host_cap, int pattern_cap) {
    if (g.vertex_count() > host_cap)
        throw size_error("has_odd_minor: host exceeds cap " + std::to_string(host_cap));
    if (h.vertex_count() > pattern_cap)
        throw size_error("has_odd_minor: pattern exceeds cap " + std::to_string(pattern_cap));
    if (g.vertex_count() < h.vertex_count() || g.edge_count() < h.edge_count())
        return std::nullopt;
    MinorSearch search(g, h, true);
    return search.run();
}

Verdict validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    if (static_cast<int>(m.branch_sets.size()) != h.vertex_count())
        return bad("branch set count != |V(H)|");
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
        const auto& bs = m.branch_sets[i];
        if (bs.empty()) return bad("branch set " + std::to_string(i) + " is empty");
        for (int v : bs) {
            if (!g.has_vertex(v)) return bad("branch set has out-of-range vertex");
            if (used[static_cast<std::size_t>(v)])
                return bad("branch sets overlap at vertex " + std::to_string(v));
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (!g.induced(bs).is_connected())
            return bad("branch set " + std::to_string(i) + " is not connected");
    }
    if (static_cast<int>(m.edge_images.size()) != h.edge_count())
        return bad("edge image count != |E(H)|");
    std::set<std::pair<int, int>> images;
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [h1, h2] = h.edges()[static_cast<std::size_t>(e)];
        auto [a, b] = m.edge_images[static_cast<std::size_t>(e)];
        if (!g.has_edge(a, b))
            return bad("edge image " + std::to_string(a) + "-" + std::to_string(b) +
                       " is not a host edge");
        const auto& b1 = m.branch_sets[static_cast<std::size_t>(h1)];
        const auto& b2 = m.branch_sets[static_cast<std::size_t>(h2)];
        auto in_set = [](const std::vector<int>& xs, int v) {
            return std::find(xs.begin(), xs.end(), v) != xs.end();
        };
        bool ok = (in_set(b1, a) && in_set(b2, b)) || (in_set(b2, a) && in_set(b1, b));
        if (!ok) return bad("edge image " + std::to_string(e) + " does not join its branch sets");
        auto key = std::minmax(a, b);
        if (!images.insert({key.first, key.second}).second)
            return bad("edge images are not pairwise distinct");
    }
    return {};
}

Verdict validate_odd_certificate(const Graph& g, const Graph& h, const MinorModel& m,
                                 const OddCertificate& cert) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    if (static_cast<int>(cert.two_coloring.size()) != g.vertex_count())
        return bad("certificate size != |V(G)|");
    std::vector<char> in_union(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& bs : m.branch_sets)
        for (int v : bs) in_union[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int c = cert.two_coloring[static_cast<std::size_t>(v)];
        if (in_union[static_cast<std::size_t>(v)]) {
            if (c != 0 && c != 1)
                return bad("vertex " + std::to_string(v) + " in a branch set lacks a color");
        } else if (c != -1) {
            return bad("vertex " + std::to_string(v) + " outside all branch sets is colored");
        }
    }
    for (std::size_t i = 0; i < m.branch_sets.size(); ++i)
        for (int u : m.branch_sets[i])
            for (int v : m.branch_sets[i])
                if (u < v && g.has_edge(u, v) &&
                    cert.two_coloring[static_cast<std::size_t>(u)] ==
                        cert.two_coloring[static_cast<std::size_t>(v)])
                    return bad("branch set " + std::to_string(i) +
                               " is not properly 2-colored (edge " + std::to_string(u) + "-" +
                               std::to_string(v) + ")");
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [a, b] = m.edge_images[static_cast<std::size_t>(e)];
        if (cert.two_coloring[static_cast<std::size_t>(a)] !=
            cert.two_coloring[static_cast<std::size_t>(b)])
            return bad("edge image " + std::to_string(e) + " has differently colored ends");
    }
    return {};
}

}  // namespace clucol
