#include "clucol/society.hpp"

#include <functional>
#include <set>

namespace clucol {

Verdict validate_society(const Society& society) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    std::set<int> seen;
    for (int v : society.omega) {
        if (!society.graph.has_vertex(v)) return bad("omega vertex out of range");
        if (!seen.insert(v).second) return bad("omega repeats vertex " + std::to_string(v));
    }
    return {};
}

namespace {

// Max vertex-disjoint paths between vertex sets X and Y via unit vertex
// capacities; stops once `enough` paths are found.
int disjoint_paths(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys,
                   int enough) {
    const int n = g.vertex_count();
    // node 2v = in-copy, 2v+1 = out-copy, 2n = source, 2n+1 = sink
    const int source = 2 * n, sink = 2 * n + 1;
    std::vector<std::vector<int>> cap(static_cast<std::size_t>(2 * n + 2),
                                      std::vector<int>(static_cast<std::size_t>(2 * n + 2), 0));
    for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = 1;
    for (auto [u, v] : g.edges()) {
        cap[static_cast<std::size_t>(2 * u + 1)][static_cast<std::size_t>(2 * v)] = 1;
        cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * u)] = 1;
    }
    for (int x : xs) cap[static_cast<std::size_t>(source)][static_cast<std::size_t>(2 * x)] = 1;
    for (int y : ys) cap[static_cast<std::size_t>(2 * y + 1)][static_cast<std::size_t>(sink)] = 1;

    int flow = 0;
    while (flow < enough) {
        std::vector<int> prev(static_cast<std::size_t>(2 * n + 2), -1);
        std::vector<int> queue{source};
        prev[static_cast<std::size_t>(source)] = source;
        for (std::size_t qi = 0; qi < queue.size() && prev[static_cast<std::size_t>(sink)] < 0; ++qi) {
            int a = queue[qi];
            for (int b = 0; b < 2 * n + 2; ++b)
                if (prev[static_cast<std::size_t>(b)] < 0 &&
                    cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0) {
                    prev[static_cast<std::size_t>(b)] = a;
                    queue.push_back(b);
                }
        }
        if (prev[static_cast<std::size_t>(sink)] < 0) break;
        for (int b = sink; b != source; b = prev[static_cast<std::size_t>(b)]) {
            int a = prev[static_cast<std::size_t>(b)];
            --cap[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            ++cap[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool is_rho_vortex(const Society& society, int rho, int vertex_cap) {
    if (rho < 0) throw input_error("is_rho_vortex: rho must be >= 0");
    auto ok = validate_society(society);
    if (!ok) throw input_error("is_rho_vortex: " + ok.reason);
    if (society.graph.vertex_count() > vertex_cap)
        throw size_error("is_rho_vortex: society exceeds cap " + std::to_string(vertex_cap));
    const auto& om = society.omega;
    const int k = static_cast<int>(om.size());
    if (k <= 1) return true;
    if (rho >= society.graph.vertex_count()) return true;
    for (int ui = 0; ui < k; ++ui)
        for (int vi = 0; vi < k; ++vi) {
            if (ui == vi) continue;
            std::vector<int> xs{om[static_cast<std::size_t>(ui)]};
            std::vector<int> ys{om[static_cast<std::size_t>(vi)]};
            for (int p = (ui + 1) % k; p != vi; p = (p + 1) % k)
                xs.push_back(om[static_cast<std::size_t>(p)]);  // I: after u, before v
            for (int p = (vi + 1) % k; p != ui; p = (p + 1) % k)
                ys.push_back(om[static_cast<std::size_t>(p)]);  // J: after v, before u
            if (disjoint_paths(society.graph, xs, ys, rho + 1) >= rho + 1) return false;
        }
    return true;
}

Verdict validate_vortical(const Society& society, const PathDecomposition& pd) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    auto soc_ok = validate_society(society);
    if (!soc_ok) return soc_ok;
    const int k = static_cast<int>(society.omega.size());
    if (static_cast<int>(pd.bags.size()) != k)
        throw input_error("validate_vortical: node count (" + std::to_string(pd.bags.size()) +
                          ") != |omega| (" + std::to_string(k) + ")");
    const Graph& s = society.graph;
    for (const auto& bag : pd.bags)
        for (int v : bag)
            if (!s.has_vertex(v)) return bad("bag contains out-of-range vertex");
    for (int i = 0; i < k; ++i) {
        const auto& bag = pd.bags[static_cast<std::size_t>(i)];
        if (std::find(bag.begin(), bag.end(), society.omega[static_cast<std::size_t>(i)]) ==
            bag.end())
            return bad("bag " + std::to_string(i + 1) + " misses its omega vertex");
    }
    // Path decomposition conditions: contiguous occurrences, all vertices and
    // edges covered.
    for (int v = 0; v < s.vertex_count(); ++v) {
        int first = -1, last = -1, count = 0;
        for (int i = 0; i < k; ++i)
            if (std::find(pd.bags[static_cast<std::size_t>(i)].begin(),
                          pd.bags[static_cast<std::size_t>(i)].end(),
                          v) != pd.bags[static_cast<std::size_t>(i)].end()) {
                if (first < 0) first = i;
                last = i;
                ++count;
            }
        if (count == 0) return bad("vertex " + std::to_string(v) + " in no bag");
        if (count != last - first + 1)
            return bad("vertex " + std::to_string(v) + " occurs non-contiguously");
    }
    for (auto [u, v] : s.edges()) {
        bool covered = false;
        for (const auto& bag : pd.bags)
            if (std::find(bag.begin(), bag.end(), u) != bag.end() &&
                std::find(bag.begin(), bag.end(), v) != bag.end()) {
                covered = true;
                break;
            }
        if (!covered)
            return bad("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
    }
    return {};
}

int vortical_adhesion(const Society& society, const PathDecomposition& pd) {
    if (static_cast<int>(pd.bags.size()) != static_cast<int>(society.omega.size()))
        throw input_error("vortical_adhesion: node count != |omega|");
    int best = 0;
    for (std::size_t i = 0; i < pd.bags.size(); ++i) {
        std::vector<int> a = pd.bags[i];
        std::sort(a.begin(), a.end());
        for (std::size_t j = i + 1; j < pd.bags.size(); ++j) {
            int cnt = 0;
            for (int v : pd.bags[j])
                if (set_contains(a, v)) ++cnt;
            best = std::max(best, cnt);
        }
    }
    return best;
}

std::optional<PathDecomposition> find_vortical_decomposition(const Society& society,
                                                             int max_adhesion) {
    auto ok = validate_society(society);
    if (!ok) throw input_error("find_vortical_decomposition: " + ok.reason);
    const Graph& s = society.graph;
    const int n = s.vertex_count();
    const int k = static_cast<int>(society.omega.size());
    if (k == 0) return std::nullopt;

    // A path decomposition over k nodes is an interval [lo,hi] per vertex;
    // bag i = vertices whose interval covers i. Adhesion equals the max
    // consecutive-bag overlap, so prune on that as intervals are assigned.
    std::vector<int> pos_of(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < k; ++i) pos_of[static_cast<std::size_t>(society.omega[static_cast<std::size_t>(i)])] = i;

    std::vector<std::pair<int, int>> interval(static_cast<std::size_t>(n), {-1, -1});
    std::vector<int> overlap(static_cast<std::size_t>(k), 0);  // |X_i ∩ X_{i+1}| counts
    std::optional<PathDecomposition> found;

    std::function<void(int)> assign = [&](int v) {
        if (found) return;
        if (v == n) {
            // all intervals set: check edge coverage
            for (auto [a, b] : s.edges()) {
                auto [la, ha] = interval[static_cast<std::size_t>(a)];
                auto [lb, hb] = interval[static_cast<std::size_t>(b)];
                if (std::max(la, lb) > std::min(ha, hb)) return;
            }
            PathDecomposition pd;
            pd.bags.assign(static_cast<std::size_t>(k), {});
            for (int x = 0; x < n; ++x)
                for (int i = interval[static_cast<std::size_t>(x)].first;
                     i <= interval[static_cast<std::size_t>(x)].second; ++i)
                    pd.bags[static_cast<std::size_t>(i)].push_back(x);
            found = pd;
            return;
        }
        for (int lo = 0; lo < k; ++lo) {
            for (int hi = lo; hi < k; ++hi) {
                int p = pos_of[static_cast<std::size_t>(v)];
                if (p >= 0 && (p < lo || p > hi)) continue;  // must hold its omega slot
                bool fits = true;
                for (int i = lo; i < hi; ++i)
                    if (overlap[static_cast<std::size_t>(i)] + 1 > max_adhesion) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                interval[static_cast<std::size_t>(v)] = {lo, hi};
                for (int i = lo; i < hi; ++i) ++overlap[static_cast<std::size_t>(i)];
                assign(v + 1);
                for (int i = lo; i < hi; ++i) --overlap[static_cast<std::size_t>(i)];
                interval[static_cast<std::size_t>(v)] = {-1, -1};
                if (found) return;
            }
        }
    };
    assign(0);
    return found;
}

Verdict validate_segregation(const Graph& g, const Segregation& seg) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    std::vector<char> v_covered(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> e_covered(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<std::vector<int>> vsets, osets;
    std::vector<std::set<std::pair<int, int>>> esets;
    for (std::size_t i = 0; i < seg.members.size(); ++i) {
        const auto& mem = seg.members[i];
        auto tag = [&](const std::string& why) { return bad("member " + std::to_string(i) + ": " + why); };
        std::vector<int> vs;
        try {
            vs = normalized_vertex_set(g, mem.vertices, "segregation member");
        } catch (const input_error& e) {
            return tag(e.what());
        }
        if (vs.size() != mem.vertices.size()) return tag("duplicate vertex in member");
        std::set<std::pair<int, int>> es;
        for (auto [u, v] : mem.edges) {
            if (!g.has_edge(u, v))
                return tag("uses non-edge " + std::to_string(u) + "-" + std::to_string(v));
            if (!set_contains(vs, u) || !set_contains(vs, v))
                return tag("edge endpoint outside the member's vertex set");
            auto key = std::minmax(u, v);
            es.insert({key.first, key.second});
            e_covered[static_cast<std::size_t>(g.edge_index(u, v))] = 1;
        }
        std::set<int> omega_seen;
        for (int v : mem.omega) {
            if (!set_contains(vs, v)) return tag("omega vertex outside the member");
            if (!omega_seen.insert(v).second) return tag("omega repeats a vertex");
        }
        for (int v : vs) v_covered[static_cast<std::size_t>(v)] = 1;
        vsets.push_back(vs);
        auto om = mem.omega;
        std::sort(om.begin(), om.end());
        osets.push_back(om);
        esets.push_back(std::move(es));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!v_covered[static_cast<std::size_t>(v)])
            return bad("vertex " + std::to_string(v) + " not covered by any member");
    for (int e = 0; e < g.edge_count(); ++e)
        if (!e_covered[static_cast<std::size_t>(e)])
            return bad("edge " + std::to_string(g.edges()[static_cast<std::size_t>(e)].first) +
                       "-" + std::to_string(g.edges()[static_cast<std::size_t>(e)].second) +
                       " not covered by any member");
    for (std::size_t i = 0; i < vsets.size(); ++i)
        for (std::size_t j = i + 1; j < vsets.size(); ++j) {
            auto shared = sorted_intersection(vsets[i], vsets[j]);
            auto allowed = sorted_intersection(osets[i], osets[j]);
            if (!sorted_difference(shared, allowed).empty())
                return bad("members " + std::to_string(i) + "," + std::to_string(j) +
                           " share a non-omega vertex");
            for (const auto& e : esets[i])
                if (esets[j].count(e))
                    return bad("members " + std::to_string(i) + "," + std::to_string(j) +
                               " share an edge");
        }
    return {};
}

Society member_society(const SubgraphSociety& member) {
    std::vector<int> vs = member.vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : member.edges) es.emplace_back(index_of(u), index_of(v));
    Society soc;
    soc.graph = Graph(static_cast<int>(vs.size()), std::move(es));
    for (int v : member.omega) soc.omega.push_back(index_of(v));
    return soc;
}

bool segregation_has_type(const Segregation& seg, int kappa, int rho) {
    int vortex_count = 0;
    for (const auto& mem : seg.members)
        if (static_cast<int>(mem.omega.size()) > 3) {
            if (!is_rho_vortex(member_society(mem), rho)) return false;
            ++vortex_count;
        }
    return vortex_count <= kappa;
}

Verdict validate_location(const Graph& g, const std::vector<Separation>& loc) {
    auto bad = [](const std::string& why) { return Verdict{false, why}; };
    for (std::size_t i = 0; i < loc.size(); ++i) {
        auto ok = validate_separation(g, loc[i]);
        if (!ok) return bad("member " + std::to_string(i) + ": " + ok.reason);
    }
    for (std::size_t i = 0; i < loc.size(); ++i)
        for (std::size_t j = 0; j < loc.size(); ++j) {
            if (i == j) continue;
            // A_i must be a subgraph of B_j.
            if (sorted_difference(loc[i].va, loc[j].vb) != std::vector<int>{})
                return bad("A-side of member " + std::to_string(i) +
                           " has vertices outside B-side of member " + std::to_string(j));
            for (std::size_t e = 0; e < loc[i].edge_side.size(); ++e)
                if (loc[i].edge_side[e] == 0 && loc[j].edge_side[e] == 0)
                    return bad("A-side of member " + std::to_string(i) +
                               " has an edge outside B-side of member " + std::to_string(j));
        }
    return {};
}

Graph location_interior(const Graph& g, const std::vector<Separation>& loc,
                        std::vector<int>* old_of_new) {
    auto ok = validate_location(g, loc);
    if (!ok) throw input_error("location_interior: " + ok.reason);
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v) keep.push_back(v);
    for (const auto& sep : loc) keep = sorted_intersection(keep, sep.vb);
    return g.induced(keep, old_of_new);
}

}  // namespace clucol
