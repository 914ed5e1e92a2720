#include "clucol/tangle.hpp"

#include <set>
#include <unordered_set>

namespace clucol {

namespace {

// Compact membership key: vertex masks plus A-side edge bits (m <= 66 under
// the 12-vertex cap, so two 64-bit words suffice).
struct SepKey {
    std::uint32_t va = 0, vb = 0;
    std::uint64_t elo = 0, ehi = 0;
    bool operator==(const SepKey&) const = default;
};

struct SepKeyHash {
    std::size_t operator()(const SepKey& k) const {
        std::uint64_t h = k.va * 0x9e3779b97f4a7c15ULL ^ (k.vb + 0x7f4a7c15u);
        h ^= k.elo + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= k.ehi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

SepKey key_of(const Graph& g, const Separation& sep) {
    SepKey k;
    for (int v : sep.va) k.va |= 1u << v;
    for (int v : sep.vb) k.vb |= 1u << v;
    for (int e = 0; e < g.edge_count(); ++e)
        if (sep.edge_side[static_cast<std::size_t>(e)] == 0) {
            if (e < 64)
                k.elo |= 1ull << e;
            else
                k.ehi |= 1ull << (e - 64);
        }
    return k;
}

SepKey reversed_key(const Graph& g, const SepKey& k) {
    SepKey r;
    r.va = k.vb;
    r.vb = k.va;
    int m = g.edge_count();
    std::uint64_t all_lo = m >= 64 ? ~0ull : ((1ull << m) - 1);
    std::uint64_t all_hi = m <= 64 ? 0ull : ((1ull << (m - 64)) - 1);
    r.elo = ~k.elo & all_lo;
    r.ehi = ~k.ehi & all_hi;
    return r;
}

std::string mask_text(std::uint32_t m) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if (m >> v & 1u) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

}  // namespace

TangleVerdict tangle_axioms_check(const Graph& g, const Tangle& tangle, int vertex_cap) {
    if (g.vertex_count() > vertex_cap)
        throw size_error("tangle_axioms_check: graph exceeds cap " + std::to_string(vertex_cap));
    TangleVerdict verdict;
    auto note = [&](const std::string& line) {
        if (!verdict.detail.empty()) verdict.detail += "; ";
        verdict.detail += line;
    };

    std::unordered_set<SepKey, SepKeyHash> members;
    for (const auto& sep : tangle.separations) {
        auto ok = validate_separation(g, sep);
        if (!ok) {
            if (verdict.members_ok) note("invalid member: " + ok.reason);
            verdict.members_ok = false;
            continue;
        }
        if (separation_order(sep) >= tangle.order) {
            if (verdict.members_ok) note("member of order >= theta");
            verdict.members_ok = false;
            continue;
        }
        members.insert(key_of(g, sep));
    }

    // (T1): every separation of order < theta appears in some orientation.
    bool t1_done = tangle.order <= 0;  // no separations of negative order exist
    if (!t1_done)
    enumerate_separations(g, tangle.order - 1, [&](const Separation& sep) {
        if (t1_done) return;
        SepKey k = key_of(g, sep);
        if (!members.count(k) && !members.count(reversed_key(g, k))) {
            verdict.t1 = false;
            t1_done = true;
            note("T1: separation with interface " +
                 mask_text(k.va & k.vb) + " and A-vertices " + mask_text(k.va) +
                 " has no orientation in the set");
        }
    }, vertex_cap);

    // (T3): no member's A-side spans all vertices.
    const std::uint32_t full =
        g.vertex_count() == 0 ? 0 : (g.vertex_count() == 32 ? ~0u : (1u << g.vertex_count()) - 1);
    for (const auto& k : members)
        if (k.va == full) {
            verdict.t3 = false;
            note("T3: member with V(A) = V(G), A-vertices " + mask_text(k.va));
            break;
        }

    // (T2): no three A-sides cover G. Inclusion-maximal A-sides suffice.
    int m = g.edge_count();
    std::uint64_t all_lo = m == 0 ? 0 : (m >= 64 ? ~0ull : ((1ull << m) - 1));
    std::uint64_t all_hi = m <= 64 ? 0ull : ((1ull << (m - 64)) - 1);
    std::vector<SepKey> sides(members.begin(), members.end());
    std::vector<SepKey> maximal;
    for (const auto& a : sides) {
        bool dominated = false;
        for (const auto& b : sides) {
            if (a == b) continue;
            bool sub = (a.va & ~b.va) == 0 && (a.elo & ~b.elo) == 0 && (a.ehi & ~b.ehi) == 0;
            bool eq = a.va == b.va && a.elo == b.elo && a.ehi == b.ehi;
            if (sub && !eq) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(a);
    }
    for (std::size_t i = 0; i < maximal.size() && verdict.t2; ++i)
        for (std::size_t j = i; j < maximal.size() && verdict.t2; ++j) {
            std::uint32_t vij = maximal[i].va | maximal[j].va;
            std::uint64_t lij = maximal[i].elo | maximal[j].elo;
            std::uint64_t hij = maximal[i].ehi | maximal[j].ehi;
            for (std::size_t l = j; l < maximal.size(); ++l) {
                if ((vij | maximal[l].va) == full && (lij | maximal[l].elo) == all_lo &&
                    (hij | maximal[l].ehi) == all_hi) {
                    verdict.t2 = false;
                    note("T2: three members with A-sides " + mask_text(maximal[i].va) + " " +
                         mask_text(maximal[j].va) + " " + mask_text(maximal[l].va) + " cover G");
                    break;
                }
            }
        }
    return verdict;
}

Tangle tangle_from_y1(const Graph& g, int theta, const std::vector<int>& y1, int vertex_cap) {
    if (theta < 1) throw input_error("tangle_from_y1: theta must be >= 1");
    auto ys = normalized_vertex_set(g, y1, "tangle_from_y1");
    Tangle tangle;
    tangle.order = theta;
    enumerate_separations(g, theta - 1, [&](const Separation& sep) {
        if (static_cast<int>(sorted_intersection(sep.va, ys).size()) <= 3 * theta)
            tangle.separations.push_back(sep);
    }, vertex_cap);
    return tangle;
}

bool controls_minor(const Graph& g, const Graph& h, const Tangle& tangle, const MinorModel& m) {
    auto ok = validate_minor_model(g, h, m);
    if (!ok) throw input_error("controls_minor: invalid minor model: " + ok.reason);
    for (const auto& sep : tangle.separations) {
        if (separation_order(sep) >= h.vertex_count()) continue;
        for (const auto& bs : m.branch_sets) {
            bool inside = true;
            for (int v : bs)
                if (!set_contains(sep.va, v)) {
                    inside = false;
                    break;
                }
            if (inside) return false;
        }
    }
    return true;
}

TangleMinusZ tangle_minus_z(const Graph& g, const Tangle& tangle, const std::vector<int>& z) {
    auto zs = normalized_vertex_set(g, z, "tangle_minus_z");
    if (static_cast<int>(zs.size()) >= tangle.order)
        throw input_error("tangle_minus_z: |Z| must be below the tangle order");
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!set_contains(zs, v)) keep.push_back(v);
    TangleMinusZ out;
    out.graph = g.induced(keep, &out.old_of_new);
    out.tangle.order = tangle.order - static_cast<int>(zs.size());
    std::vector<int> new_of_old(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.old_of_new.size(); ++i)
        new_of_old[static_cast<std::size_t>(out.old_of_new[i])] = static_cast<int>(i);

    std::unordered_set<SepKey, SepKeyHash> seen;
    for (const auto& sep : tangle.separations) {
        auto interface = separation_interface(sep);
        if (sorted_intersection(interface, zs) != zs) continue;  // Z must sit inside V(A ∩ B)
        Separation mapped;
        for (int v : sep.va)
            if (!set_contains(zs, v)) mapped.va.push_back(new_of_old[static_cast<std::size_t>(v)]);
        for (int v : sep.vb)
            if (!set_contains(zs, v)) mapped.vb.push_back(new_of_old[static_cast<std::size_t>(v)]);
        std::sort(mapped.va.begin(), mapped.va.end());
        std::sort(mapped.vb.begin(), mapped.vb.end());
        mapped.edge_side.assign(static_cast<std::size_t>(out.graph.edge_count()), 0);
        for (int e = 0; e < out.graph.edge_count(); ++e) {
            auto [u, v] = out.graph.edges()[static_cast<std::size_t>(e)];
            int old_e = g.edge_index(out.old_of_new[static_cast<std::size_t>(u)],
                                     out.old_of_new[static_cast<std::size_t>(v)]);
            mapped.edge_side[static_cast<std::size_t>(e)] =
                sep.edge_side[static_cast<std::size_t>(old_e)];
        }
        if (seen.insert(key_of(out.graph, mapped)).second)
            out.tangle.separations.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace clucol
