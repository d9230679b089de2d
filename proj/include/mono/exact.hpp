#ifndef MONO_EXACT_HPP
#define MONO_EXACT_HPP

#include <algorithm>

#include "mono/graph.hpp"

namespace mono {

// A monochromatic cycle partition candidate. Degenerate cycles are allowed:
// empty, single vertex, or two vertices standing for one edge of the color.
struct CyclePartition {
    std::vector<int> red_cycle;
    std::vector<int> blue_cycle;
};

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> reasons;  // overlap / not spanning / missing edge / wrong color / bad degenerate size
};

namespace detail {
inline void note(VerifyResult& r, const std::string& reason) {
    r.ok = false;
    for (auto& s : r.reasons)
        if (s == reason) return;
    r.reasons.push_back(reason);
}

inline void verify_cycle(const ColoredGraph& g, const std::vector<int>& cyc, Color c,
                         VerifyResult& r) {
    if (cyc.size() == 2) {
        if (cyc[0] == cyc[1]) {
            note(r, "bad degenerate size");
            return;
        }
        if (!g.has_edge(cyc[0], cyc[1]))
            note(r, "missing edge");
        else if (!g.has_edge(cyc[0], cyc[1], c))
            note(r, "wrong color");
        return;
    }
    if (cyc.size() < 3) return;  // empty and single-vertex cycles need no edges
    for (size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        if (!g.has_edge(u, v))
            note(r, "missing edge");
        else if (!g.has_edge(u, v, c))
            note(r, "wrong color");
    }
}
}  // namespace detail

inline VerifyResult verify_partition(const ColoredGraph& g, const CyclePartition& p) {
    VerifyResult r;
    VertexSet seen(g.n());
    bool dup = false;
    for (const auto* cyc : {&p.red_cycle, &p.blue_cycle})
        for (int v : *cyc) {
            if (v < 0 || v >= g.n()) throw precondition_error("verify_partition: vertex out of range");
            if (seen.contains(v)) dup = true;
            seen.add(v);
        }
    if (dup) detail::note(r, "overlap");
    if (seen.count() != g.n()) detail::note(r, "not spanning");
    detail::verify_cycle(g, p.red_cycle, Color::Red, r);
    detail::verify_cycle(g, p.blue_cycle, Color::Blue, r);
    return r;
}

namespace detail {

// For every subset S of 0..n-1: does g[S] have a Hamiltonian cycle, with the
// degenerate conventions (|S| <= 1 yes, |S| = 2 iff the edge exists)?
// Paths are anchored at the lowest vertex of S: dp[S] = bitmask of endpoints v
// reachable by a Hamiltonian path of S from min(S).
inline std::vector<uint8_t> ham_cycle_table(const Graph& g, int n) {
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.nbrs(v).for_each([&](int u) { adj[v] |= uint32_t(1) << u; });
    size_t full = size_t(1) << n;
    std::vector<uint32_t> dp(full, 0);
    std::vector<uint8_t> ham(full, 0);
    ham[0] = 1;
    for (size_t s = 1; s < full; ++s) {
        int low = __builtin_ctzll(s);
        uint32_t rest = uint32_t(s) & ~(uint32_t(1) << low);
        if (!rest) {
            dp[s] = uint32_t(1) << low;
            ham[s] = 1;
            continue;
        }
        uint32_t r = 0, it = rest;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            if (dp[s ^ (uint32_t(1) << v)] & adj[v]) r |= uint32_t(1) << v;
        }
        dp[s] = r;
        int pc = __builtin_popcountll(s);
        if (pc == 2)
            ham[s] = (adj[low] >> __builtin_ctz(rest)) & 1;
        else
            ham[s] = (r & adj[low]) != 0;
    }
    return ham;
}

// Lexicographically least Hamiltonian cycle of g restricted to `verts`
// (ascending), written from its smallest vertex. dp_end[T] = starts v in T
// from which a Hamiltonian path of T can end adjacent to the anchor.
inline std::vector<int> least_ham_cycle(const Graph& g, const std::vector<int>& verts) {
    int m = int(verts.size());
    if (m == 0) return {};
    if (m == 1) return {verts[0]};
    if (m == 2) return {verts[0], verts[1]};
    std::vector<uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (j != i && g.has_edge(verts[i], verts[j])) adj[i] |= uint32_t(1) << j;
    size_t space = size_t(1) << m;
    std::vector<uint32_t> de(space, 0);
    for (size_t t = 1; t < space; ++t) {
        if (t & 1) continue;  // anchor (bit 0) never inside T
        uint32_t r = 0, it = uint32_t(t);
        bool single = (t & (t - 1)) == 0;
        while (it) {
            int v = __builtin_ctz(it);
            it &= it - 1;
            if (single) {
                if (adj[v] & 1u) r |= uint32_t(1) << v;
            } else if (adj[v] & de[t ^ (uint32_t(1) << v)]) {
                r |= uint32_t(1) << v;
            }
        }
        de[t] = r;
    }
    uint32_t remaining = (uint32_t(space) - 1) & ~1u;
    std::vector<int> cyc{verts[0]};
    int cur = 0;
    while (remaining) {
        uint32_t cand = adj[cur] & remaining & de[remaining];
        if (!cand) throw std::logic_error("least_ham_cycle: no continuation (table inconsistent)");
        int v = __builtin_ctz(cand);
        cyc.push_back(verts[v]);
        remaining &= ~(uint32_t(1) << v);
        cur = v;
    }
    return cyc;
}

}  // namespace detail

// Exhaustive search for a vertex partition V = R + B with g_red[R] and
// g_blue[B] Hamiltonian. Among admitting splits, returns the numerically
// least red bitmask and, per side, the lexicographically least cycle order.
inline std::optional<CyclePartition> exact_partition(const ColoredGraph& g, int cap = 20) {
    if (g.n() > cap)
        throw capacity_error("exact_partition: n=" + std::to_string(g.n()) + " exceeds cap " +
                             std::to_string(cap) + "; use heuristic_partition");
    if (g.n() == 0) return CyclePartition{};
    int n = g.n();
    auto ham_r = detail::ham_cycle_table(g.red(), n);
    auto ham_b = detail::ham_cycle_table(g.blue(), n);
    size_t full = (size_t(1) << n) - 1;
    for (size_t s = 0; s <= full; ++s) {
        if (!ham_r[s] || !ham_b[full ^ s]) continue;
        CyclePartition p;
        std::vector<int> rv, bv;
        for (int v = 0; v < n; ++v) ((s >> v) & 1 ? rv : bv).push_back(v);
        p.red_cycle = detail::least_ham_cycle(g.red(), rv);
        p.blue_cycle = detail::least_ham_cycle(g.blue(), bv);
        return p;
    }
    return std::nullopt;
}

// A Hamiltonian cycle of a 2-colored complete graph split into one red path
// and one blue path (either may be empty); the two joining edges are
// unconstrained. Consequently one of the paths has >= ceil(n/2) vertices.
struct PathPair {
    std::vector<int> red_path;
    std::vector<int> blue_path;
};

inline PathPair gg_path_cycle(const ColoredGraph& g, bool require_complete = true) {
    if (require_complete && !g.is_complete())
        throw precondition_error("gg_path_cycle: graph is not complete");
    int n = g.n();
    if (n == 0) return {};
    if (n == 1) return {{0}, {}};
    auto col = [&](int u, int v) {
        ColorSet cs = g.colors(u, v);
        if (!cs.any()) throw precondition_error("gg_path_cycle: missing edge " + std::to_string(u) +
                                                "-" + std::to_string(v));
        return cs;
    };
    // Invariant: edges path[0..r-1] red, edges path[r..] blue (r = junction index).
    // Each new vertex lands at an end or beside the junction; one of the two
    // unknown-color outcomes extends the red prefix, the other the blue suffix.
    std::vector<int> path{0};
    int r = 0;
    for (int v = 1; v < n; ++v) {
        int k = int(path.size());
        if (col(v, path.front()).red) {
            path.insert(path.begin(), v);
            ++r;
        } else if (col(v, path.back()).blue) {
            path.push_back(v);
        } else if (r == k - 1) {  // all-red path, and edge to back is red
            path.push_back(v);
            ++r;
        } else if (r == 0) {  // all-blue path, edge to front is blue
            path.insert(path.begin(), v);
        } else if (col(v, path[r]).red) {
            bool next_red = col(v, path[r + 1]).red;
            path.insert(path.begin() + r + 1, v);
            r += next_red ? 2 : 1;
        } else {
            bool prev_red = col(path[r - 1], v).red;
            path.insert(path.begin() + r, v);
            r += prev_red ? 0 : -1;
        }
    }
    int k = int(path.size());
    PathPair out;
    if (r == k - 1) {  // monochromatic red
        out.red_path = path;
        return out;
    }
    if (r == 0) {
        out.blue_path = path;
        return out;
    }
    if (col(path[k - 1], path[0]).red) {
        out.red_path.push_back(path[k - 1]);
        out.red_path.insert(out.red_path.end(), path.begin(), path.begin() + r + 1);
        out.blue_path.assign(path.begin() + r + 1, path.end() - 1);
    } else {
        out.red_path.assign(path.begin() + 1, path.begin() + r + 1);
        out.blue_path.assign(path.begin() + r + 1, path.end());
        out.blue_path.push_back(path[0]);
    }
    return out;
}

// Validity checker for a PathPair against its host coloring.
inline bool check_path_pair(const ColoredGraph& g, const PathPair& pp) {
    VertexSet seen(g.n());
    for (const auto* p : {&pp.red_path, &pp.blue_path})
        for (int v : *p) {
            if (v < 0 || v >= g.n() || seen.contains(v)) return false;
            seen.add(v);
        }
    if (seen.count() != g.n()) return false;
    for (size_t i = 1; i < pp.red_path.size(); ++i)
        if (!g.has_edge(pp.red_path[i - 1], pp.red_path[i], Color::Red)) return false;
    for (size_t i = 1; i < pp.blue_path.size(); ++i)
        if (!g.has_edge(pp.blue_path[i - 1], pp.blue_path[i], Color::Blue)) return false;
    if (!pp.red_path.empty() && !pp.blue_path.empty()) {
        if (!g.has_edge(pp.red_path.back(), pp.blue_path.front())) return false;
        if (!g.has_edge(pp.blue_path.back(), pp.red_path.front())) return false;
    }
    return true;
}

}  // namespace mono

#endif
