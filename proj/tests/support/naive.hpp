#ifndef MONO_TESTS_NAIVE_HPP
#define MONO_TESTS_NAIVE_HPP

// Independent oracles, kept deliberately dumb: recursive enumeration over
// adjacency lists, no bitmask DP, no shared code with the library internals.

#include <algorithm>
#include <vector>

#include "mono/graph.hpp"

namespace naive {

inline bool ham_dfs(const mono::Graph& g, std::vector<int>& order, std::vector<bool>& used,
                    const std::vector<int>& verts) {
    if (order.size() == verts.size())
        return g.has_edge(order.back(), order.front());
    for (size_t i = 0; i < verts.size(); ++i) {
        if (used[i]) continue;
        if (!g.has_edge(order.back(), verts[i])) continue;
        used[i] = true;
        order.push_back(verts[i]);
        if (ham_dfs(g, order, used, verts)) return true;
        order.pop_back();
        used[i] = false;
    }
    return false;
}

// Hamiltonian cycle on the given vertex set, with the degenerate conventions.
inline bool ham_cycle(const mono::Graph& g, const std::vector<int>& verts) {
    if (verts.size() <= 1) return true;
    if (verts.size() == 2) return g.has_edge(verts[0], verts[1]);
    std::vector<int> order{verts[0]};
    std::vector<bool> used(verts.size(), false);
    used[0] = true;
    return ham_dfs(g, order, used, verts);
}

inline bool partition_exists(const mono::ColoredGraph& g) {
    int n = g.n();
    if (n == 0) return true;
    for (long long mask = 0; mask < (1ll << n); ++mask) {
        std::vector<int> reds, blues;
        for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? reds : blues).push_back(v);
        if (ham_cycle(g.red(), reds) && ham_cycle(g.blue(), blues)) return true;
    }
    return false;
}

// Exhaustive minimum-ratio cut of g restricted to dom (pairwise edge test,
// no incremental tricks). Returns {X, crossing, ratio}; dom must have >= 2.
struct Cut {
    std::vector<int> x;
    long long crossing = 0;
    double ratio = 0;
};

inline Cut min_ratio_cut(const mono::Graph& g, const std::vector<int>& dom) {
    Cut best;
    best.ratio = -1;
    int m = int(dom.size());
    for (long long mask = 0; mask < (1ll << (m - 1)); ++mask) {
        std::vector<int> xs, ys;
        xs.push_back(dom[0]);
        for (int i = 1; i < m; ++i) ((mask >> (i - 1)) & 1 ? xs : ys).push_back(dom[i]);
        if (ys.empty()) continue;
        long long cross = 0;
        for (int u : xs)
            for (int v : ys)
                if (g.has_edge(u, v)) ++cross;
        double ratio = double(cross) / (double(xs.size()) * double(ys.size()));
        if (best.ratio < 0 || ratio < best.ratio) best = {xs, cross, ratio};
    }
    return best;
}

// Count x,y-paths with exactly i internal vertices by plain DFS.
inline void path_dfs(const mono::Graph& g, int y, int depth, int want, std::vector<int>& cur,
                     std::vector<bool>& used, long long& count) {
    int last = cur.back();
    if (depth == want) {
        if (g.has_edge(last, y)) ++count;
        return;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (used[v] || v == y || !g.has_edge(last, v)) continue;
        used[v] = true;
        cur.push_back(v);
        path_dfs(g, y, depth + 1, want, cur, used, count);
        cur.pop_back();
        used[v] = false;
    }
}

inline long long count_paths(const mono::Graph& g, int x, int y, int internal) {
    std::vector<int> cur{x};
    std::vector<bool> used(g.n(), false);
    used[x] = true;
    long long count = 0;
    path_dfs(g, y, 0, internal, cur, used, count);
    return count;
}

// Is `path` a simple path of g (consecutive edges exist, no repeats)?
inline bool valid_path(const mono::Graph& g, const std::vector<int>& path) {
    std::vector<bool> seen(g.n(), false);
    for (int v : path) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = true;
    }
    for (size_t i = 1; i < path.size(); ++i)
        if (!g.has_edge(path[i - 1], path[i])) return false;
    return true;
}

// Simple cycles of length `len` through v, counted once per undirected cycle.
inline long long count_cycles_through(const mono::Graph& g, int v, int len) {
    std::vector<bool> used(g.n(), false);
    used[v] = true;
    long long walks = 0;
    auto dfs = [&](auto&& self, int cur, int depth) -> void {
        if (depth == len - 1) {
            if (g.has_edge(cur, v)) ++walks;
            return;
        }
        for (int w = 0; w < g.n(); ++w) {
            if (used[w] || !g.has_edge(cur, w)) continue;
            used[w] = true;
            self(self, w, depth + 1);
            used[w] = false;
        }
    };
    dfs(dfs, v, 0);
    return walks / 2;  // each cycle walked in both directions
}

// Cycles of length 4j+2 in the cross graph of (xs, ys) through x and y with
// the two at distance 2j+1 along the cycle, counted once per cycle.
inline long long count_antipodal_cycles(const mono::Graph& g, const mono::VertexSet& xs,
                                        const mono::VertexSet& ys, int x, int y, int j) {
    mono::Graph h = mono::cross_subgraph(g, xs, ys);
    int len = 4 * j + 2;
    std::vector<bool> used(h.n(), false);
    used[x] = true;
    long long walks = 0;
    auto dfs = [&](auto&& self, int cur, int depth) -> void {
        if (depth == 2 * j + 1 && cur != y) return;    // antipode pinned
        if (depth != 2 * j + 1 && cur == y) return;
        if (depth == len - 1) {
            if (h.has_edge(cur, x)) ++walks;
            return;
        }
        for (int w = 0; w < h.n(); ++w) {
            if (used[w] || !h.has_edge(cur, w)) continue;
            used[w] = true;
            self(self, w, depth + 1);
            used[w] = false;
        }
    };
    dfs(dfs, x, 0);
    return walks / 2;
}

// Perfect matching existence by matching the lowest uncovered vertex first.
inline bool pm_dfs(const mono::Graph& g, std::vector<bool>& used) {
    int u = -1;
    for (int v = 0; v < g.n(); ++v)
        if (!used[v]) {
            u = v;
            break;
        }
    if (u < 0) return true;
    used[u] = true;
    for (int v = u + 1; v < g.n(); ++v) {
        if (used[v] || !g.has_edge(u, v)) continue;
        used[v] = true;
        if (pm_dfs(g, used)) return true;
        used[v] = false;
    }
    used[u] = false;
    return false;
}

inline bool has_perfect_matching(const mono::Graph& g) {
    if (g.n() % 2 != 0) return false;
    std::vector<bool> used(g.n(), false);
    return pm_dfs(g, used);
}

// Epsilon-regularity straight from the definition: walk every subset pair
// with |A'| >= eps|A| and |B'| >= eps|B| (at least one vertex each) and
// demand |d(A',B') - d(A,B)| < eps. Integer cross-multiplication throughout.
inline bool eps_regular(const mono::Graph& g, const std::vector<int>& a,
                        const std::vector<int>& b, long long eps_num, long long eps_den) {
    const int na = int(a.size()), nb = int(b.size());
    long long base = 0;
    for (int u : a)
        for (int v : b)
            if (g.has_edge(u, v)) ++base;
    const long long ab = (long long)na * nb;
    for (unsigned ma = 1; ma < (1u << na); ++ma) {
        int asz = __builtin_popcount(ma);
        if ((long long)asz * eps_den < eps_num * na) continue;
        for (unsigned mb = 1; mb < (1u << nb); ++mb) {
            int bsz = __builtin_popcount(mb);
            if ((long long)bsz * eps_den < eps_num * nb) continue;
            long long e = 0;
            for (int i = 0; i < na; ++i) {
                if (!(ma >> i & 1)) continue;
                for (int j = 0; j < nb; ++j)
                    if ((mb >> j & 1) && g.has_edge(a[i], b[j])) ++e;
            }
            long long cell = (long long)asz * bsz;
            long long diff = e * ab - base * cell;
            if (diff < 0) diff = -diff;
            if (diff * eps_den >= eps_num * cell * ab) return false;
        }
    }
    return true;
}

}  // namespace naive

#endif
