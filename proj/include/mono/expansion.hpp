#pragma once

#include <optional>
#include <vector>

#include "mono/common.hpp"
#include "mono/graph.hpp"

namespace mono {

// Layered neighborhood structure rooted at x: layers[0] = N(x), and each
// later layer attaches to the previous one. threshold is the target floor
// alpha^2 * ambient_n / k; achieved_floor is the measured minimum attachment
// degree (-1 when there is at most one layer).
struct Cascade {
    int root = -1;
    Frac threshold;
    std::vector<VertexSet> layers;
    bool spanning = false;
    int achieved_floor = -1;
};

inline Cascade neighborhood_cascade(const Graph& g, int x, Frac alpha,
                                    int ambient_n) {
    int n = g.n();
    if (x < 0 || x >= n) throw precondition_error("neighborhood_cascade: root out of range");
    Frac grow = alpha * alpha * Frac(ambient_n);

    std::vector<VertexSet> layer;
    layer.push_back(g.nbrs(x));
    VertexSet covered = layer[0];
    covered.add(x);

    // growth: collect everything with at least alpha^2*n neighbors so far
    while (covered.count() < n) {
        VertexSet next(n);
        for (int v = 0; v < n; ++v)
            if (!covered.contains(v) && Frac(g.deg_in(v, covered)) >= grow)
                next.add(v);
        if (next.empty()) break;
        covered |= next;
        layer.push_back(next);
    }

    // reassignment: each vertex of layer i drops to just after the earliest
    // layer where it keeps alpha^2*n/h neighbors, h = nonempty layers so far.
    // The split of layer i is computed against a snapshot, then applied at
    // once; vertices with no qualifying layer stay put.
    int k0 = static_cast<int>(layer.size());
    for (int i = 2; i <= k0; ++i) {
        int h = 0;
        for (int j = 0; j < i; ++j)
            if (!layer[j].empty()) ++h;
        if (h == 0) continue;
        Frac floor = grow / Frac(h);
        std::vector<VertexSet> snap(layer.begin(), layer.begin() + (i - 1));
        for (int v : layer[i - 1].to_vector()) {
            for (int j = 1; j <= i - 1; ++j) {
                if (Frac(g.deg_in(v, snap[j - 1])) >= floor) {
                    if (j + 1 != i) {
                        layer[i - 1].remove(v);
                        layer[j].add(v);
                    }
                    break;
                }
            }
        }
    }

    Cascade c;
    c.root = x;
    for (auto& l : layer)
        if (!l.empty()) c.layers.push_back(l);
    int k = static_cast<int>(c.layers.size());
    c.threshold = k > 0 ? alpha * alpha * Frac(ambient_n) / Frac(k) : Frac(0);
    long long covered_count = 1;
    for (auto& l : c.layers) covered_count += l.count();
    c.spanning = covered_count == n;
    for (int i = 0; i + 1 < k; ++i) {
        int f = -1;
        c.layers[i + 1].for_each([&](int v) {
            int d = g.deg_in(v, c.layers[i]);
            if (f < 0 || d < f) f = d;
        });
        if (c.achieved_floor < 0 || f < c.achieved_floor) c.achieved_floor = f;
    }
    return c;
}

namespace detail {

// Count x,y-paths with exactly `internals` internal vertices. Paths are
// undirected; rooting the enumeration at x counts each exactly once.
inline long long count_connectors_at(const Graph& g, int x, int y, int internals) {
    VertexSet used(g.n());
    used.add(x);
    used.add(y);
    long long total = 0;
    auto dfs = [&](auto&& self, int cur, int depth) -> void {
        if (depth == internals) {
            if (g.has_edge(cur, y)) ++total;
            return;
        }
        VertexSet cand = g.nbrs(cur) - used;
        cand.for_each([&](int v) {
            used.add(v);
            self(self, v, depth + 1);
            used.remove(v);
        });
    };
    dfs(dfs, x, 0);
    return total;
}

}  // namespace detail

struct ConnectorCounts {
    int x = -1, y = -1;
    std::vector<long long> counts;  // counts[i-1] = number of paths with i internals
};

inline ConnectorCounts count_connectors(const Graph& g, int x, int y, int i_max) {
    if (x == y) throw precondition_error("count_connectors: endpoints coincide");
    if (i_max < 1 || i_max > 4)
        throw capacity_error("count_connectors: i_max must be in 1..4");
    ConnectorCounts cc{x, y, {}};
    for (int i = 1; i <= i_max; ++i)
        cc.counts.push_back(detail::count_connectors_at(g, x, y, i));
    return cc;
}

struct PairWitness {
    int x = -1, y = -1;
    int witness = 0;  // least i with counts[i] >= (alpha*n)^i, 0 = fail
};

struct ConnectingReport {
    int k = 0;
    Frac alpha;
    int ambient_n = 0;
    bool all_pass = false;
    int max_witness = 0;
    std::vector<PairWitness> pairs;
};

inline ConnectingReport connecting_certificate(const Graph& g, int k, Frac alpha,
                                               int ambient_n) {
    if (k < 1 || k > 4)
        throw capacity_error("connecting_certificate: k must be in 1..4");
    ConnectingReport rep;
    rep.k = k;
    rep.alpha = alpha;
    rep.ambient_n = ambient_n;
    rep.all_pass = true;
    Frac base = alpha * Frac(ambient_n);
    for (int x = 0; x < g.n(); ++x) {
        for (int y = x + 1; y < g.n(); ++y) {
            PairWitness pw{x, y, 0};
            Frac need(1);
            for (int i = 1; i <= k; ++i) {
                need = need * base;
                if (Frac(detail::count_connectors_at(g, x, y, i)) >= need) {
                    pw.witness = i;
                    break;
                }
            }
            if (pw.witness == 0) rep.all_pass = false;
            else rep.max_witness = std::max(rep.max_witness, pw.witness);
            rep.pairs.push_back(pw);
        }
    }
    return rep;
}

// Lexicographically least x,y-path with exactly `internals` internal vertices,
// none of which touch `avoid`. Endpoints may sit inside avoid; only internal
// vertices are constrained.
inline std::optional<std::vector<int>> least_connector(const Graph& g, int x, int y,
                                                       int internals,
                                                       const VertexSet& avoid) {
    if (x == y) throw precondition_error("least_connector: endpoints coincide");
    VertexSet used(g.n());
    used.add(x);
    used.add(y);
    std::vector<int> path{x};
    std::optional<std::vector<int>> out;
    auto dfs = [&](auto&& self, int cur, int depth) -> bool {
        if (depth == internals) {
            if (g.has_edge(cur, y)) {
                path.push_back(y);
                out = path;
                return true;
            }
            return false;
        }
        VertexSet cand = (g.nbrs(cur) - used) - avoid;
        bool found = false;
        cand.for_each([&](int v) {
            if (found) return;
            used.add(v);
            path.push_back(v);
            if (self(self, v, depth + 1)) found = true;
            else {
                path.pop_back();
                used.remove(v);
            }
        });
        return found;
    };
    if (dfs(dfs, x, 0)) return out;
    return std::nullopt;
}

}  // namespace mono
