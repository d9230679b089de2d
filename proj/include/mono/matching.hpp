#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <mono/exact.hpp>
#include <mono/graph.hpp>

namespace mono {

// One chosen color per edge; plain-host operations default every edge to red.
struct Matching {
    std::vector<std::pair<int, int>> edges;  // u < v
    std::vector<Color> colors;               // parallel to edges
    int size() const { return int(edges.size()); }
    bool operator==(const Matching&) const = default;
};

inline bool matching_valid(const Graph& g, const Matching& m) {
    if (m.colors.size() != m.edges.size()) return false;
    VertexSet used(g.n());
    for (auto [u, v] : m.edges) {
        if (!g.has_edge(u, v)) return false;
        if (used.contains(u) || used.contains(v)) return false;
        used.add(u);
        used.add(v);
    }
    return true;
}

inline bool matching_valid(const ColoredGraph& g, const Matching& m) {
    if (m.colors.size() != m.edges.size()) return false;
    VertexSet used(g.n());
    for (size_t i = 0; i < m.edges.size(); ++i) {
        auto [u, v] = m.edges[i];
        if (!g.has_edge(u, v, m.colors[i])) return false;
        if (used.contains(u) || used.contains(v)) return false;
        used.add(u);
        used.add(v);
    }
    return true;
}

struct PartitionedHost {
    Graph g;
    std::vector<VertexSet> parts;  // disjoint, covering V(g)
};

struct ChvatalResult {
    bool condition_met = false;
    std::optional<std::vector<int>> cycle;
};

// Degree-sequence Hamiltonicity, general form: sorted d_1 <= ... <= d_n must
// give d_i >= i+1 or d_{n-i} >= n-i for every 1 <= i < n/2. One-directional:
// a failed condition decides nothing.
inline ChvatalResult chvatal_hamiltonian(const Graph& g, int cap = 20) {
    int n = g.n();
    if (n < 3) throw precondition_error("chvatal_hamiltonian: needs n >= 3");
    std::vector<int> d(n);
    for (int v = 0; v < n; ++v) d[v] = g.deg(v);
    std::sort(d.begin(), d.end());
    ChvatalResult res;
    for (int i = 1; 2 * i < n; ++i)
        if (!(d[i - 1] >= i + 1 || d[n - i - 1] >= n - i)) return res;
    res.condition_met = true;
    if (n > cap)
        throw capacity_error("chvatal_hamiltonian: witness search capped at " +
                             std::to_string(cap));
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    res.cycle = detail::least_ham_cycle(g, verts);
    return res;
}

// Bipartite form on sides (us, vs), each sorted ascending by degree into the
// other side: deg(u_i) > i or deg(v_{m-i}) > m-i for every 1 <= i < m.
// Only cross edges count; the witness cycle covers us | vs.
inline ChvatalResult chvatal_hamiltonian(const Graph& g, const VertexSet& us,
                                         const VertexSet& vs, int cap = 20) {
    if (us.intersects(vs))
        throw precondition_error("chvatal_hamiltonian: sides overlap");
    int m = int(us.count());
    if (m != int(vs.count()))
        throw precondition_error("chvatal_hamiltonian: sides are unbalanced");
    if (2 * m < 4) throw precondition_error("chvatal_hamiltonian: needs 2m >= 4");
    std::vector<int> du, dv;
    us.for_each([&](int u) { du.push_back(g.deg_in(u, vs)); });
    vs.for_each([&](int v) { dv.push_back(g.deg_in(v, us)); });
    std::sort(du.begin(), du.end());
    std::sort(dv.begin(), dv.end());
    ChvatalResult res;
    for (int i = 1; i < m; ++i)
        if (!(du[i - 1] > i || dv[m - i - 1] > m - i)) return res;
    res.condition_met = true;
    if (2 * m > cap)
        throw capacity_error("chvatal_hamiltonian: witness search capped at " +
                             std::to_string(cap));
    std::vector<int> verts = (us | vs).to_vector();
    res.cycle = detail::least_ham_cycle(cross_subgraph(g, us, vs), verts);
    return res;
}

namespace detail {

// Lexicographically least Hamiltonian x,y-path covering dom, by DFS with a
// stranded-vertex prune.
inline std::optional<std::vector<int>> ham_path_exact(const Graph& g, const VertexSet& dom,
                                                      int x, int y) {
    int want = int(dom.count());
    std::vector<int> path{x};
    VertexSet seen(g.n());
    seen.add(x);
    auto dfs = [&](auto&& self, int cur) -> bool {
        if (int(path.size()) == want) return cur == y;
        if (cur == y) return false;
        VertexSet rest = dom - seen;
        bool dead = false;
        rest.for_each([&](int v) {
            if (v != y && (g.nbrs(v) & (rest - VertexSet::of(g.n(), {v}))).empty() &&
                !g.has_edge(v, cur))
                dead = true;
        });
        if (dead) return false;
        bool found = false;
        (g.nbrs(cur) & rest).for_each([&](int v) {
            if (found) return;
            seen.add(v);
            path.push_back(v);
            if (self(self, v)) {
                found = true;
                return;
            }
            path.pop_back();
            seen.remove(v);
        });
        return found;
    };
    if (!dom.contains(x) || !dom.contains(y) || x == y) return std::nullopt;
    if (dfs(dfs, x)) return path;
    return std::nullopt;
}

}  // namespace detail

struct HamPathReport {
    bool under_guarantee = false;
    std::string failed_floor;  // empty when both degree floors hold
    std::optional<std::vector<int>> path;
};

// Hamiltonian biconnectedness probe for a balanced bipartite pair: when every
// cross degree clears side/2 + 1 the x,y-path is guaranteed (delete x and y,
// take the forced Hamiltonian cycle, splice at a consecutive pair); otherwise
// fall back to exact search and say which floor failed.
inline HamPathReport hamiltonian_biconnected_check(const Graph& h, const VertexSet& ss,
                                                   const VertexSet& ts, int x, int y,
                                                   int cap = 20) {
    if (ss.intersects(ts))
        throw precondition_error("hamiltonian_biconnected_check: sides overlap");
    int m = int(ss.count());
    if (m != int(ts.count()))
        throw precondition_error("hamiltonian_biconnected_check: sides are unbalanced");
    if (!ss.contains(x) || !ts.contains(y))
        throw precondition_error("hamiltonian_biconnected_check: x, y must sit in S, T");
    if (2 * m > cap)
        throw capacity_error("hamiltonian_biconnected_check: capped at " + std::to_string(cap) +
                             " vertices");
    Graph cross = cross_subgraph(h, ss, ts);
    HamPathReport rep;
    auto floor_fail = [&](const char* side, const VertexSet& from, const VertexSet& to) {
        std::string out;
        from.for_each([&](int v) {
            if (!out.empty()) return;
            if (2 * cross.deg_in(v, to) <= int(to.count()) + 2)
                out = std::string(side) + "-side vertex " + std::to_string(v) + ": degree " +
                      std::to_string(cross.deg_in(v, to)) + " <= " +
                      std::to_string(to.count()) + "/2 + 1";
        });
        return out;
    };
    rep.failed_floor = floor_fail("S", ss, ts);
    if (rep.failed_floor.empty()) rep.failed_floor = floor_fail("T", ts, ss);
    if (!rep.failed_floor.empty()) {
        rep.path = detail::ham_path_exact(cross, ss | ts, x, y);
        return rep;
    }
    rep.under_guarantee = true;
    VertexSet sx = ss, ty = ts;
    sx.remove(x);
    ty.remove(y);
    ChvatalResult sub = chvatal_hamiltonian(cross, sx, ty, cap);
    if (!sub.condition_met || !sub.cycle)
        throw std::logic_error("hamiltonian_biconnected_check: floors hold but the reduced "
                               "cycle condition failed");
    const std::vector<int>& c = *sub.cycle;
    int len = int(c.size());
    for (int t = 0; t < len; ++t) {
        int a = c[t], b = c[(t + 1) % len];
        std::vector<int> p;
        if (cross.has_edge(y, a) && cross.has_edge(x, b)) {
            p.push_back(x);
            for (int s = 0; s < len; ++s) p.push_back(c[(t + 1 + s) % len]);
            p.push_back(y);
        } else if (cross.has_edge(y, b) && cross.has_edge(x, a)) {
            p.push_back(x);
            for (int s = 0; s < len; ++s) p.push_back(c[(t + len - s) % len]);
            p.push_back(y);
        }
        if (!p.empty()) {
            rep.path = std::move(p);
            return rep;
        }
    }
    throw std::logic_error("hamiltonian_biconnected_check: no splice pair on the cycle");
}

struct MultipartiteMatching {
    Matching matching;
    bool connected = false;
};

// Perfect matching in a k-partite host under the part-relative degree floor
// deg(x) > 3n/4 - |X_i|. The floor makes perfection a theorem, so an
// imperfect maximum matching aborts loudly instead of being returned.
inline MultipartiteMatching multipartite_perfect_matching(const PartitionedHost& host) {
    const Graph& g = host.g;
    int n = g.n();
    if (n % 2 != 0) throw precondition_error("multipartite_perfect_matching: n is odd");
    VertexSet covered(n);
    for (size_t i = 0; i < host.parts.size(); ++i) {
        const VertexSet& p = host.parts[i];
        if (p.empty())
            throw precondition_error("multipartite_perfect_matching: part " + std::to_string(i) +
                                     " is empty");
        if (p.intersects(covered))
            throw precondition_error("multipartite_perfect_matching: part " + std::to_string(i) +
                                     " overlaps another part");
        covered |= p;
        if (2 * p.count() > n)
            throw precondition_error("multipartite_perfect_matching: part " + std::to_string(i) +
                                     " exceeds n/2");
        if (g.edges_within(p) > 0)
            throw precondition_error("multipartite_perfect_matching: part " + std::to_string(i) +
                                     " has an internal edge");
        bool bad = false;
        int badv = -1;
        p.for_each([&](int v) {
            if (!bad && 4 * g.deg(v) <= 3 * n - 4 * int(p.count())) {
                bad = true;
                badv = v;
            }
        });
        if (bad)
            throw precondition_error("multipartite_perfect_matching: degree floor fails at vertex " +
                                     std::to_string(badv) + " in part " + std::to_string(i));
    }
    if (int(covered.count()) != n)
        throw precondition_error("multipartite_perfect_matching: parts do not cover V");

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    size_t bn = size_t(n);
    BGraph bg(bn);
    for (int u = 0; u < n; ++u)
        g.nbrs(u).for_each([&](int v) {
            if (v > u) boost::add_edge(size_t(u), size_t(v), bg);
        });
    std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(bn);
    if (!boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]))
        throw std::logic_error("multipartite_perfect_matching: matching verifier rejected");
    auto null_v = boost::graph_traits<BGraph>::null_vertex();
    MultipartiteMatching out;
    for (int v = 0; v < n; ++v) {
        if (mate[size_t(v)] == null_v)
            throw std::logic_error("multipartite_perfect_matching: maximum matching is imperfect "
                                   "under valid preconditions");
        int w = int(mate[size_t(v)]);
        if (v < w) {
            out.matching.edges.emplace_back(v, w);
            out.matching.colors.push_back(Color::Red);
        }
    }
    out.connected = g.connected_within(VertexSet::full(n));
    return out;
}

namespace detail {

// Strip wrong-color edges on each private vertex set V(H_i) \ V(H_{3-i}).
// Surviving edges all lie in E(H1) | E(H2).
inline Graph strip_private(const ColoredGraph& g, const VertexSet& h1, const VertexSet& h2) {
    int n = g.n();
    VertexSet p1 = h1 - h2, p2 = h2 - h1;
    Graph out(n);
    for (auto [u, v, cs] : g.edge_list()) {
        bool in1 = p1.contains(u) && p1.contains(v);
        bool in2 = p2.contains(u) && p2.contains(v);
        if (in1 && !cs.red) continue;
        if (in2 && !cs.blue) continue;
        out.add_edge(u, v);
    }
    return out;
}

// Host-component color preference, ties to red.
inline Color pick_color(const ColoredGraph& g, const VertexSet& h1, const VertexSet& h2, int u,
                        int v) {
    ColorSet cs = g.colors(u, v);
    if (cs.red && h1.contains(u) && h1.contains(v)) return Color::Red;
    if (cs.blue && h2.contains(u) && h2.contains(v)) return Color::Blue;
    throw std::logic_error("connected_matching: cycle edge escapes E(H1) | E(H2)");
}

}  // namespace detail

// Perfect matching inside E(H1) | E(H2) for components H1 of the red graph
// and H2 of the blue graph, under min total degree 3n/4. Hypothesis case (i):
// both components cover >= 3n/4 vertices and jointly cover V; case (ii): one
// color spans V and the other component is a largest one of its color. When
// the spanning color faces only small opposite components (<= n/2), the
// matching stays entirely in the spanning color.
inline Matching connected_matching(const ColoredGraph& g, const VertexSet& h1,
                                   const VertexSet& h2, int cap = 20) {
    int n = g.n();
    if (n % 2 != 0) throw precondition_error("connected_matching: n is odd");
    if (4 * g.min_total_degree() < 3 * n)
        throw precondition_error("connected_matching: minimum degree below 3n/4");
    if (h1.empty() || g.red().component_of(h1.min(), VertexSet::full(n)) != h1)
        throw precondition_error("connected_matching: H1 is not a red component");
    if (h2.empty() || g.blue().component_of(h2.min(), VertexSet::full(n)) != h2)
        throw precondition_error("connected_matching: H2 is not a blue component");

    auto largest = [&](const Graph& sub) {
        int best = 0;
        for (const VertexSet& c : sub.components(VertexSet::full(n)))
            best = std::max(best, int(c.count()));
        return best;
    };
    bool case_i = 4 * int(h1.count()) >= 3 * n && 4 * int(h2.count()) >= 3 * n &&
                  (h1 | h2) == VertexSet::full(n);
    bool span1 = int(h1.count()) == n && int(h2.count()) == largest(g.blue());
    bool span2 = int(h2.count()) == n && int(h1.count()) == largest(g.red());
    if (!case_i && !span1 && !span2)
        throw precondition_error("connected_matching: neither hypothesis case holds");

    auto alternate = [&](const std::vector<int>& cyc) {
        Matching m;
        for (size_t i = 0; i + 1 < cyc.size(); i += 2) {
            int u = cyc[i], v = cyc[i + 1];
            if (u > v) std::swap(u, v);
            m.edges.emplace_back(u, v);
            m.colors.push_back(detail::pick_color(g, h1, h2, u, v));
        }
        return m;
    };

    Graph gp = detail::strip_private(g, h1, h2);
    if (case_i || (span1 && 2 * int(h2.count()) > n) || (span2 && 2 * int(h1.count()) > n)) {
        if (case_i && 2 * gp.min_degree() < n)
            throw precondition_error("connected_matching: stripped graph drops below n/2 degree");
        ChvatalResult ham = chvatal_hamiltonian(gp, cap);
        if (!ham.condition_met)
            throw precondition_error(
                "connected_matching: stripped graph fails the cycle degree condition");
        return alternate(*ham.cycle);
    }

    // Spanning color vs. only small opposite components: cross-component
    // edges are forced into the spanning color, so Lemma-style multipartite
    // matching lands entirely there.
    bool red_spans = span1;
    const Graph& opposite = red_spans ? g.blue() : g.red();
    const Graph& spanning = red_spans ? g.red() : g.blue();
    PartitionedHost host;
    host.parts = opposite.components(VertexSet::full(n));
    host.g = Graph(n);
    for (int u = 0; u < n; ++u)
        spanning.nbrs(u).for_each([&](int v) {
            if (v <= u) return;
            for (const VertexSet& p : host.parts)
                if (p.contains(u) && p.contains(v)) return;
            host.g.add_edge(u, v);
        });
    Matching m = multipartite_perfect_matching(host).matching;
    for (auto& c : m.colors) c = red_spans ? Color::Red : Color::Blue;
    return m;
}

}  // namespace mono
