#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "mono/common.hpp"
#include "mono/graph.hpp"

namespace mono {

// A bipartition (x, y) of some domain together with its crossing-edge count
// and the density ratio e(x,y) / (|x||y|).
struct Cut {
    VertexSet x, y;
    long long crossing = 0;
    Frac ratio;
};

enum class CutMode { Exact, Heuristic };

struct CutSearch {
    CutMode mode = CutMode::Exact;
    bool conclusive = true;  // heuristic "no cut found" is not a proof
    std::optional<Cut> cut;
};

// Robustness of G[domain]: min degree at least eta * ambient_n and no
// alpha-sparse cut. eta and alpha are always fractions of ambient_n.
struct RobustCertificate {
    Frac eta, alpha;
    int ambient_n = 0;
    bool min_degree_ok = false;
    int worst_vertex = -1;
    int worst_degree = 0;
    CutSearch cut_search;
    bool robust = false;
    bool conclusive = true;
};

struct Bipartition {
    VertexSet s1, s2;
    long long inside1 = 0, inside2 = 0;
    int cross_min_deg1 = 0;  // min over s1 of deg(v, s2)
    int cross_min_deg2 = 0;
};

namespace detail {

inline Frac cut_ratio(long long crossing, long long sx, long long sy) {
    return Frac(crossing, sx * sy);
}

// Exhaustive minimum-ratio cut of g restricted to verts (m <= 24).
// Vertex verts[0] is pinned to the X side; ties broken by least X mask.
inline std::optional<Cut> exact_min_ratio_cut(const Graph& g,
                                              const std::vector<int>& verts) {
    int m = static_cast<int>(verts.size());
    std::vector<uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (j != i && g.has_edge(verts[i], verts[j])) adj[i] |= 1u << j;

    uint32_t full = (m == 32) ? ~0u : ((1u << m) - 1);
    long long best_cross = 0, best_den = 0;
    uint32_t best_mask = 0;
    bool have = false;
    uint32_t top = 1u << (m - 1);
    for (uint32_t s = 0; s + 1 < top; ++s) {
        uint32_t xm = (s << 1) | 1u;
        uint32_t ym = full & ~xm;
        long long cross = 0;
        for (uint32_t t = xm; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            cross += std::popcount(adj[i] & ym);
        }
        long long den =
            static_cast<long long>(std::popcount(xm)) * std::popcount(ym);
        if (!have || cross * best_den < best_cross * den ||
            (cross * best_den == best_cross * den && xm < best_mask)) {
            have = true;
            best_cross = cross;
            best_den = den;
            best_mask = xm;
        }
    }
    if (!have) return std::nullopt;
    int n = g.n();
    Cut c{VertexSet(n), VertexSet(n), best_cross, cut_ratio(best_cross, 1, 1)};
    for (int i = 0; i < m; ++i)
        (best_mask >> i & 1 ? c.x : c.y).add(verts[i]);
    c.ratio = cut_ratio(best_cross, c.x.count(), c.y.count());
    return c;
}

// Seeded descent on the cut ratio: random bipartition, then repeatedly apply
// the best single-vertex move that strictly lowers the ratio.
inline std::optional<Cut> heuristic_min_ratio_cut(const Graph& g,
                                                  const std::vector<int>& verts,
                                                  uint64_t seed, int restarts) {
    int m = static_cast<int>(verts.size());
    int n = g.n();
    Rng rng(seed);
    std::optional<Cut> best;
    auto better = [](const Cut& a, const Cut& b) {
        if (a.ratio != b.ratio) return a.ratio < b.ratio;
        return a.x.to_vector() < b.x.to_vector();
    };
    for (int r = 0; r < restarts; ++r) {
        Rng sub = rng.fork(r);
        VertexSet x(n), y(n);
        for (int v : verts) (sub.coin() ? x : y).add(v);
        if (x.empty()) { int v = y.min(); y.remove(v); x.add(v); }
        if (y.empty()) { int v = x.min(); x.remove(v); y.add(v); }

        long long cross = g.edges_between(x, y);
        while (true) {
            long long sx = x.count(), sy = y.count();
            bool moved = false;
            long long bc = cross;
            long long bsx = sx, bsy = sy;
            int bv = -1;
            for (int v : verts) {
                bool in_x = x.contains(v);
                if ((in_x ? sx : sy) < 2) continue;
                const VertexSet& own = in_x ? x : y;
                const VertexSet& oth = in_x ? y : x;
                long long nc = cross - g.deg_in(v, oth) + g.deg_in(v, own);
                long long nsx = in_x ? sx - 1 : sx + 1;
                long long nsy = sy + sx - nsx;
                if (cut_ratio(nc, nsx, nsy) < cut_ratio(bc, bsx, bsy)) {
                    bc = nc; bsx = nsx; bsy = nsy; bv = v; moved = true;
                }
            }
            if (!moved) break;
            if (x.contains(bv)) { x.remove(bv); y.add(bv); }
            else { y.remove(bv); x.add(bv); }
            cross = bc;
        }
        Cut c{x, y, cross, cut_ratio(cross, x.count(), y.count())};
        if (!best || better(c, *best)) best = c;
    }
    return best;
}

}  // namespace detail

inline std::optional<Cut> find_sparse_cut(const Graph& g, const VertexSet& dom,
                                          Frac alpha,
                                          CutMode mode = CutMode::Exact,
                                          uint64_t seed = 0) {
    long long m = dom.count();
    if (m < 2) throw precondition_error("find_sparse_cut: domain has fewer than 2 vertices");
    std::vector<int> verts = dom.to_vector();
    std::optional<Cut> best;
    if (mode == CutMode::Exact) {
        if (m > 24)
            throw capacity_error("find_sparse_cut: exact mode capped at 24 vertices");
        best = detail::exact_min_ratio_cut(g, verts);
    } else {
        best = detail::heuristic_min_ratio_cut(g, verts, seed, 20);
    }
    if (best && best->ratio < alpha) return best;
    return std::nullopt;
}

inline RobustCertificate robust_certificate(const Graph& g, const VertexSet& dom,
                                            Frac eta, Frac alpha, int ambient_n,
                                            CutMode mode = CutMode::Exact,
                                            uint64_t seed = 0) {
    if (!(Frac(0) < eta && eta <= Frac(1)) || !(Frac(0) < alpha && alpha <= Frac(1)))
        throw precondition_error("robust_certificate: eta and alpha must be in (0,1]");
    long long m = dom.count();
    if (m == 0) throw precondition_error("robust_certificate: empty domain");
    if (ambient_n < m)
        throw precondition_error("robust_certificate: ambient_n smaller than domain");

    RobustCertificate cert;
    cert.eta = eta;
    cert.alpha = alpha;
    cert.ambient_n = ambient_n;
    cert.cut_search.mode = mode;

    if (m == 1) {
        // single vertex: vacuously robust whenever the degree floor rounds to zero
        cert.worst_vertex = dom.min();
        cert.worst_degree = 0;
        cert.min_degree_ok = eta <= Frac(1, ambient_n);
        cert.cut_search.conclusive = true;
        cert.robust = cert.min_degree_ok;
        cert.conclusive = true;
        return cert;
    }

    int worst = -1, wdeg = 0;
    dom.for_each([&](int v) {
        int d = g.deg_in(v, dom);
        if (worst < 0 || d < wdeg) { worst = v; wdeg = d; }
    });
    cert.worst_vertex = worst;
    cert.worst_degree = wdeg;
    cert.min_degree_ok = Frac(wdeg) >= eta * Frac(ambient_n);

    cert.cut_search.cut = find_sparse_cut(g, dom, alpha, mode, seed);
    cert.cut_search.conclusive =
        mode == CutMode::Exact || cert.cut_search.cut.has_value();
    cert.robust = cert.min_degree_ok && !cert.cut_search.cut;
    cert.conclusive = cert.cut_search.conclusive || !cert.min_degree_ok;
    return cert;
}

namespace detail {

// Repeatedly move the vertex with the largest cross-minus-internal surplus to
// the other side. Crossing strictly decreases each move, so this terminates;
// moves that would empty a side are skipped.
inline void balance_cut(const Graph& g, VertexSet& x, VertexSet& y) {
    long long limit =
        (x.count() + y.count()) * (x.count() + y.count()) + 1;
    for (long long step = 0; step < limit; ++step) {
        int bv = -1;
        long long bs = 0;
        for (int pass = 0; pass < 2; ++pass) {
            VertexSet& own = pass == 0 ? x : y;
            VertexSet& oth = pass == 0 ? y : x;
            if (own.count() < 2) continue;
            own.for_each([&](int v) {
                long long s = static_cast<long long>(g.deg_in(v, oth)) -
                              g.deg_in(v, own);
                if (s > bs || (s == bs && s > 0 && (bv < 0 || v < bv))) {
                    bs = s;
                    bv = v;
                }
            });
        }
        if (bv < 0) return;
        if (x.contains(bv)) { x.remove(bv); y.add(bv); }
        else { y.remove(bv); x.add(bv); }
    }
    throw std::logic_error("balance_cut: failed to converge");
}

inline Bipartition measure_bipartition(const Graph& g, const VertexSet& s1,
                                       const VertexSet& s2) {
    Bipartition b;
    b.s1 = s1;
    b.s2 = s2;
    b.inside1 = g.edges_within(s1);
    b.inside2 = g.edges_within(s2);
    int m1 = -1, m2 = -1;
    s1.for_each([&](int v) {
        int d = g.deg_in(v, s2);
        if (m1 < 0 || d < m1) m1 = d;
    });
    s2.for_each([&](int v) {
        int d = g.deg_in(v, s1);
        if (m2 < 0 || d < m2) m2 = d;
    });
    b.cross_min_deg1 = std::max(m1, 0);
    b.cross_min_deg2 = std::max(m2, 0);
    return b;
}

}  // namespace detail

inline Bipartition clean_sparse_cut(const Graph& g, Frac eta, Frac alpha,
                                    const Cut& cut) {
    VertexSet dom = cut.x | cut.y;
    long long n = dom.count();
    if (!(cut.ratio < alpha))
        throw precondition_error("clean_sparse_cut: supplied cut is not alpha-sparse");
    if (Frac(g.min_degree_in(dom)) < eta * Frac(n))
        throw precondition_error("clean_sparse_cut: min degree below eta*n");
    VertexSet x = cut.x, y = cut.y;
    detail::balance_cut(g, x, y);
    return detail::measure_bipartition(g, x, y);
}

inline std::vector<VertexSet> robust_partition(const Graph& g, Frac eta,
                                               Frac alpha,
                                               CutMode mode = CutMode::Exact,
                                               uint64_t seed = 0,
                                               std::optional<VertexSet> domain = {}) {
    VertexSet dom = domain ? *domain : VertexSet::full(g.n());
    long long n = dom.count();
    if (n == 0) return {};
    if (Frac(g.min_degree_in(dom)) < eta * Frac(n))
        throw precondition_error("robust_partition: min degree below eta*n");

    std::vector<VertexSet> parts;
    std::vector<VertexSet> work{dom};
    while (!work.empty()) {
        VertexSet cur = work.back();
        work.pop_back();
        if (cur.count() < 2) { parts.push_back(cur); continue; }
        auto cut = find_sparse_cut(g, cur, alpha, mode, seed);
        if (!cut) { parts.push_back(cur); continue; }
        VertexSet x = cut->x, y = cut->y;
        detail::balance_cut(g, x, y);
        work.push_back(y);
        work.push_back(x);
    }
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
    return parts;
}

inline VertexSet maximal_extension(const Graph& g, const VertexSet& h0,
                                   Frac eta_prime) {
    if (h0.empty()) throw precondition_error("maximal_extension: empty seed set");
    VertexSet h = h0;
    long long n = g.n();
    while (true) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!h.contains(v) && Frac(g.deg_in(v, h)) >= eta_prime * Frac(n))
                pick = v;
        if (pick < 0) return h;
        h.add(pick);
    }
}

namespace detail {

// Split t_all to maximize crossing edges of (base1 | t1, base2 | t2).
// Exhaustive for |t_all| <= 20 (ties: least t1 mask), greedy plus local moves
// beyond that.
inline void resplit_for_crossing(const Graph& g, const VertexSet& base1,
                                 const VertexSet& base2, const VertexSet& t_all,
                                 VertexSet& t1_out, VertexSet& t2_out) {
    std::vector<int> tv = t_all.to_vector();
    int t = static_cast<int>(tv.size());
    int n = g.n();
    t1_out = VertexSet(n);
    t2_out = VertexSet(n);
    if (t == 0) return;
    if (t <= 20) {
        long long best = -1;
        uint32_t best_mask = 0;
        for (uint32_t m = 0; m < (1u << t); ++m) {
            VertexSet s1 = base1, s2 = base2;
            for (int i = 0; i < t; ++i) (m >> i & 1 ? s1 : s2).add(tv[i]);
            long long c = g.edges_between(s1, s2);
            if (c > best) { best = c; best_mask = m; }
        }
        for (int i = 0; i < t; ++i)
            (best_mask >> i & 1 ? t1_out : t2_out).add(tv[i]);
        return;
    }
    VertexSet s1 = base1, s2 = base2;
    for (int v : tv) {
        if (g.deg_in(v, s2) >= g.deg_in(v, s1)) { s1.add(v); t1_out.add(v); }
        else { s2.add(v); t2_out.add(v); }
    }
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v : tv) {
            bool in1 = t1_out.contains(v);
            VertexSet& own = in1 ? s1 : s2;
            VertexSet& oth = in1 ? s2 : s1;
            if (g.deg_in(v, own) > g.deg_in(v, oth)) {
                own.remove(v);
                oth.add(v);
                if (in1) { t1_out.remove(v); t2_out.add(v); }
                else { t2_out.remove(v); t1_out.add(v); }
                moved = true;
            }
        }
    }
}

}  // namespace detail

inline std::optional<Bipartition> near_bipartition(const Graph& g, Frac eta,
                                                   Frac beta,
                                                   std::optional<VertexSet> domain = {}) {
    VertexSet dom = domain ? *domain : VertexSet::full(g.n());
    long long m = dom.count();
    if (m < 2) return std::nullopt;
    Frac limit = beta * beta * Frac(m * m);

    VertexSet s1(g.n()), s2(g.n());
    std::vector<int> verts = dom.to_vector();
    if (m <= 24) {
        // minimize the larger side's internal edge count; ties by least s1 mask
        int k = static_cast<int>(verts.size());
        long long best = -1;
        uint32_t best_mask = 0;
        for (uint32_t s = 0; s < (1u << (k - 1)); ++s) {
            uint32_t xm = (s << 1) | 1u;
            VertexSet a(g.n()), b(g.n());
            for (int i = 0; i < k; ++i) (xm >> i & 1 ? a : b).add(verts[i]);
            long long mx = std::max(g.edges_within(a), g.edges_within(b));
            if (best < 0 || mx < best) { best = mx; best_mask = xm; }
        }
        for (int i = 0; i < k; ++i)
            (best_mask >> i & 1 ? s1 : s2).add(verts[i]);
    } else {
        // greedy max-cut then single-vertex improvement: maximizing crossing
        // minimizes the total internal edge count
        for (int v : verts)
            (g.deg_in(v, s2) >= g.deg_in(v, s1) ? s1 : s2).add(v);
        bool moved = true;
        while (moved) {
            moved = false;
            for (int v : verts) {
                VertexSet& own = s1.contains(v) ? s1 : s2;
                VertexSet& oth = s1.contains(v) ? s2 : s1;
                if (own.count() < 2) continue;
                if (g.deg_in(v, own) > g.deg_in(v, oth)) {
                    own.remove(v);
                    oth.add(v);
                    moved = true;
                }
            }
        }
    }
    if (!(Frac(g.edges_within(s1)) < limit) || !(Frac(g.edges_within(s2)) < limit))
        return std::nullopt;

    // cleanup: pull out low-cross-degree vertices and re-split them to
    // maximize crossing edges
    Frac floor = Frac(3) * eta * Frac(m) / Frac(4);
    VertexSet t_all(g.n());
    VertexSet base1 = s1, base2 = s2;
    s1.for_each([&](int v) {
        if (Frac(g.deg_in(v, s2)) < floor) { t_all.add(v); base1.remove(v); }
    });
    s2.for_each([&](int v) {
        if (Frac(g.deg_in(v, s1)) < floor) { t_all.add(v); base2.remove(v); }
    });
    VertexSet t1(g.n()), t2(g.n());
    detail::resplit_for_crossing(g, base1, base2, t_all, t1, t2);
    VertexSet f1 = base1 | t1, f2 = base2 | t2;
    if (f1.empty() || f2.empty()) return detail::measure_bipartition(g, s1, s2);
    return detail::measure_bipartition(g, f1, f2);
}

inline VertexSet extreme_vertices(const ColoredGraph& g, double d, Color i) {
    const Graph& other_color = g.sub(other(i));
    VertexSet z(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (other_color.deg(v) < d) z.add(v);
    return z;
}

}  // namespace mono
