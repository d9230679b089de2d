#pragma once

// Absorbing machinery for one-color and bipartite hosts: odd-cycle and
// antipodal-cycle gadget counting, seeded absorber-family selection,
// absorbing-path assembly, and leftover-vertex absorption.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "expansion.hpp"
#include "graph.hpp"

namespace mono {

enum class AbsorberKind { Vertex, Pair };

// Vertex kind: (v1..v_2i) such that x v1 .. v_2i x closes a (2i+1)-cycle for
// every absorbed x. Pair kind: (a1,b1,u1,v1) such that x a1 b1 y v1 u1 x
// closes a 6-cycle for every absorbed cross pair (x,y).
struct AbsorberTuple {
    AbsorberKind kind = AbsorberKind::Vertex;
    std::vector<int> vertices;
    int arity() const { return int(vertices.size()); }
    bool operator==(const AbsorberTuple&) const = default;
};

struct AbsorberFamily {
    std::vector<AbsorberTuple> tuples;  // selection order, pairwise vertex-disjoint
    std::map<int, int> per_arity;
    int min_coverage = 0;  // worst per-target coverage across the universe
};

// Targets are (v,-1) for vertex absorption or cross pairs (x,y). The
// absorption relation itself is evaluated against the host graph, so the
// universe stays light even when the tuple pool is large.
struct AbsorberUniverse {
    int n = 0;  // ambient vertex count, drives the selection rates
    std::vector<std::pair<int, int>> targets;
    std::vector<AbsorberTuple> tuples;
};

struct RegistryEntry {
    AbsorberTuple tuple;
    int seg_begin = 0, seg_end = 0;            // inclusive path positions
    std::vector<std::vector<int>> connectors;  // endpoint-inclusive in-gadget joins
};

// registry entries sit in path order; reroutes stay inside their own segment
struct AbsorbingPath {
    std::vector<int> path;
    std::vector<RegistryEntry> registry;
    std::optional<std::pair<VertexSet, VertexSet>> sides;      // host bipartition (X, Y)
    std::optional<std::pair<VertexSet, VertexSet>> side_sets;  // (S1, T1) reservoirs
};

struct selection_error : std::runtime_error {
    std::string constraint;
    explicit selection_error(const std::string& c)
        : std::runtime_error("absorber selection failed: " + c), constraint(c) {}
};

struct assembly_error : std::runtime_error {
    int gadget_index;
    assembly_error(const std::string& m, int g) : std::runtime_error(m), gadget_index(g) {}
};

struct absorption_error : std::runtime_error {
    std::vector<int> stranded;
    absorption_error(const std::string& m, std::vector<int> s)
        : std::runtime_error(m), stranded(std::move(s)) {}
};

// (2i+1)-cycles through v, each counted once up to rotation and reflection.
inline std::map<int, long long> count_vertex_absorbers(const Graph& g, int v, int max_i = 2) {
    if (max_i < 1 || max_i > 2)
        throw capacity_error("count_vertex_absorbers: max_i must be 1 or 2");
    if (v < 0 || v >= g.n())
        throw precondition_error("count_vertex_absorbers: vertex out of range");
    std::map<int, long long> out;
    VertexSet nv = g.nbrs(v);
    long long tri = 0;
    nv.for_each([&](int a) { tri += (g.nbrs(a) & nv).count(); });
    out[1] = tri / 2;  // ordered (a,b) walks count each triangle twice
    if (max_i < 2) return out;
    long long c5 = 0;
    for (int a : nv.to_vector()) {
        for (int b : g.nbrs(a).to_vector()) {
            if (b == v) continue;
            for (int c : g.nbrs(b).to_vector()) {
                if (c == v || c == a) continue;
                VertexSet ds = g.nbrs(c) & nv;
                ds.remove(a);
                ds.remove(b);
                c5 += ds.count();
            }
        }
    }
    out[2] = c5 / 2;
    return out;
}

namespace detail {

// x,y-arcs with exactly `internals` internal vertices, grouped by the bitmask
// of those internals; disjoint arc pairs later pair up into antipodal cycles.
inline std::map<uint64_t, long long> arc_masks(const Graph& h, int x, int y, int internals) {
    std::map<uint64_t, long long> out;
    VertexSet used(h.n());
    used.add(x);
    used.add(y);
    uint64_t mask = 0;
    auto dfs = [&](auto&& self, int cur, int depth) -> void {
        if (depth == internals) {
            if (h.has_edge(cur, y)) ++out[mask];
            return;
        }
        for (int w : (h.nbrs(cur) - used).to_vector()) {
            used.add(w);
            mask |= uint64_t(1) << w;
            self(self, w, depth + 1);
            mask &= ~(uint64_t(1) << w);
            used.remove(w);
        }
    };
    dfs(dfs, x, 0);
    return out;
}

inline long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::string target_name(std::pair<int, int> t) {
    if (t.second < 0) return std::to_string(t.first);
    return "(" + std::to_string(t.first) + "," + std::to_string(t.second) + ")";
}

// Closing conditions only; tuple validity is the enumerator's burden.
inline bool tuple_absorbs(const Graph& g, const AbsorberTuple& t, std::pair<int, int> target) {
    if (t.kind == AbsorberKind::Vertex) {
        if (target.second >= 0) return false;
        int x = target.first;
        for (int v : t.vertices)
            if (v == x) return false;
        return g.has_edge(x, t.vertices.front()) && g.has_edge(x, t.vertices.back());
    }
    if (t.arity() != 4)
        throw capacity_error("pair gadget arity " + std::to_string(t.arity()) + " unsupported");
    auto [x, y] = target;
    if (y < 0) return false;
    for (int v : t.vertices)
        if (v == x || v == y) return false;
    return g.has_edge(x, t.vertices[0]) && g.has_edge(x, t.vertices[2]) &&
           g.has_edge(y, t.vertices[1]) && g.has_edge(y, t.vertices[3]);
}

}  // namespace detail

// (4j+2)-cycles through x and y with the pair antipodal on the cycle, each
// counted once up to rotation and reflection. Only cross edges participate.
inline std::map<int, long long> count_pair_absorbers(const Graph& g, const VertexSet& xs,
                                                     const VertexSet& ys, int x, int y,
                                                     int max_j = 1) {
    if (max_j < 1 || max_j > 2)
        throw capacity_error("count_pair_absorbers: max_j must be 1 or 2");
    if (g.n() > 64) throw capacity_error("count_pair_absorbers: capped at 64 vertices");
    if (xs.intersects(ys)) throw precondition_error("count_pair_absorbers: sides overlap");
    if (ys.contains(x) && xs.contains(y)) std::swap(x, y);
    if (!xs.contains(x) || !ys.contains(y))
        throw precondition_error("count_pair_absorbers: pair must straddle the sides");
    if (max_j == 2 && g.n() > 16)
        throw capacity_error("count_pair_absorbers: j=2 capped at 16 vertices");
    Graph h = cross_subgraph(g, xs, ys);
    std::map<int, long long> out;
    for (int j = 1; j <= max_j; ++j) {
        auto arcs = detail::arc_masks(h, x, y, 2 * j);
        long long pairs = 0;
        for (auto& [m1, c1] : arcs)
            for (auto& [m2, c2] : arcs)
                if (!(m1 & m2)) pairs += c1 * c2;
        out[j] = pairs / 2;  // swapping the two arcs reflects the cycle
    }
    return out;
}

// Targets: every vertex. Tuples: arity-2 bodies (edges with a common
// neighbor) and, when max_i = 2, arity-4 bodies (paths whose endpoints share
// an outside neighbor); lexicographic, stride-capped per arity so a capped
// pool stays spread across the candidate space.
inline AbsorberUniverse vertex_absorber_universe(const Graph& g, int max_i = 1,
                                                 long long cap_per_arity = 20000) {
    if (max_i < 1 || max_i > 2)
        throw capacity_error("vertex_absorber_universe: max_i must be 1 or 2");
    if (cap_per_arity < 1) throw precondition_error("vertex_absorber_universe: cap must be positive");
    AbsorberUniverse u;
    u.n = g.n();
    for (int v = 0; v < g.n(); ++v) u.targets.push_back({v, -1});
    long long kept = 0;
    for (int a = 0; a < g.n() && kept < cap_per_arity; ++a) {
        for (int b : g.nbrs(a).to_vector()) {
            if (b <= a) continue;
            if ((g.nbrs(a) & g.nbrs(b)).empty()) continue;
            u.tuples.push_back({AbsorberKind::Vertex, {a, b}});
            if (++kept >= cap_per_arity) break;
        }
    }
    if (max_i < 2) return u;
    auto visit4 = [&](auto&& fn) {
        for (int v1 = 0; v1 < g.n(); ++v1)
            for (int v2 : g.nbrs(v1).to_vector())
                for (int v3 : g.nbrs(v2).to_vector()) {
                    if (v3 == v1) continue;
                    for (int v4 : g.nbrs(v3).to_vector()) {
                        if (v4 <= v1 || v4 == v2) continue;  // v1 < v4 kills reflection
                        VertexSet w = g.nbrs(v1) & g.nbrs(v4);
                        w.remove(v2);
                        w.remove(v3);
                        if (w.empty()) continue;
                        fn(v1, v2, v3, v4);
                    }
                }
    };
    long long total = 0;
    visit4([&](int, int, int, int) { ++total; });
    if (total == 0) return u;
    long long stride = std::max<long long>(1, (total + cap_per_arity - 1) / cap_per_arity);
    long long idx = 0;
    visit4([&](int v1, int v2, int v3, int v4) {
        if (idx++ % stride == 0)
            u.tuples.push_back({AbsorberKind::Vertex, {v1, v2, v3, v4}});
    });
    return u;
}

// Targets: every cross pair. Tuples: (a1,b1,u1,v1) with a1,u1 on the y side,
// b1,v1 on the x side, both halves cross edges, canonical a1 < u1.
inline AbsorberUniverse pair_absorber_universe(const Graph& g, const VertexSet& xs,
                                               const VertexSet& ys, long long cap = 200000) {
    if (xs.intersects(ys)) throw precondition_error("pair_absorber_universe: sides overlap");
    if (cap < 1) throw precondition_error("pair_absorber_universe: cap must be positive");
    Graph h = cross_subgraph(g, xs, ys);
    AbsorberUniverse u;
    u.n = g.n();
    for (int x : xs.to_vector())
        for (int y : ys.to_vector()) u.targets.push_back({x, y});
    auto visit = [&](auto&& fn) {
        for (int a1 : ys.to_vector())
            for (int b1 : h.nbrs(a1).to_vector())
                for (int u1 : ys.to_vector()) {
                    if (u1 <= a1) continue;  // reflection canon
                    VertexSet xc = h.nbrs(a1) & h.nbrs(u1);
                    xc.remove(b1);
                    if (xc.empty()) continue;
                    for (int v1 : h.nbrs(u1).to_vector()) {
                        if (v1 == b1) continue;
                        VertexSet xc2 = xc;
                        xc2.remove(v1);
                        if (xc2.empty()) continue;
                        VertexSet yc = h.nbrs(b1) & h.nbrs(v1);
                        yc.remove(a1);
                        yc.remove(u1);
                        if (yc.empty()) continue;
                        fn(a1, b1, u1, v1);
                    }
                }
    };
    long long total = 0;
    visit([&](int, int, int, int) { ++total; });
    if (total == 0) return u;
    long long stride = std::max<long long>(1, (total + cap - 1) / cap);
    long long idx = 0;
    visit([&](int a1, int b1, int u1, int v1) {
        if (idx++ % stride == 0)
            u.tuples.push_back({AbsorberKind::Pair, {a1, b1, u1, v1}});
    });
    return u;
}

struct SelectionConfig {
    int coverage_floor = 1;
    int max_retries = 20;
    // Multiplies the sigma-derived inclusion rates. Sigma keeps its floor
    // semantics; this dial keeps the rates usable at desk scale.
    double rate_scale = 1.0;
    std::optional<long long> per_arity_cap;
};

// Seeded selection: include each tuple independently at its arity rate, keep
// the earlier of every intersecting pair, prune members absorbing nothing,
// then validate caps and per-target coverage; fresh sub-seed per retry.
inline AbsorberFamily select_absorber_family(const Graph& g, const AbsorberUniverse& u,
                                             const std::map<int, Frac>& sigma, uint64_t seed,
                                             const SelectionConfig& cfg = {}) {
    if (u.n <= 0 || u.n != g.n())
        throw precondition_error("select_absorber_family: universe/graph size mismatch");
    std::map<int, long long> arity_count;
    for (auto& t : u.tuples) ++arity_count[t.arity()];
    int ell = 0;
    for (auto& [a, c] : arity_count) {
        ell = std::max(ell, a);
        if (!sigma.count(a))
            throw precondition_error("select_absorber_family: sigma missing for arity " +
                                     std::to_string(a));
    }
    // Per-target floors: max(1, ceil(sigma_a n^a)) absorbers at some arity.
    for (auto& tgt : u.targets) {
        bool ok = false;
        std::map<int, long long> cnt;
        for (auto& t : u.tuples) {
            if (!detail::tuple_absorbs(g, t, tgt)) continue;
            long long c = ++cnt[t.arity()];
            Frac s = sigma.at(t.arity());
            long long floor_a =
                std::max<long long>(1, (s.num * detail::ipow(u.n, t.arity()) + s.den - 1) / s.den);
            if (c >= floor_a) {
                ok = true;
                break;
            }
        }
        if (!ok)
            throw precondition_error("select_absorber_family: target " +
                                     detail::target_name(tgt) +
                                     " is short of absorbers at every arity");
    }
    Frac smin;
    bool first = true;
    for (auto& [a, c] : arity_count) {
        if (first || sigma.at(a) < smin) smin = sigma.at(a);
        first = false;
    }
    std::map<int, double> rho;
    for (auto& [a, c] : arity_count) {
        double base = (double(smin.num) / double(smin.den)) /
                      (8.0 * double(ell) * double(ell) * double(detail::ipow(u.n, a - 1)));
        rho[a] = std::min(1.0, cfg.rate_scale * base);
    }
    Rng base(seed);
    std::string last_fail = "no attempts were made";
    for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
        Rng r = base.fork(uint64_t(attempt));
        std::vector<int> included;
        for (size_t k = 0; k < u.tuples.size(); ++k)
            if (r.unit() < rho[u.tuples[k].arity()]) included.push_back(int(k));
        std::vector<int> live;  // disjoint by keeping the earlier of each clash
        VertexSet used(u.n);
        for (int k : included) {
            bool clash = false;
            for (int v : u.tuples[k].vertices)
                if (used.contains(v)) clash = true;
            if (clash) continue;
            for (int v : u.tuples[k].vertices) used.add(v);
            live.push_back(k);
        }
        std::vector<int> fam_idx;
        for (int k : live) {
            bool any = false;
            for (auto& tgt : u.targets)
                if (detail::tuple_absorbs(g, u.tuples[k], tgt)) {
                    any = true;
                    break;
                }
            if (any) fam_idx.push_back(k);
        }
        std::string fail;
        if (cfg.per_arity_cap) {
            std::map<int, long long> cnt;
            for (int k : fam_idx) ++cnt[u.tuples[k].arity()];
            for (auto& [a, c] : cnt)
                if (c > *cfg.per_arity_cap) {
                    fail = "arity " + std::to_string(a) + " count " + std::to_string(c) +
                           " exceeds cap " + std::to_string(*cfg.per_arity_cap);
                    break;
                }
        }
        int min_cov = u.targets.empty() ? 0 : INT32_MAX;
        if (fail.empty()) {
            for (auto& tgt : u.targets) {
                int c = 0;
                for (int k : fam_idx)
                    if (detail::tuple_absorbs(g, u.tuples[k], tgt)) ++c;
                min_cov = std::min(min_cov, c);
                if (c < cfg.coverage_floor) {
                    fail = "coverage " + std::to_string(c) + " < floor " +
                           std::to_string(cfg.coverage_floor) + " for target " +
                           detail::target_name(tgt);
                    break;
                }
            }
        }
        if (fail.empty()) {
            AbsorberFamily fam;
            for (int k : fam_idx) {
                fam.tuples.push_back(u.tuples[k]);
                ++fam.per_arity[u.tuples[k].arity()];
            }
            fam.min_coverage = min_cov == INT32_MAX ? 0 : min_cov;
            return fam;
        }
        last_fail = fail;
    }
    throw selection_error(last_fail);
}

struct BuildParams {
    int ell = 1;        // vertex gadget sizes 2..2*ell (ell <= 2); pairs fix j = 1
    int gadgets = 5;    // family-size target; coverage may extend past it
    int coverage_floor = 1;
    Frac connector_alpha = Frac(0);  // > 0 demands a connecting certificate up front
    int connector_internals_max = 3;
    int assembly_retries = 8;
    long long universe_cap = 20000;  // per-arity enumeration cap (pairs: 10x)
    int reserve = 2;                 // bipartite reservoir size per side
};

namespace detail {

// Segment layouts: arity-2 vertex gadget [v1,v2]; arity-4 vertex gadget
// [v2,v1,C(v1,v3),v3,v4]; pair gadget [a1,b1,C(b1,u1),u1,v1]. Consecutive
// gadgets join tail-to-head through the shortest connector that dodges every
// used or reserved vertex.
inline AbsorbingPath assemble_gadgets(const Graph& g, const std::vector<AbsorberTuple>& fam,
                                      const BuildParams& p) {
    AbsorbingPath ap;
    VertexSet avoid_all(g.n());
    for (auto& t : fam)
        for (int v : t.vertices) avoid_all.add(v);
    VertexSet used(g.n());
    auto connector = [&](int from, int to, int gi) {
        if (g.has_edge(from, to)) return std::vector<int>{from, to};
        for (int i = 1; i <= p.connector_internals_max; ++i) {
            auto lc = least_connector(g, from, to, i, used | avoid_all);
            if (lc) return *lc;
        }
        throw assembly_error("gadget " + std::to_string(gi) + ": no connector " +
                                 std::to_string(from) + " -> " + std::to_string(to),
                             gi);
    };
    auto push = [&](int v) {
        ap.path.push_back(v);
        used.add(v);
    };
    for (size_t s = 0; s < fam.size(); ++s) {
        const AbsorberTuple& t = fam[s];
        const std::vector<int>& vs = t.vertices;
        bool v4 = t.kind == AbsorberKind::Vertex && t.arity() == 4;
        bool v2 = t.kind == AbsorberKind::Vertex && t.arity() == 2;
        bool p4 = t.kind == AbsorberKind::Pair && t.arity() == 4;
        if (!v2 && !v4 && !p4)
            throw assembly_error("gadget " + std::to_string(s) + ": arity " +
                                     std::to_string(t.arity()) + " unsupported",
                                 int(s));
        int head = v4 ? vs[1] : vs[0];
        if (s > 0) {
            auto join = connector(ap.path.back(), head, int(s));
            for (size_t q = 1; q + 1 < join.size(); ++q) push(join[q]);
        }
        RegistryEntry e;
        e.tuple = t;
        e.seg_begin = int(ap.path.size());
        if (v2) {
            push(vs[0]);
            push(vs[1]);
        } else {
            push(v4 ? vs[1] : vs[0]);
            push(v4 ? vs[0] : vs[1]);
            auto c = connector(v4 ? vs[0] : vs[1], vs[2], int(s));
            for (size_t q = 1; q + 1 < c.size(); ++q) push(c[q]);
            push(vs[2]);
            push(vs[3]);
            e.connectors.push_back(std::move(c));
        }
        e.seg_end = int(ap.path.size()) - 1;
        ap.registry.push_back(std::move(e));
    }
    return ap;
}

inline AbsorbingPath build_on(const Graph& host, AbsorberUniverse&& u, const BuildParams& p,
                              uint64_t seed) {
    int n = host.n();
    if (p.connector_alpha > Frac(0)) {
        int k = std::min(4, std::max(1, p.connector_internals_max));
        if (!connecting_certificate(host, k, p.connector_alpha, n).all_pass)
            throw precondition_error("build_absorbing_path: host fails the connecting certificate");
    }
    std::map<int, Frac> sigma;
    std::map<int, long long> cnt;
    int ell = 0;
    for (auto& t : u.tuples) ++cnt[t.arity()];
    for (auto& [a, c] : cnt) {
        sigma[a] = Frac(1, detail::ipow(n, a));  // per-target floor collapses to one tuple
        ell = std::max(ell, a);
    }
    Frac smin = sigma.empty() ? Frac(1) : sigma.rbegin()->second;
    double denom = 0;
    for (auto& [a, c] : cnt)
        denom += double(c) * (double(smin.num) / double(smin.den)) /
                 (8.0 * double(ell) * double(ell) * double(detail::ipow(n, a - 1)));
    SelectionConfig cfg;
    cfg.coverage_floor = p.coverage_floor;
    // Aim the expected pre-dedup draw a little above the gadget budget. Wider
    // tuples lose more draws to the disjointness pass, so scale with arity.
    cfg.rate_scale = denom > 0 ? (3.0 * p.gadgets + 2.0) * std::max(1.0, ell / 2.0) / denom : 1.0;
    // Small hosts fit few disjoint wide tuples, so covering every target
    // usually takes many independent family draws.
    cfg.max_retries = 50;
    std::exception_ptr last;
    for (int at = 0; at < std::max(1, p.assembly_retries); ++at) {
        try {
            AbsorberFamily fam = select_absorber_family(
                host, u, sigma, seed + 0x9e3779b97f4a7c15ull * uint64_t(at), cfg);
            // Coverage was validated on the whole family; the path itself only has
            // room for the gadget budget, so keep the selection-order prefix.
            std::vector<AbsorberTuple> kept(
                fam.tuples.begin(),
                fam.tuples.begin() + std::min<size_t>(fam.tuples.size(), size_t(p.gadgets)));
            return assemble_gadgets(host, kept, p);
        } catch (const assembly_error&) {
            last = std::current_exception();
        } catch (const selection_error&) {
            last = std::current_exception();
        }
    }
    std::rethrow_exception(last);
}

}  // namespace detail

inline AbsorbingPath build_absorbing_path(const Graph& g, const BuildParams& p, uint64_t seed) {
    if (p.ell < 1 || p.ell > 2)
        throw capacity_error("build_absorbing_path: ell must be 1 or 2");
    if (p.gadgets <= 0) return {};
    return detail::build_on(g, vertex_absorber_universe(g, p.ell, p.universe_cap), p, seed);
}

inline AbsorbingPath build_absorbing_path_bipartite(const Graph& g, const VertexSet& xs,
                                                    const VertexSet& ys, const BuildParams& p,
                                                    uint64_t seed) {
    if (xs.intersects(ys))
        throw precondition_error("build_absorbing_path_bipartite: sides overlap");
    if (p.ell != 1)
        throw capacity_error("build_absorbing_path_bipartite: pair gadgets support j = 1 only");
    Graph h = cross_subgraph(g, xs, ys);
    AbsorbingPath ap;
    if (p.gadgets > 0)
        ap = detail::build_on(h, pair_absorber_universe(g, xs, ys, p.universe_cap * 10), p, seed);
    ap.sides = {{xs, ys}};
    VertexSet onpath(g.n());
    for (int v : ap.path) onpath.add(v);
    VertexSet s1(g.n()), t1(g.n());
    int want = std::max(0, p.reserve);
    for (int v : (xs - onpath).to_vector()) {
        if (int(s1.count()) >= want) break;
        s1.add(v);
    }
    for (int v : (ys - onpath).to_vector()) {
        if (int(t1.count()) >= want) break;
        t1.add(v);
    }
    ap.side_sets = {{s1, t1}};
    return ap;
}

// Greedy absorption: lowest leftover vertex (or balanced cross pair) takes
// the lowest unused gadget whose closing edges exist, then each matched
// segment is rerouted in place. Endpoints of the path never move.
inline std::vector<int> absorb(const Graph& g, const AbsorbingPath& ap, const VertexSet& w) {
    for (auto& e : ap.registry)
        if (e.tuple.arity() > 4)
            throw capacity_error("absorb: gadget arity " + std::to_string(e.tuple.arity()) +
                                 " unsupported");
    if (w.empty()) return ap.path;
    VertexSet onpath(g.n());
    for (int v : ap.path) onpath.add(v);
    if (w.intersects(onpath)) throw precondition_error("absorb: W meets the path");
    std::vector<std::vector<int>> payload(ap.registry.size());
    std::vector<char> taken(ap.registry.size(), 0);
    std::vector<int> stranded;
    auto match = [&](std::pair<int, int> tgt, AbsorberKind kind) {
        for (size_t i = 0; i < ap.registry.size(); ++i) {
            if (taken[i] || ap.registry[i].tuple.kind != kind) continue;
            if (detail::tuple_absorbs(g, ap.registry[i].tuple, tgt)) return int(i);
        }
        return -1;
    };
    if (!ap.sides) {
        for (int x : w.to_vector()) {
            int pick = match({x, -1}, AbsorberKind::Vertex);
            if (pick < 0) {
                stranded.push_back(x);
            } else {
                taken[pick] = 1;
                payload[pick] = {x};
            }
        }
    } else {
        auto& [xs, ys] = *ap.sides;
        std::vector<int> wx = (w & xs).to_vector(), wy = (w & ys).to_vector();
        if (int(wx.size() + wy.size()) != w.count())
            throw precondition_error("absorb: W leaves the bipartition");
        if (wx.size() != wy.size())
            throw precondition_error("absorb: W must balance across the sides");
        for (size_t q = 0; q < wx.size(); ++q) {
            int pick = match({wx[q], wy[q]}, AbsorberKind::Pair);
            if (pick < 0) {
                stranded.push_back(wx[q]);
                stranded.push_back(wy[q]);
            } else {
                taken[pick] = 1;
                payload[pick] = {wx[q], wy[q]};
            }
        }
    }
    if (!stranded.empty()) {
        std::string msg = "absorb: no unused gadget for";
        for (int v : stranded) msg += " " + std::to_string(v);
        throw absorption_error(msg, stranded);
    }
    std::vector<int> out;
    size_t pos = 0;
    for (size_t i = 0; i < ap.registry.size(); ++i) {
        const RegistryEntry& e = ap.registry[i];
        while (pos < size_t(e.seg_begin)) out.push_back(ap.path[pos++]);
        if (payload[i].empty()) {
            while (pos <= size_t(e.seg_end)) out.push_back(ap.path[pos++]);
            continue;
        }
        const std::vector<int>& vs = e.tuple.vertices;
        if (e.tuple.kind == AbsorberKind::Vertex && e.tuple.arity() == 2) {
            out.push_back(vs[0]);
            out.push_back(payload[i][0]);
            out.push_back(vs[1]);
        } else if (e.tuple.kind == AbsorberKind::Vertex) {
            // [v2] rev C(v1,v3) [x v4]
            out.push_back(vs[1]);
            const auto& c = e.connectors.at(0);
            for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(*it);
            out.push_back(payload[i][0]);
            out.push_back(vs[3]);
        } else {
            // [a1 x] rev C(b1,u1) [y v1]
            out.push_back(vs[0]);
            out.push_back(payload[i][0]);
            const auto& c = e.connectors.at(0);
            for (auto it = c.rbegin(); it != c.rend(); ++it) out.push_back(*it);
            out.push_back(payload[i][1]);
            out.push_back(vs[3]);
        }
        pos = size_t(e.seg_end) + 1;
    }
    while (pos < ap.path.size()) out.push_back(ap.path[pos++]);
    return out;
}

}  // namespace mono
