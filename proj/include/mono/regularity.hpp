#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mono/common.hpp"
#include "mono/graph.hpp"

namespace mono {

// Exact side cap: the check enumerates every subset of A, so 14 keeps the
// worst case at 2^14 masks times a sort over |B|.
inline constexpr int kRegularitySideCap = 14;
inline constexpr int kRegularitySamples = 4000;

// Equal-size clusters plus an exceptional set. `origin`, when nonempty, tags
// cluster i with the index of the initial part it refines.
struct ClusterPartition {
    VertexSet v0;
    std::vector<VertexSet> clusters;
    std::vector<int> origin;
};

inline void validate_partition(int n, const ClusterPartition& p) {
    if (p.clusters.empty()) throw precondition_error("cluster partition: no clusters");
    int size = p.clusters.front().count();
    if (size == 0) throw precondition_error("cluster partition: empty cluster");
    VertexSet covered = p.v0;
    for (size_t i = 0; i < p.clusters.size(); ++i) {
        const VertexSet& c = p.clusters[i];
        if (c.count() != size)
            throw precondition_error("cluster partition: cluster " + std::to_string(i) +
                                     " breaks the equal-size rule");
        if (c.intersects(covered))
            throw precondition_error("cluster partition: cluster " + std::to_string(i) +
                                     " overlaps V0 or an earlier cluster");
        covered |= c;
    }
    if (!(covered == VertexSet::full(n)))
        throw precondition_error("cluster partition: does not cover the vertex set");
    if (!p.origin.empty() && p.origin.size() != p.clusters.size())
        throw precondition_error("cluster partition: origin tags must cover every cluster or none");
}

// True when every cluster sits inside the initial part its tag names.
// Requires tags; an untagged partition never certifies a refinement.
inline bool refinement_consistent(const ClusterPartition& p,
                                  const std::vector<VertexSet>& initial) {
    if (p.origin.size() != p.clusters.size()) return false;
    for (size_t i = 0; i < p.clusters.size(); ++i) {
        int q = p.origin[i];
        if (q < 0 || size_t(q) >= initial.size()) return false;
        if (!p.clusters[i].subset_of(initial[q])) return false;
    }
    return true;
}

namespace detail {

inline void check_density_pair(const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw precondition_error("density pair: empty side");
    if (a.intersects(b)) throw precondition_error("density pair: sides overlap");
}

}  // namespace detail

inline Frac pair_density(const Graph& g, const VertexSet& a, const VertexSet& b) {
    detail::check_density_pair(a, b);
    return Frac(g.edges_between(a, b), (long long)a.count() * b.count());
}

inline Frac pair_density(const ColoredGraph& g, const VertexSet& a, const VertexSet& b,
                         std::optional<Color> color = std::nullopt) {
    if (!color) {
        detail::check_density_pair(a, b);
        long long e = 0;
        a.for_each([&](int u) {
            e += (g.red().nbrs(u) | g.blue().nbrs(u)).intersect_count(b);
        });
        return Frac(e, (long long)a.count() * b.count());
    }
    return pair_density(g.sub(*color), a, b);
}

enum class RegularityMode { Exact, Sampled };

struct RegularityVerdict {
    bool regular = false;
    // Sampled runs that find no violation prove nothing.
    bool conclusive = false;
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

namespace detail {

// Smallest qualifying subset size: least s with s >= eps * n, floored at 1.
inline int regular_min_size(Frac eps, int n) {
    long long s = (eps.num * n + eps.den - 1) / eps.den;
    return int(std::max<long long>(1, s));
}

// Deviation test |e'/(cell) - e/(ab)| >= eps, cross-multiplied. Violations are
// weak inequalities because regular demands strictly-smaller deviation.
inline bool deviates(long long sub_edges, long long cell, long long base_edges,
                     long long ab, Frac eps) {
    __int128 diff = (__int128)sub_edges * ab - (__int128)base_edges * cell;
    if (diff < 0) diff = -diff;
    return diff * eps.den >= (__int128)eps.num * cell * ab;
}

inline RegularityVerdict exact_regular_check(const Graph& g, const VertexSet& a,
                                             const VertexSet& b, Frac eps) {
    const std::vector<int> av = a.to_vector(), bv = b.to_vector();
    const int na = int(av.size()), nb = int(bv.size());
    const long long ab = (long long)na * nb;
    const long long base = g.edges_between(a, b);
    const int amin = regular_min_size(eps, na), bmin = regular_min_size(eps, nb);

    // Adjacency into A as bitmasks over av's index order.
    std::vector<uint32_t> into_a(bv.size(), 0);
    for (int j = 0; j < nb; ++j)
        for (int i = 0; i < na; ++i)
            if (g.has_edge(av[i], bv[j])) into_a[j] |= uint32_t{1} << i;

    // For a fixed A' and |B'| = s, the extreme densities come from the s
    // smallest and s largest degrees into A', so only prefix sums get checked.
    std::vector<int> ord(nb), w(nb);
    std::vector<long long> pre(nb + 1, 0);
    auto make_witness = [&](uint32_t mask, int s, bool largest) {
        VertexSet wa(a.capacity()), wb(b.capacity());
        for (int i = 0; i < na; ++i)
            if (mask >> i & 1) wa.add(av[i]);
        for (int t = 0; t < s; ++t) wb.add(bv[ord[largest ? nb - 1 - t : t]]);
        return RegularityVerdict{false, true, std::make_pair(wa, wb)};
    };

    for (uint32_t mask = 1; mask < (uint32_t{1} << na); ++mask) {
        int asz = std::popcount(mask);
        if (asz < amin) continue;
        for (int j = 0; j < nb; ++j) w[j] = std::popcount(mask & into_a[j]);
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](int x, int y) {
            return w[x] != w[y] ? w[x] < w[y] : x < y;
        });
        for (int j = 0; j < nb; ++j) pre[j + 1] = pre[j] + w[ord[j]];
        for (int s = bmin; s <= nb; ++s) {
            long long cell = (long long)asz * s;
            if (deviates(pre[s], cell, base, ab, eps)) return make_witness(mask, s, false);
            if (deviates(pre[nb] - pre[nb - s], cell, base, ab, eps))
                return make_witness(mask, s, true);
        }
    }
    return {true, true, std::nullopt};
}

inline RegularityVerdict sampled_regular_check(const Graph& g, const VertexSet& a,
                                               const VertexSet& b, Frac eps, uint64_t seed) {
    const std::vector<int> av = a.to_vector(), bv = b.to_vector();
    const int na = int(av.size()), nb = int(bv.size());
    const long long ab = (long long)na * nb;
    const long long base = g.edges_between(a, b);
    const int amin = regular_min_size(eps, na), bmin = regular_min_size(eps, nb);
    Rng rng(seed);

    std::vector<int> pa(av), pb(bv);
    for (int trial = 0; trial < kRegularitySamples; ++trial) {
        int asz = rng.uniform(amin, na), bsz = rng.uniform(bmin, nb);
        for (int i = 0; i < asz; ++i) std::swap(pa[i], pa[rng.uniform(i, na - 1)]);
        for (int j = 0; j < bsz; ++j) std::swap(pb[j], pb[rng.uniform(j, nb - 1)]);
        VertexSet wa(a.capacity()), wb(b.capacity());
        for (int i = 0; i < asz; ++i) wa.add(pa[i]);
        for (int j = 0; j < bsz; ++j) wb.add(pb[j]);
        long long e = g.edges_between(wa, wb);
        if (deviates(e, (long long)asz * bsz, base, ab, eps))
            return {false, true, std::make_pair(wa, wb)};
    }
    return {true, false, std::nullopt};
}

}  // namespace detail

// Regular iff every sub-pair with |A'| >= eps|A|, |B'| >= eps|B| has density
// within eps of d(A,B), strictly. Exact mode enumerates and is conclusive
// either way; Sampled mode only ever proves irregularity.
inline RegularityVerdict epsilon_regular_check(const Graph& g, const VertexSet& a,
                                               const VertexSet& b, Frac eps,
                                               RegularityMode mode = RegularityMode::Exact,
                                               uint64_t seed = 0) {
    if (!(eps > Frac(0)) || eps > Frac(1))
        throw precondition_error("epsilon_regular_check: eps must lie in (0, 1]");
    detail::check_density_pair(a, b);
    if (mode == RegularityMode::Sampled) return detail::sampled_regular_check(g, a, b, eps, seed);
    if (a.count() > kRegularitySideCap || b.count() > kRegularitySideCap)
        throw capacity_error("epsilon_regular_check: exact mode caps sides at " +
                             std::to_string(kRegularitySideCap) + ", got " +
                             std::to_string(a.count()) + " x " + std::to_string(b.count()));
    return detail::exact_regular_check(g, a, b, eps);
}

inline RegularityVerdict epsilon_regular_check(const ColoredGraph& g, const VertexSet& a,
                                               const VertexSet& b, Frac eps,
                                               std::optional<Color> color = std::nullopt,
                                               RegularityMode mode = RegularityMode::Exact,
                                               uint64_t seed = 0) {
    if (!color) return epsilon_regular_check(g.total(), a, b, eps, mode, seed);
    return epsilon_regular_check(g.sub(*color), a, b, eps, mode, seed);
}

// Measurements behind one reduced-graph edge decision. Regularity verdicts are
// filled only when both clusters fit under the exact-mode cap.
struct PairReport {
    Frac red, blue, total;
    std::optional<bool> regular_red, regular_blue;
};

struct ReducedGraph {
    ColoredGraph gamma;  // vertex i = cluster i
    std::vector<std::vector<PairReport>> pairs;  // symmetric, diagonal unused
    Frac eps, d;
};

// Cluster pair becomes an edge iff total density >= 2d; the edge carries a
// color iff that color's density >= d. Every edge gets a color: each host
// edge has one, so total density never exceeds red + blue.
inline ReducedGraph reduced_graph(const ColoredGraph& g, const ClusterPartition& p,
                                  Frac eps, Frac d) {
    validate_partition(g.n(), p);
    if (!(eps > Frac(0)) || !(d > Frac(0)))
        throw precondition_error("reduced_graph: eps and d must be positive");
    const int k = int(p.clusters.size());
    const Graph total = g.total();

    ReducedGraph out{ColoredGraph(k),
                     std::vector<std::vector<PairReport>>(k, std::vector<PairReport>(k)),
                     eps, d};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const VertexSet &vi = p.clusters[i], &vj = p.clusters[j];
            PairReport rep;
            rep.red = pair_density(g.red(), vi, vj);
            rep.blue = pair_density(g.blue(), vi, vj);
            rep.total = pair_density(total, vi, vj);
            if (vi.count() <= kRegularitySideCap && vj.count() <= kRegularitySideCap) {
                rep.regular_red = detail::exact_regular_check(g.red(), vi, vj, eps).regular;
                rep.regular_blue = detail::exact_regular_check(g.blue(), vi, vj, eps).regular;
            }
            if (rep.total >= Frac(2) * d) {
                ColorSet cs{rep.red >= d, rep.blue >= d};
                if (!cs.any())
                    throw std::logic_error("reduced edge clears 2d but neither color clears d");
                out.gamma.add_edge(i, j, cs);
            }
            out.pairs[i][j] = rep;
            out.pairs[j][i] = rep;
        }
    return out;
}

}  // namespace mono
