#ifndef MONO_EXTREMAL_HPP
#define MONO_EXTREMAL_HPP

#include "mono/graph.hpp"

namespace mono {

// floor((3n-3)/4) == ceil((3n-3)/4) - [adjustment]; the sharp threshold is
// ceil((3n-3)/4), and the families below realize delta = that - 1.
inline int sharp_delta_threshold(int n) { return (3 * n - 3 + 3) / 4; }  // ceil((3n-3)/4)

enum class FamilyKind { F1, F2, F3 };
enum class ArbitraryColorPolicy { AllRed, AllBlue, SeededRandom };

namespace detail {
struct ArbColor {
    ArbitraryColorPolicy pol;
    Rng rng;
    Color next() {
        if (pol == ArbitraryColorPolicy::AllRed) return Color::Red;
        if (pol == ArbitraryColorPolicy::AllBlue) return Color::Blue;
        return rng.coin() ? Color::Red : Color::Blue;
    }
};

inline void clique(ColoredGraph& g, const std::vector<int>& vs, Color c) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j], c);
}
inline void clique_arb(ColoredGraph& g, const std::vector<int>& vs, ArbColor& arb) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j], arb.next());
}
inline void join(ColoredGraph& g, const std::vector<int>& a, const std::vector<int>& b, Color c) {
    for (int u : a)
        for (int v : b) g.add_edge(u, v, c);
}
}  // namespace detail

// The 9-vertex example: vertices x1,x2,x3,y1,y2,z1,z2,z3,z4 mapped to 0..8.
// Complement is the matching {z1z4, z3z2, x1y2, x2y1}; delta = 7 = ceil(24/4).
inline ColoredGraph build_f9() {
    ColoredGraph g(9);
    const int x1 = 0, x2 = 1, x3 = 2, y1 = 3, y2 = 4, z1 = 5, z2 = 6, z3 = 7, z4 = 8;
    for (int x : {x1, x2, x3})
        for (int z : {z1, z2, z3, z4}) g.add_edge(x, z, Color::Red);
    for (int y : {y1, y2})
        for (int z : {z1, z2, z3, z4}) g.add_edge(y, z, Color::Blue);
    detail::clique(g, {x1, x2, x3}, Color::Blue);
    g.add_edge(y1, y2, Color::Red);
    g.add_edge(x1, y1, Color::Blue);
    g.add_edge(x2, y2, Color::Blue);
    g.add_edge(x3, y1, Color::Red);
    g.add_edge(x3, y2, Color::Red);
    g.add_edge(z1, z2, Color::Blue);
    g.add_edge(z3, z4, Color::Blue);
    g.add_edge(z1, z3, Color::Red);
    g.add_edge(z2, z4, Color::Red);
    return g;
}

struct FamilyInstance {
    ColoredGraph graph;
    std::vector<std::vector<int>> parts;  // F1/F2: X1,X2,Y1,Y2; F3: X,Y,Z
    int delta = 0;
};

inline bool family_admissible(FamilyKind kind, int n) {
    switch (kind) {
        case FamilyKind::F1:
        case FamilyKind::F2:
            return n >= 8;
        case FamilyKind::F3:
            // Small cases admit a degenerate one-vertex side that kills the
            // example (n=5 is partitionable); require both residue and size.
            return n >= 9 && n % 4 != 0;
    }
    return false;
}

// Sharpness families. Each instance is complete minus the stated part pairs,
// has delta = ceil((3n-3)/4) - 1, and admits no partition under any policy
// for the "arbitrary" edges.
inline FamilyInstance build_family(FamilyKind kind, int n, ArbitraryColorPolicy pol,
                                   uint64_t seed = 0) {
    if (!family_admissible(kind, n))
        throw precondition_error("build_family: inadmissible n for this kind");
    detail::ArbColor arb{pol, Rng(seed)};
    FamilyInstance fi;
    fi.graph = ColoredGraph(n);
    ColoredGraph& g = fi.graph;
    if (kind == FamilyKind::F1 || kind == FamilyKind::F2) {
        // sizes as even as possible, |X1| >= |Y2| >= |X2|, |Y1|;
        // remainders to X1, Y2, X2, Y1 in that order
        int q = n / 4, r = n % 4;
        int sx1 = q + (r > 0), sy2 = q + (r > 1), sx2 = q + (r > 2), sy1 = q;
        std::vector<int> X1, X2, Y1, Y2;
        int v = 0;
        for (int i = 0; i < sx1; ++i) X1.push_back(v++);
        for (int i = 0; i < sx2; ++i) X2.push_back(v++);
        for (int i = 0; i < sy1; ++i) Y1.push_back(v++);
        for (int i = 0; i < sy2; ++i) Y2.push_back(v++);
        detail::join(g, X1, X2, Color::Blue);
        detail::join(g, Y1, Y2, Color::Blue);
        detail::join(g, X1, Y1, Color::Red);
        detail::join(g, X2, Y2, Color::Red);
        if (kind == FamilyKind::F1) {
            // missing: X1-Y2 and X2-Y1; all four insides arbitrary
            for (auto* p : {&X1, &X2, &Y1, &Y2}) detail::clique_arb(g, *p, arb);
        } else {
            // missing: X1-Y2 only; X2 joins all of Y
            detail::join(g, X2, Y1, Color::Red);
            detail::clique(g, X1, Color::Blue);
            detail::clique(g, Y2, Color::Blue);
            detail::clique_arb(g, X2, arb);
            detail::clique_arb(g, Y1, arb);
        }
        fi.parts = {X1, X2, Y1, Y2};
    } else {
        // |Z| = floor((n-1)/2) adjusted so 1 <= |X|+|Y|-|Z| <= 2
        int sz = (n % 2 == 0) ? (n - 2) / 2 : (n - 1) / 2;
        int sxy = n - sz;
        int sx = (sxy + 1) / 2, sy = sxy / 2;
        std::vector<int> X, Y, Z;
        int v = 0;
        for (int i = 0; i < sx; ++i) X.push_back(v++);
        for (int i = 0; i < sy; ++i) Y.push_back(v++);
        for (int i = 0; i < sz; ++i) Z.push_back(v++);
        detail::clique(g, X, Color::Blue);
        detail::clique(g, Y, Color::Red);
        detail::clique_arb(g, Z, arb);
        detail::join(g, X, Z, Color::Red);
        detail::join(g, Y, Z, Color::Blue);
        fi.parts = {X, Y, Z};
    }
    fi.delta = degree_report(g).delta_total;
    if (fi.delta != sharp_delta_threshold(n) - 1)
        throw std::logic_error("build_family: delta mismatch (construction bug)");
    return fi;
}

struct GenSpec {
    int n = 0;
    int delta_min = 0;          // required total-degree floor
    double edge_bias = 0.0;     // extra edge probability on top of the floor-driven rate
    double red_bias = 0.5;      // P(red) for each edge color draw
    int max_retries = 200;
};

// Random host conditioned on the degree floor (rejection sampling), then an
// independent coloring of every edge.
inline ColoredGraph random_instance(const GenSpec& spec, uint64_t seed) {
    if (spec.n < 0 || spec.delta_min < 0 || spec.delta_min > std::max(0, spec.n - 1))
        throw precondition_error("random_instance: bad GenSpec");
    Rng rng(seed);
    double p = spec.n <= 1 ? 1.0
                           : std::min(1.0, double(spec.delta_min) / double(spec.n - 1) + 0.10 +
                                               spec.edge_bias);
    for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        Graph host(spec.n);
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (rng.unit() < p) host.add_edge(u, v);
        if (host.min_degree() < spec.delta_min) continue;
        ColoredGraph g(spec.n);
        for (int u = 0; u < spec.n; ++u)
            host.nbrs(u).for_each([&](int v) {
                if (v > u) g.add_edge(u, v, rng.unit() < spec.red_bias ? Color::Red : Color::Blue);
            });
        return g;
    }
    throw generation_error("random_instance: degree floor not met after " +
                           std::to_string(spec.max_retries) + " attempts");
}

// Complete host with iid coloring; the staple for oracle sweeps.
inline ColoredGraph random_complete(int n, uint64_t seed, double red_bias = 0.5) {
    Rng rng(seed);
    ColoredGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v, rng.unit() < red_bias ? Color::Red : Color::Blue);
    return g;
}

}  // namespace mono

#endif
