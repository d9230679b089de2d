#include <catch2/catch_amalgamated.hpp>

#include "mono/extremal.hpp"
#include "mono/robust.hpp"
#include "support/naive.hpp"

using namespace mono;

namespace {

Graph two_cliques(int a, int b, std::vector<std::pair<int, int>> bridges) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
    for (int u = a; u < a + b; ++u)
        for (int v = u + 1; v < a + b; ++v) g.add_edge(u, v);
    for (auto [u, v] : bridges) g.add_edge(u, v);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("sparse cut on known instances") {
    Graph g = two_cliques(5, 5, {{4, 5}});
    auto cut = find_sparse_cut(g, VertexSet::full(10), Frac(1, 5));
    REQUIRE(cut.has_value());
    CHECK(cut->crossing == 1);
    CHECK(cut->ratio == Frac(1, 25));
    CHECK(cut->x == VertexSet::of(10, {0, 1, 2, 3, 4}));

    Graph k10 = complete(10);
    CHECK_FALSE(find_sparse_cut(k10, VertexSet::full(10), Frac(99, 100)).has_value());

    Graph c8 = cycle(8);
    auto arc = find_sparse_cut(c8, VertexSet::full(8), Frac(3, 10));
    REQUIRE(arc.has_value());
    CHECK(arc->crossing == 2);
    CHECK(arc->x.count() == 4);
    CHECK(arc->ratio == Frac(2, 16));
    CHECK(arc->x == VertexSet::of(8, {0, 1, 2, 3}));
}

TEST_CASE("sparse cut preconditions") {
    Graph g = complete(30);
    CHECK_THROWS_AS(find_sparse_cut(g, VertexSet::of(30, {3}), Frac(1, 2)),
                    precondition_error);
    CHECK_THROWS_AS(find_sparse_cut(g, VertexSet::full(30), Frac(1, 2)),
                    capacity_error);
    // heuristic mode has no cap
    CHECK_FALSE(find_sparse_cut(g, VertexSet::full(30), Frac(1, 2),
                                CutMode::Heuristic, 7)
                    .has_value());
}

TEST_CASE("exact cut agrees with naive enumeration") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + int(rng.below(11));  // up to 14
        Graph g = random_graph(n, 0.35 + 0.4 * rng.unit(), rng);
        auto mine = detail::exact_min_ratio_cut(g, VertexSet::full(n).to_vector());
        naive::Cut ref = naive::min_ratio_cut(g, VertexSet::full(n).to_vector());
        REQUIRE(mine.has_value());
        long long sx = mine->x.count(), sy = mine->y.count();
        // identical minimum ratio, exact arithmetic
        CHECK(mine->crossing * (long long)ref.x.size() * (long long)(n - ref.x.size()) ==
              ref.crossing * sx * sy);
    }
}

TEST_CASE("robust certificates on known instances") {
    Graph k8 = complete(8);
    auto c1 = robust_certificate(k8, VertexSet::full(8), Frac(4, 5), Frac(9, 10), 8);
    CHECK(c1.robust);
    CHECK(c1.min_degree_ok);
    CHECK(c1.conclusive);
    CHECK(c1.worst_degree == 7);

    Graph c5 = cycle(5);
    auto c2 = robust_certificate(c5, VertexSet::full(5), Frac(2, 5), Frac(1, 10), 5);
    CHECK(c2.robust);

    Graph tk = two_cliques(5, 5, {{4, 5}});
    auto c3 = robust_certificate(tk, VertexSet::full(10), Frac(2, 5), Frac(1, 5), 10);
    CHECK_FALSE(c3.robust);
    CHECK(c3.min_degree_ok);
    REQUIRE(c3.cut_search.cut.has_value());
    CHECK(c3.cut_search.cut->ratio == Frac(1, 25));
}

TEST_CASE("heuristic mode labels its verdicts") {
    Graph big = two_cliques(15, 15, {{14, 15}});
    auto cert = robust_certificate(big, VertexSet::full(30), Frac(2, 5), Frac(1, 10),
                                   30, CutMode::Heuristic, 11);
    CHECK_FALSE(cert.robust);
    CHECK(cert.conclusive);  // a found cut is a proof either way
    REQUIRE(cert.cut_search.cut.has_value());
    CHECK(cert.cut_search.cut->ratio == Frac(1, 225));

    Graph k30 = complete(30);
    auto none = robust_certificate(k30, VertexSet::full(30), Frac(1, 2), Frac(1, 2),
                                   30, CutMode::Heuristic, 11);
    CHECK(none.robust);
    CHECK_FALSE(none.conclusive);
    CHECK_FALSE(none.cut_search.conclusive);
}

TEST_CASE("single vertex domains") {
    Graph g = complete(12);
    auto c = robust_certificate(g, VertexSet::of(12, {5}), Frac(1, 12), Frac(1, 2), 12);
    CHECK(c.robust);
    auto c2 = robust_certificate(g, VertexSet::of(12, {5}), Frac(1, 6), Frac(1, 2), 12);
    CHECK_FALSE(c2.robust);
}

TEST_CASE("robust partition splits clique clusters") {
    Graph k12 = complete(12);
    auto parts = robust_partition(k12, Frac(1, 2), Frac(1, 1000));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == VertexSet::full(12));

    Graph tk = two_cliques(8, 8, {{0, 8}, {7, 15}});
    // crossing 2 vs threshold (1/20)*64 = 3.2: splits
    auto two = robust_partition(tk, Frac(2, 5), Frac(1, 20));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == VertexSet::of(16, {0, 1, 2, 3, 4, 5, 6, 7}));
    CHECK(two[1] == VertexSet::of(16, {8, 9, 10, 11, 12, 13, 14, 15}));
    // at alpha=0.01 the threshold is 0.64 < 2, so no cut qualifies
    auto one = robust_partition(tk, Frac(2, 5), Frac(1, 100));
    CHECK(one.size() == 1);

    // three K_6's pairwise joined by single edges
    Graph three(18);
    for (int c = 0; c < 3; ++c)
        for (int u = 6 * c; u < 6 * c + 6; ++u)
            for (int v = u + 1; v < 6 * c + 6; ++v) three.add_edge(u, v);
    three.add_edge(0, 6);
    three.add_edge(1, 12);
    three.add_edge(7, 13);
    auto trip = robust_partition(three, Frac(1, 4), Frac(1, 25));
    REQUIRE(trip.size() == 3);
    for (int c = 0; c < 3; ++c) CHECK(trip[c].count() == 6);

    CHECK_THROWS_AS(robust_partition(cycle(10), Frac(1, 2), Frac(1, 10)),
                    precondition_error);
}

TEST_CASE("cleaning a sparse cut") {
    Graph tk = two_cliques(8, 8, {{0, 8}, {7, 15}});
    VertexSet a = VertexSet::of(16, {0, 1, 2, 3, 4, 5, 6, 7});
    VertexSet b = a.complement();
    Cut natural{a, b, 2, Frac(2, 64)};
    Bipartition clean = clean_sparse_cut(tk, Frac(2, 5), Frac(1, 10), natural);
    CHECK(clean.s1 == a);
    CHECK(clean.s2 == b);

    // vertex 0 misplaced: 7 cross edges vs 1 internal, so it moves back
    VertexSet a2 = VertexSet::of(16, {1, 2, 3, 4, 5, 6, 7});
    VertexSet b2 = a2.complement();
    Cut skew{a2, b2, long(tk.edges_between(a2, b2)), Frac(tk.edges_between(a2, b2), 7 * 9)};
    REQUIRE(skew.ratio < Frac(1, 4));
    Bipartition fixed = clean_sparse_cut(tk, Frac(2, 5), Frac(1, 4), skew);
    CHECK((fixed.s1 == a || fixed.s2 == a));

    Cut fake{VertexSet::of(16, {0, 1}), VertexSet::of(16, {0, 1}).complement(), 60,
             Frac(60, 28)};
    CHECK_THROWS_AS(clean_sparse_cut(tk, Frac(2, 5), Frac(1, 10), fake),
                    precondition_error);
}

TEST_CASE("maximal extension") {
    Graph g(6);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    g.add_edge(5, 0);
    g.add_edge(5, 1);
    g.add_edge(5, 2);
    VertexSet h0 = VertexSet::of(6, {0, 1, 2, 3, 4});
    CHECK(maximal_extension(g, h0, Frac(1, 2)) == VertexSet::full(6));
    CHECK(maximal_extension(g, h0, Frac(7, 10)) == h0);
    CHECK(maximal_extension(g, VertexSet::full(6), Frac(1, 10)) == VertexSet::full(6));
    CHECK_THROWS_AS(maximal_extension(g, VertexSet(6), Frac(1, 2)), precondition_error);
}

TEST_CASE("near bipartition") {
    Graph k55(10);
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v) k55.add_edge(u, v);
    auto bip = near_bipartition(k55, Frac(1, 2), Frac(1, 10));
    REQUIRE(bip.has_value());
    CHECK(bip->inside1 == 0);
    CHECK(bip->inside2 == 0);
    CHECK(bip->cross_min_deg1 == 5);

    CHECK_FALSE(near_bipartition(complete(10), Frac(1, 2), Frac(1, 20)).has_value());

    auto even_odd = near_bipartition(cycle(12), Frac(1, 2), Frac(1, 100));
    REQUIRE(even_odd.has_value());
    CHECK(even_odd->s1 == VertexSet::of(12, {0, 2, 4, 6, 8, 10}));
    CHECK(even_odd->inside1 == 0);
    CHECK(even_odd->inside2 == 0);
}

TEST_CASE("extreme vertices") {
    ColoredGraph allred(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) allred.add_edge(u, v, Color::Red);
    CHECK(extreme_vertices(allred, 1.0, Color::Red) == VertexSet::full(6));
    CHECK(extreme_vertices(allred, 1.0, Color::Blue).empty());

    ColoredGraph f9 = build_f9();
    VertexSet z = extreme_vertices(f9, 3.0, Color::Red);
    DegreeReport r = degree_report(f9);
    for (int v = 0; v < 9; ++v)
        CHECK(z.contains(v) == (r.per_vertex[v][2] < 3));
    CHECK(z == VertexSet::of(9, {2}));
}

TEST_CASE("small cuts cross many edges under a degree floor") {
    // any partition with the small side at most eta*n/2 crosses at least
    // (eta/2)|X1||X2| edges when the min degree is eta*n
    Rng rng(5151);
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 8 + int(rng.below(9));
        Graph g = random_graph(n, 0.75, rng);
        int delta = g.min_degree();
        if (delta < 2) continue;
        Frac eta(delta, n);
        int smax = delta / 2;  // floor(eta*n/2)
        if (smax < 1) continue;
        int s = 1 + int(rng.below(uint64_t(smax)));
        VertexSet x1(n);
        while (x1.count() < s) x1.add(int(rng.below(uint64_t(n))));
        VertexSet x2 = x1.complement();
        Frac lhs(g.edges_between(x1, x2));
        Frac rhs = eta / Frac(2) * Frac(x1.count()) * Frac(x2.count());
        CHECK(lhs >= rhs);
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("robustness survives deleting a small set") {
    // near-complete graphs at n=24: the bound alpha*eta*n/8 admits exactly one
    // deleted vertex, the honest nonvacuous case under the exact-cut cap
    Rng rng(6161);
    int tested = 0;
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(24, 0.985, rng);
        auto base = robust_certificate(g, VertexSet::full(24), Frac(7, 8), Frac(2, 5), 24);
        if (!base.robust) continue;
        int victim = int(rng.below(24));
        VertexSet rest = VertexSet::full(24);
        rest.remove(victim);
        auto after = robust_certificate(g, rest, Frac(7, 16), Frac(1, 5), 24);
        CHECK(after.robust);
        ++tested;
    }
    CHECK(tested >= 6);
}

TEST_CASE("maximal extensions stay robust at the degraded parameters") {
    Rng rng(7171);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        // dense core on {0..7}, four attachments with 6 or 7 core neighbors
        Graph g(12);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (rng.unit() < 0.97) g.add_edge(u, v);
        for (int v = 8; v < 12; ++v) {
            int want = 6 + int(rng.below(2));
            std::vector<int> targets{0, 1, 2, 3, 4, 5, 6, 7};
            for (int i = 7; i > 0; --i) std::swap(targets[i], targets[rng.uniform(0, i)]);
            for (int i = 0; i < want; ++i) g.add_edge(v, targets[i]);
        }
        VertexSet h0 = VertexSet::of(12, {0, 1, 2, 3, 4, 5, 6, 7});
        Frac eta(1, 2), alpha(1, 4), eta_prime(1, 2);
        auto base = robust_certificate(g, h0, eta, alpha, 12);
        if (!base.robust) continue;
        VertexSet hk = maximal_extension(g, h0, eta_prime);
        REQUIRE(hk == VertexSet::full(12));
        Frac tau(h0.count(), hk.count());
        auto grown = robust_certificate(g, hk, eta_prime, alpha * eta_prime * tau, 12);
        CHECK(grown.robust);
        ++tested;
    }
    CHECK(tested >= 20);
}
