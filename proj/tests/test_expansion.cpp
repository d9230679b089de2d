#include <catch2/catch_amalgamated.hpp>

#include "mono/expansion.hpp"
#include "mono/robust.hpp"
#include "support/naive.hpp"

using namespace mono;

namespace {

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

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(i, i + 5);              // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

// record-level validity: disjoint layers excluding the root, first layer is
// exactly N(root), attachment floors match the recorded measurement
void check_cascade_record(const Graph& g, const Cascade& c) {
    REQUIRE(!c.layers.empty());
    CHECK(c.layers[0] == g.nbrs(c.root));
    VertexSet seen(g.n());
    seen.add(c.root);
    long long covered = 1;
    for (const auto& l : c.layers) {
        CHECK_FALSE(l.contains(c.root));
        CHECK_FALSE(seen.intersects(l));
        seen |= l;
        covered += l.count();
    }
    CHECK(c.spanning == (covered == g.n()));
    if (c.layers.size() >= 2) {
        int floor = -1;
        for (size_t i = 0; i + 1 < c.layers.size(); ++i) {
            c.layers[i + 1].for_each([&](int v) {
                int d = g.deg_in(v, c.layers[i]);
                if (floor < 0 || d < floor) floor = d;
            });
        }
        CHECK(floor == c.achieved_floor);
    }
}

}  // namespace

TEST_CASE("cascade on a complete graph is one layer") {
    Graph g = complete(7);
    Cascade c = neighborhood_cascade(g, 3, Frac(1, 2), 7);
    REQUIRE(c.layers.size() == 1);
    VertexSet rest = VertexSet::full(7);
    rest.remove(3);
    CHECK(c.layers[0] == rest);
    CHECK(c.spanning);
    CHECK(c.threshold == Frac(7, 4));
    CHECK(c.achieved_floor == -1);
}

TEST_CASE("cascade on c5") {
    Graph g = cycle(5);
    Cascade c = neighborhood_cascade(g, 0, Frac(2, 5), 5);
    REQUIRE(c.layers.size() == 2);
    CHECK(c.layers[0] == VertexSet::of(5, {1, 4}));
    CHECK(c.layers[1] == VertexSet::of(5, {2, 3}));
    CHECK(c.spanning);
    CHECK(c.achieved_floor == 1);
    CHECK(c.threshold == Frac(2, 5));
    check_cascade_record(g, c);
}

TEST_CASE("cascade on petersen matches bfs levels") {
    Graph g = petersen();
    Cascade c = neighborhood_cascade(g, 0, Frac(3, 10), 10);
    REQUIRE(c.layers.size() == 2);
    CHECK(c.layers[0] == VertexSet::of(10, {1, 4, 5}));
    CHECK(c.layers[1] == VertexSet::of(10, {2, 3, 6, 7, 8, 9}));
    CHECK(c.spanning);
    check_cascade_record(g, c);
}

TEST_CASE("cascade stalls on a disconnected graph") {
    Graph g(8);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    for (int u = 4; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) g.add_edge(u, v);
    Cascade c = neighborhood_cascade(g, 0, Frac(1, 4), 8);
    CHECK_FALSE(c.spanning);
    REQUIRE(c.layers.size() == 1);
    CHECK(c.layers[0] == VertexSet::of(8, {1, 2, 3}));
}

TEST_CASE("cascades on robust instances span and meet their floors") {
    Rng rng(8282);
    int tested = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int n = 10 + int(rng.below(7));
        Graph g = random_graph(n, 0.8, rng);
        Frac eta(1, 2), alpha(1, 4);
        auto cert = robust_certificate(g, VertexSet::full(n), eta, alpha, n);
        if (!cert.robust) continue;
        for (int x = 0; x < n; x += 3) {
            Cascade c = neighborhood_cascade(g, x, alpha, n);
            check_cascade_record(g, c);
            CHECK(c.spanning);
            if (c.layers.size() >= 2)
                CHECK(Frac(c.achieved_floor) >= c.threshold);
        }
        ++tested;
    }
    CHECK(tested >= 15);
}

TEST_CASE("connector counts on known instances") {
    Graph k4 = complete(4);
    ConnectorCounts cc = count_connectors(k4, 0, 1, 2);
    CHECK(cc.counts == std::vector<long long>{2, 2});

    Graph c5 = cycle(5);
    ConnectorCounts c5c = count_connectors(c5, 0, 1, 4);
    CHECK(c5c.counts == std::vector<long long>{0, 0, 1, 0});

    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    ConnectorCounts k33c = count_connectors(k33, 0, 3, 3);
    CHECK(k33c.counts == std::vector<long long>{0, 4, 0});

    CHECK_THROWS_AS(count_connectors(k4, 0, 0, 2), precondition_error);
    CHECK_THROWS_AS(count_connectors(k4, 0, 1, 5), capacity_error);
}

TEST_CASE("connector counts agree with naive enumeration") {
    Rng rng(9393);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng.below(9));  // up to 12
        Graph g = random_graph(n, 0.25 + 0.5 * rng.unit(), rng);
        int x = int(rng.below(uint64_t(n)));
        int y = (x + 1 + int(rng.below(uint64_t(n - 1)))) % n;
        ConnectorCounts cc = count_connectors(g, x, y, 4);
        for (int i = 1; i <= 4; ++i)
            CHECK(cc.counts[i - 1] == naive::count_paths(g, x, y, i));
    }
}

TEST_CASE("connecting certificates on known instances") {
    ConnectingReport k10 = connecting_certificate(complete(10), 1, Frac(1, 2), 10);
    CHECK(k10.all_pass);
    CHECK(k10.max_witness == 1);
    for (const auto& p : k10.pairs) CHECK(p.witness == 1);

    Graph bridged(10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) bridged.add_edge(u, v);
    for (int u = 5; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) bridged.add_edge(u, v);
    bridged.add_edge(4, 5);
    ConnectingReport rep = connecting_certificate(bridged, 2, Frac(3, 10), 10);
    CHECK_FALSE(rep.all_pass);
    bool cross_fail = false;
    for (const auto& p : rep.pairs)
        if (p.x < 4 && p.y > 5 && p.witness == 0) cross_fail = true;
    CHECK(cross_fail);

    Graph k2(2);
    k2.add_edge(0, 1);
    ConnectingReport tiny = connecting_certificate(k2, 1, Frac(1, 2), 2);
    CHECK_FALSE(tiny.all_pass);
}

TEST_CASE("robust implies connecting at the squared scale") {
    Rng rng(10101);
    int tested = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 10 + int(rng.below(7));
        Graph g = random_graph(n, 0.82, rng);
        Frac eta(1, 2), alpha(1, 2);
        auto cert = robust_certificate(g, VertexSet::full(n), eta, alpha, n);
        if (!cert.robust) continue;
        Frac a4 = alpha * alpha * alpha * alpha;
        ConnectingReport rep = connecting_certificate(g, 4, a4, n);  // k = floor(1/alpha^2)
        CHECK(rep.all_pass);
        ++tested;
    }
    CHECK(tested >= 8);
}

TEST_CASE("connecting with a degree floor implies robustness") {
    Rng rng(11111);
    int tested = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 10 + int(rng.below(7));
        Graph g = random_graph(n, 0.75, rng);
        Frac alpha(1, 9);  // k' = floor(1/sqrt(alpha)) - 1 = 2
        ConnectingReport rep = connecting_certificate(g, 2, alpha, n);
        if (!rep.all_pass) continue;
        int delta = g.min_degree();
        if (delta == 0) continue;
        Frac eta(delta, n);
        Frac ak1(1);
        for (int i = 0; i <= rep.max_witness; ++i) ak1 = ak1 * alpha;
        auto cert = robust_certificate(g, VertexSet::full(n), eta, ak1, n);
        CHECK(cert.robust);
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("least connector is lexicographically first and honors avoid sets") {
    Graph g = complete(6);
    auto p = least_connector(g, 0, 5, 2, VertexSet(6));
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 1, 2, 5});

    VertexSet avoid = VertexSet::of(6, {1, 2});
    auto q = least_connector(g, 0, 5, 2, avoid);
    REQUIRE(q.has_value());
    CHECK(*q == std::vector<int>{0, 3, 4, 5});

    Graph c5 = cycle(5);
    CHECK_FALSE(least_connector(c5, 0, 1, 1, VertexSet(5)).has_value());
    auto around = least_connector(c5, 0, 1, 3, VertexSet(5));
    REQUIRE(around.has_value());
    CHECK(*around == std::vector<int>{0, 4, 3, 2, 1});
}
