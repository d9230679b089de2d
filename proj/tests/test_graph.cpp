#include <catch2/catch_amalgamated.hpp>

#include "mono/extremal.hpp"
#include "mono/graph.hpp"

using namespace mono;

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    s.add(0);
    s.add(63);
    s.add(64);
    s.add(69);
    CHECK(s.count() == 4);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(1));
    CHECK(s.complement().count() == 66);
    CHECK((s & VertexSet::of(70, {63, 69, 5})).to_vector() == std::vector<int>{63, 69});
    CHECK(s.min() == 0);
    s.remove(0);
    CHECK(s.min() == 63);
}

TEST_CASE("text round trip, canonical order") {
    ColoredGraph g(4);
    g.add_edge(2, 3, Color::Blue);
    g.add_edge(0, 1, Color::Red);
    g.add_edge(1, 3, ColorSet{true, true});
    std::string txt = save_graph(g);
    CHECK(txt == "n=4\n0 1 R\n1 3 RB\n2 3 B\n");
    ColoredGraph h = load_graph_text(txt);
    CHECK(h == g);
    CHECK(save_graph(h) == txt);
}

TEST_CASE("parser accepts comments and reports line numbers") {
    ColoredGraph g = load_graph_text("# header comment\nn=3\n0 1 R # trailing\n\n1 2 B\n");
    CHECK(g.n() == 3);
    CHECK(g.has_edge(0, 1, Color::Red));
    CHECK(g.has_edge(1, 2, Color::Blue));

    auto fails = [](const std::string& text, const std::string& needle) {
        try {
            load_graph_text(text);
            return false;
        } catch (const parse_error& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
    };
    CHECK(fails("n=2\n0 5 R\n", "line 2"));
    CHECK(fails("n=2\n0 1 purple\n", "bad color"));
    CHECK(fails("n=2\n1 1 R\n", "loop"));
    CHECK(fails("nope\n", "expected n="));
    CHECK(fails("n=3\n0 1 R\n0 1 B\n", "conflicting"));
    // same label twice is idempotent, not a conflict
    CHECK(load_graph_text("n=3\n0 1 R\n0 1 R\n").has_edge(0, 1, Color::Red));
}

TEST_CASE("seeded round trip property") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        GenSpec spec;
        spec.n = 1 + int(seed % 17);
        spec.delta_min = 0;
        ColoredGraph g = random_instance(spec, seed);
        CHECK(load_graph_text(save_graph(g)) == g);
    }
}

TEST_CASE("degree report") {
    ColoredGraph g(3);
    g.add_edge(0, 1, ColorSet{true, true});
    g.add_edge(1, 2, Color::Blue);
    DegreeReport r = degree_report(g);
    CHECK(r.delta_total == 1);
    CHECK(r.per_vertex[1][0] == 2);  // bicolored edge counted once in total
    CHECK(r.per_vertex[1][1] == 1);
    CHECK(r.per_vertex[1][2] == 2);
    CHECK(r.delta_red == 0);
    CHECK_FALSE(r.empty);

    DegreeReport e = degree_report(ColoredGraph(0));
    CHECK(e.empty);
    CHECK(e.delta_total == 0);
}

TEST_CASE("complete colorings satisfy degree complementation") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        ColoredGraph g = random_complete(9, seed);
        for (int v = 0; v < g.n(); ++v) {
            int dr = g.deg(v, Color::Red), db = g.deg(v, Color::Blue);
            CHECK(dr + db >= g.n() - 1);
            bool bicolored = false;
            for (int u = 0; u < g.n(); ++u)
                if (u != v && g.colors(u, v).red && g.colors(u, v).blue) bicolored = true;
            CHECK((dr + db == g.n() - 1) == !bicolored);
        }
    }
}

TEST_CASE("markov bounds") {
    MarkovBounds mb = markov_bounds({1, 1, 4}, 2.0);
    CHECK(mb.bound_geq == Catch::Approx(3.0));
    CHECK_FALSE(mb.bound_leq.has_value());

    MarkovBounds mb2 = markov_bounds({0, 2, 4}, 1.0, 4.0);
    CHECK(mb2.bound_leq.has_value());
    CHECK(*mb2.bound_leq == Catch::Approx(2.0));

    // part ii needs a <= mean < max <= b
    MarkovBounds mb3 = markov_bounds({3, 3, 3}, 1.0, 4.0);
    CHECK_FALSE(mb3.bound_leq.has_value());
    CHECK_THROWS_AS(markov_bounds({1, 2}, 0.0), precondition_error);
    CHECK_THROWS_AS(markov_bounds({}, 1.0), precondition_error);
}

TEST_CASE("markov bounds are valid counting bounds on random multisets") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> s;
        int m = rng.uniform(1, 12);
        double b = double(rng.uniform(5, 20));
        for (int i = 0; i < m; ++i) s.push_back(double(rng.uniform(0, int(b))));
        double a = double(rng.uniform(1, int(b)));
        MarkovBounds mb = markov_bounds(s, a, b);
        int count_geq = 0, count_leq = 0;
        for (double x : s) {
            if (x >= a) ++count_geq;
            if (x <= a) ++count_leq;
        }
        CHECK(double(count_geq) <= mb.bound_geq + 1e-9);
        if (mb.bound_leq) CHECK(double(count_leq) <= *mb.bound_leq + 1e-9);
    }
}

TEST_CASE("frac parse and compare") {
    CHECK(Frac::parse("0.25") == Frac(1, 4));
    CHECK(Frac::parse("1/3") == Frac(1, 3));
    CHECK(Frac::parse("2") == Frac(2, 1));
    CHECK(Frac(1, 3) < Frac(2, 5));
    CHECK((Frac(1, 2) - Frac(1, 3)).abs() == Frac(1, 6));
}

TEST_CASE("graph hash distinguishes colorings") {
    ColoredGraph a(3), b(3);
    a.add_edge(0, 1, Color::Red);
    b.add_edge(0, 1, Color::Blue);
    CHECK(graph_hash(a) != graph_hash(b));
    CHECK(graph_hash(a) == graph_hash(load_graph_text(save_graph(a))));
}
