#ifndef MONO_GRAPH_HPP
#define MONO_GRAPH_HPP

#include <array>
#include <sstream>
#include <tuple>

#include "mono/common.hpp"

namespace mono {

enum class Color : int { Red = 1, Blue = 2 };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "R" : "B"; }

// Edge label in a 2-multicoloring: R, B, or both. Bicolored edges are
// first-class; reduced graphs produce them.
struct ColorSet {
    bool red = false;
    bool blue = false;
    bool has(Color c) const { return c == Color::Red ? red : blue; }
    bool any() const { return red || blue; }
    bool operator==(const ColorSet&) const = default;
    static ColorSet parse(const std::string& s) {
        if (s == "R") return {true, false};
        if (s == "B") return {false, true};
        if (s == "RB") return {true, true};
        throw parse_error("bad color label: " + s);
    }
    std::string str() const { return red && blue ? "RB" : (red ? "R" : "B"); }
};

// Plain simple graph with bitset adjacency. Also serves as a one-color view
// of a ColoredGraph; all set-valued queries stay in the ambient index space.
class Graph {
  public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int n() const { return n_; }
    void add_edge(int u, int v) {
        check_pair(u, v);
        adj_[u].add(v);
        adj_[v].add(u);
    }
    void remove_edge(int u, int v) {
        check_pair(u, v);
        adj_[u].remove(v);
        adj_[v].remove(u);
    }
    bool has_edge(int u, int v) const {
        return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v && adj_[u].contains(v);
    }
    const VertexSet& nbrs(int v) const { return adj_[v]; }
    int deg(int v) const { return adj_[v].count(); }
    int deg_in(int v, const VertexSet& s) const { return adj_[v].intersect_count(s); }
    int min_degree() const {
        int d = n_ == 0 ? 0 : n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, deg(v));
        return d;
    }
    // min over s of deg(v, s); 0 for empty s
    int min_degree_in(const VertexSet& dom) const {
        int d = -1;
        dom.for_each([&](int v) {
            int dv = deg_in(v, dom);
            if (d < 0 || dv < d) d = dv;
        });
        return d < 0 ? 0 : d;
    }
    long long edge_count() const {
        long long s = 0;
        for (int v = 0; v < n_; ++v) s += deg(v);
        return s / 2;
    }
    long long edges_within(const VertexSet& s) const {
        long long c = 0;
        s.for_each([&](int v) { c += adj_[v].intersect_count(s); });
        return c / 2;
    }
    // A and B disjoint
    long long edges_between(const VertexSet& a, const VertexSet& b) const {
        long long c = 0;
        a.for_each([&](int v) { c += adj_[v].intersect_count(b); });
        return c;
    }
    bool connected_within(const VertexSet& dom) const {
        int m = dom.count();
        if (m <= 1) return true;
        VertexSet seen(n_);
        std::vector<int> stack{dom.min()};
        seen.add(dom.min());
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet next = (adj_[v] & dom) - seen;
            next.for_each([&](int u) {
                seen.add(u);
                ++cnt;
                stack.push_back(u);
            });
        }
        return cnt == m;
    }
    VertexSet component_of(int root, const VertexSet& dom) const {
        VertexSet seen(n_);
        if (!dom.contains(root)) return seen;
        seen.add(root);
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet next = (adj_[v] & dom) - seen;
            next.for_each([&](int u) {
                seen.add(u);
                stack.push_back(u);
            });
        }
        return seen;
    }
    std::vector<VertexSet> components(const VertexSet& dom) const {
        std::vector<VertexSet> out;
        VertexSet rest = dom;
        while (!rest.empty()) {
            VertexSet c = component_of(rest.min(), rest);
            out.push_back(c);
            rest -= c;
        }
        return out;
    }
    bool operator==(const Graph&) const = default;

  private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw precondition_error("vertex out of range");
        if (u == v) throw precondition_error("loops not allowed");
    }
    int n_;
    std::vector<VertexSet> adj_;
};

// Keep only edges crossing between a and b (both endpoints' other edges drop).
inline Graph cross_subgraph(const Graph& g, const VertexSet& a, const VertexSet& b) {
    Graph h(g.n());
    a.for_each([&](int u) {
        (g.nbrs(u) & b).for_each([&](int v) { h.add_edge(u, v); });
    });
    return h;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& dom) {
    Graph h(g.n());
    dom.for_each([&](int u) {
        (g.nbrs(u) & dom).for_each([&](int v) {
            if (v > u) h.add_edge(u, v);
        });
    });
    return h;
}

class ColoredGraph {
  public:
    ColoredGraph() = default;
    explicit ColoredGraph(int n) : n_(n), red_(n), blue_(n) {}

    int n() const { return n_; }
    void add_edge(int u, int v, ColorSet cs) {
        if (!cs.any()) throw precondition_error("edge needs at least one color");
        ColorSet cur = colors(u, v);
        if (cur.any() && !(cur == cs))
            throw precondition_error("conflicting color set for duplicate edge");
        if (cs.red) red_.add_edge(u, v);
        if (cs.blue) blue_.add_edge(u, v);
    }
    void add_edge(int u, int v, Color c) { add_edge(u, v, c == Color::Red ? ColorSet{true, false} : ColorSet{false, true}); }
    bool has_edge(int u, int v) const { return red_.has_edge(u, v) || blue_.has_edge(u, v); }
    bool has_edge(int u, int v, Color c) const { return sub(c).has_edge(u, v); }
    ColorSet colors(int u, int v) const { return {red_.has_edge(u, v), blue_.has_edge(u, v)}; }
    const Graph& sub(Color c) const { return c == Color::Red ? red_ : blue_; }
    const Graph& red() const { return red_; }
    const Graph& blue() const { return blue_; }
    Graph total() const {
        Graph t(n_);
        for (int u = 0; u < n_; ++u)
            (red_.nbrs(u) | blue_.nbrs(u)).for_each([&](int v) {
                if (v > u) t.add_edge(u, v);
            });
        return t;
    }
    int total_deg(int v) const { return (red_.nbrs(v) | blue_.nbrs(v)).count(); }
    int deg(int v, Color c) const { return sub(c).deg(v); }
    int min_total_degree() const {
        int d = n_ == 0 ? 0 : n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, total_deg(v));
        return d;
    }
    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (total_deg(v) != n_ - 1) return false;
        return true;
    }
    // edges with u < v, sorted
    std::vector<std::tuple<int, int, ColorSet>> edge_list() const {
        std::vector<std::tuple<int, int, ColorSet>> out;
        for (int u = 0; u < n_; ++u)
            (red_.nbrs(u) | blue_.nbrs(u)).for_each([&](int v) {
                if (v > u) out.emplace_back(u, v, colors(u, v));
            });
        return out;
    }
    bool operator==(const ColoredGraph&) const = default;

  private:
    int n_ = 0;
    Graph red_, blue_;
};

// Text format: first line "n=<int>", then one "<u> <v> <R|B|RB>" per edge.
// '#' starts a comment; blank lines ignored.
inline ColoredGraph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            line = line.substr(a, line.find_last_not_of(" \t\r") - a + 1);
            return true;
        }
        return false;
    };
    if (!next()) throw parse_error("line 1: missing header");
    if (line.rfind("n=", 0) != 0)
        throw parse_error("line " + std::to_string(lineno) + ": expected n=<int>");
    int n;
    try {
        size_t pos;
        n = std::stoi(line.substr(2), &pos);
        if (pos != line.size() - 2) throw std::invalid_argument("");
    } catch (...) {
        throw parse_error("line " + std::to_string(lineno) + ": bad n");
    }
    if (n < 0) throw parse_error("line " + std::to_string(lineno) + ": negative n");
    ColoredGraph g(n);
    while (next()) {
        std::istringstream ss(line);
        long long u, v;
        std::string lab, extra;
        if (!(ss >> u >> v >> lab) || (ss >> extra))
            throw parse_error("line " + std::to_string(lineno) + ": expected '<u> <v> <color>'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": loop");
        ColorSet cs;
        try {
            cs = ColorSet::parse(lab);
        } catch (const parse_error&) {
            throw parse_error("line " + std::to_string(lineno) + ": bad color label '" + lab + "'");
        }
        try {
            g.add_edge(int(u), int(v), cs);
        } catch (const precondition_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

inline ColoredGraph load_graph_text(const std::string& text) {
    std::istringstream ss(text);
    return load_graph(ss);
}

inline std::string save_graph(const ColoredGraph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << "\n";
    for (auto& [u, v, cs] : g.edge_list()) out << u << " " << v << " " << cs.str() << "\n";
    return out.str();
}

struct DegreeReport {
    int n = 0;
    bool empty = false;  // n == 0
    int delta_total = 0;
    int delta_red = 0;
    int delta_blue = 0;
    // per vertex: total (bicolored edges counted once), red, blue
    std::vector<std::array<int, 3>> per_vertex;
};

inline DegreeReport degree_report(const ColoredGraph& g) {
    DegreeReport r;
    r.n = g.n();
    r.empty = g.n() == 0;
    if (r.empty) return r;
    r.delta_total = g.n();
    r.delta_red = g.n();
    r.delta_blue = g.n();
    for (int v = 0; v < g.n(); ++v) {
        int t = g.total_deg(v), dr = g.deg(v, Color::Red), db = g.deg(v, Color::Blue);
        r.per_vertex.push_back({t, dr, db});
        r.delta_total = std::min(r.delta_total, t);
        r.delta_red = std::min(r.delta_red, dr);
        r.delta_blue = std::min(r.delta_blue, db);
    }
    return r;
}

// 64-bit FNV-1a of the canonical text form; the oracle cache key.
inline uint64_t graph_hash(const ColoredGraph& g) {
    uint64_t h = 14695981039346656037ull;
    for (char c : save_graph(g)) {
        h ^= uint8_t(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace mono

#endif
