#pragma once

// Canonical JSON views of the public types. Key order is fixed, vertex lists
// are ascending, and fractions print as "num/den", so identical values always
// serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "exact.hpp"
#include "expansion.hpp"
#include "matching.hpp"
#include "pipeline.hpp"
#include "regularity.hpp"
#include "robust.hpp"

namespace mono {

using ojson = nlohmann::ordered_json;

inline std::string frac_json(Frac f) {
    return std::to_string(f.num) + "/" + std::to_string(f.den);
}

inline ojson vs_json(const VertexSet& s) { return ojson(s.to_vector()); }

inline VertexSet vs_from_json(const ojson& j, int n) {
    VertexSet s(n);
    for (const auto& v : j) {
        int x = v.get<int>();
        if (x < 0 || x >= n)
            throw parse_error("vertex " + std::to_string(x) + " out of range 0.." +
                              std::to_string(n - 1));
        s.add(x);
    }
    return s;
}

inline ojson graph_json(const ColoredGraph& g) {
    ojson edges = ojson::array();
    for (int u = 0; u < g.n(); ++u)
        (g.red().nbrs(u) | g.blue().nbrs(u)).for_each([&](int v) {
            if (v <= u) return;
            bool r = g.red().has_edge(u, v), b = g.blue().has_edge(u, v);
            edges.push_back(ojson::array({u, v, r && b ? "RB" : (r ? "R" : "B")}));
        });
    return ojson{{"n", g.n()}, {"edges", std::move(edges)}};
}

inline ColoredGraph graph_from_json(const ojson& j) {
    ColoredGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        std::string c = e.at(2).get<std::string>();
        ColorSet cs{c == "R" || c == "RB", c == "B" || c == "RB"};
        if (!cs.red && !cs.blue) throw parse_error("edge color must be R, B, or RB");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), cs);
    }
    return g;
}

inline ojson partition_json(const CyclePartition& p) {
    return ojson{{"red", p.red_cycle}, {"blue", p.blue_cycle}};
}

inline CyclePartition partition_from_json(const ojson& j) {
    CyclePartition p;
    p.red_cycle = j.at("red").get<std::vector<int>>();
    p.blue_cycle = j.at("blue").get<std::vector<int>>();
    return p;
}

inline ojson verdict_json(const VerifyResult& r) {
    ojson j{{"accept", r.ok}};
    if (!r.ok) {
        std::string reason;
        for (const auto& s : r.reasons) reason += (reason.empty() ? "" : "; ") + s;
        j["reason"] = reason;
    }
    return j;
}

inline ojson cut_json(const Cut& c) {
    return ojson{{"x", vs_json(c.x)},
                 {"y", vs_json(c.y)},
                 {"crossing", c.crossing},
                 {"ratio", frac_json(c.ratio)}};
}

inline ojson cut_search_json(const CutSearch& cs) {
    return ojson{{"mode", cs.mode == CutMode::Exact ? "exact" : "heuristic"},
                 {"conclusive", cs.conclusive},
                 {"cut", cs.cut ? cut_json(*cs.cut) : ojson(nullptr)}};
}

inline ojson certificate_json(const RobustCertificate& c) {
    return ojson{{"eta", frac_json(c.eta)},
                 {"alpha", frac_json(c.alpha)},
                 {"ambient_n", c.ambient_n},
                 {"min_degree_ok", c.min_degree_ok},
                 {"worst_vertex", c.worst_vertex},
                 {"worst_degree", c.worst_degree},
                 {"cut_search", cut_search_json(c.cut_search)},
                 {"robust", c.robust},
                 {"conclusive", c.conclusive}};
}

inline ojson cascade_json(const Cascade& c) {
    ojson layers = ojson::array();
    for (const auto& l : c.layers) layers.push_back(vs_json(l));
    return ojson{{"root", c.root},
                 {"threshold", frac_json(c.threshold)},
                 {"layers", std::move(layers)},
                 {"spanning", c.spanning},
                 {"achieved_floor", c.achieved_floor}};
}

inline ojson matching_json(const Matching& m) {
    ojson edges = ojson::array(), colors = ojson::array();
    for (auto [u, v] : m.edges) edges.push_back(ojson::array({u, v}));
    for (Color c : m.colors) colors.push_back(color_name(c));
    return ojson{{"edges", std::move(edges)}, {"colors", std::move(colors)}};
}

inline ojson multipartite_json(const MultipartiteMatching& m) {
    return ojson{{"matching", matching_json(m.matching)}, {"connected", m.connected}};
}

inline ojson reduced_json(const ReducedGraph& r) {
    ojson pairs = ojson::array();
    int k = r.gamma.n();
    auto opt = [](const std::optional<bool>& b) { return b ? ojson(*b) : ojson(nullptr); };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const PairReport& p = r.pairs[i][j];
            pairs.push_back(ojson{{"i", i},
                                  {"j", j},
                                  {"red", frac_json(p.red)},
                                  {"blue", frac_json(p.blue)},
                                  {"total", frac_json(p.total)},
                                  {"regular_red", opt(p.regular_red)},
                                  {"regular_blue", opt(p.regular_blue)}});
        }
    return ojson{{"gamma", graph_json(r.gamma)},
                 {"eps", frac_json(r.eps)},
                 {"d", frac_json(r.d)},
                 {"pairs", std::move(pairs)}};
}

inline ClusterPartition clusters_from_json(const ojson& j, int n) {
    ClusterPartition p;
    p.v0 = j.contains("v0") ? vs_from_json(j.at("v0"), n) : VertexSet(n);
    for (const auto& c : j.at("clusters")) p.clusters.push_back(vs_from_json(c, n));
    if (j.contains("origin"))
        p.origin = j.at("origin").get<std::vector<int>>();
    else
        for (size_t i = 0; i < p.clusters.size(); ++i) p.origin.push_back(int(i));
    return p;
}

inline Frac frac_from_json(const ojson& j) {
    if (j.is_string()) return Frac::parse(j.get<std::string>());
    if (j.is_number_integer()) return Frac(j.get<long long>());
    return Frac::parse(j.dump());
}

// Partial overrides on top of the defaults; unknown keys are rejected so a
// typo cannot silently fall back to a default.
inline PipelineConfig config_from_json(const ojson& j) {
    PipelineConfig cfg;
    for (const auto& [key, val] : j.items()) {
        if (key == "gamma") cfg.gamma = frac_from_json(val);
        else if (key == "eta") cfg.eta = frac_from_json(val);
        else if (key == "alpha") cfg.alpha = frac_from_json(val);
        else if (key == "cut_mode") {
            std::string m = val.get<std::string>();
            if (m != "exact" && m != "heuristic")
                throw parse_error("config: cut_mode must be exact or heuristic");
            cfg.cut_mode = m == "exact" ? CutMode::Exact : CutMode::Heuristic;
        } else if (key == "exact_cap") cfg.exact_cap = val.get<int>();
        else if (key == "exact_fallback") cfg.exact_fallback = val.get<bool>();
        else if (key == "rotation_budget") cfg.rotation_budget = val.get<int>();
        else if (key == "absorb") {
            for (const auto& [ak, av] : val.items()) {
                if (ak == "ell") cfg.absorb.ell = av.get<int>();
                else if (ak == "gadgets") cfg.absorb.gadgets = av.get<int>();
                else if (ak == "coverage_floor") cfg.absorb.coverage_floor = av.get<int>();
                else if (ak == "connector_alpha") cfg.absorb.connector_alpha = frac_from_json(av);
                else if (ak == "connector_internals_max")
                    cfg.absorb.connector_internals_max = av.get<int>();
                else if (ak == "assembly_retries") cfg.absorb.assembly_retries = av.get<int>();
                else if (ak == "universe_cap") cfg.absorb.universe_cap = av.get<long long>();
                else if (ak == "reserve") cfg.absorb.reserve = av.get<int>();
                else throw parse_error("config: unknown absorb key " + ak);
            }
        } else throw parse_error("config: unknown key " + key);
    }
    return cfg;
}

}  // namespace mono
