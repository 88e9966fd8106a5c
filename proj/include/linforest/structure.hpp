#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linforest/cliques.hpp"
#include "linforest/construct.hpp"
#include "linforest/enumerate.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"
#include "linforest/paths.hpp"

namespace linf {

enum class FamilyCase {
    SubgraphOfGf,
    ApexCliques,
    ApexMixed,
    ThreeP5Exception,
    HypothesisFail,
    Unclassified,
};

inline const char* family_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::SubgraphOfGf: return "SUBGRAPH_OF_GF";
        case FamilyCase::ApexCliques: return "APEX_CLIQUES";
        case FamilyCase::ApexMixed: return "APEX_MIXED";
        case FamilyCase::ThreeP5Exception: return "THREE_P5_EXCEPTION";
        case FamilyCase::HypothesisFail: return "HYPOTHESIS_FAIL";
        case FamilyCase::Unclassified: return "UNCLASSIFIED";
    }
    return "?";
}

struct ClassificationVerdict {
    FamilyCase family = FamilyCase::Unclassified;
    std::string detail;
    std::optional<Mask> covering_set;  // SUBGRAPH_OF_GF witness
    std::optional<int> apex;           // APEX_* witness
};

namespace detail {

// Branching search for S of size at most k covering all but at most `slack`
// edges. Branches on an endpoint of an uncovered edge; the slack branch
// designates the edge as the one permitted residual.
inline bool almost_cover(const Graph& g, Mask removed, int k, int slack, Mask& out) {
    int eu = -1, ev = -1;
    for (int u = 0; u < g.order() && eu < 0; ++u) {
        if ((removed >> u) & 1) continue;
        Mask nb = g.neighbors(u) & ~removed & ~((Mask{2} << u) - 1);
        if (nb) {
            eu = u;
            ev = lowest_bit(nb);
        }
    }
    if (eu < 0) {
        out = removed & g.vertices();
        return true;
    }
    // count remaining edges once cheap: if within slack, done
    int remaining = g.without(removed).edge_count();
    if (remaining <= slack) {
        out = removed & g.vertices();
        return true;
    }
    if (k == 0 && slack == 0) return false;
    if (k > 0) {
        if (almost_cover(g, removed | (Mask{1} << eu), k - 1, slack, out)) return true;
        if (almost_cover(g, removed | (Mask{1} << ev), k - 1, slack, out)) return true;
    }
    if (slack > 0) {
        // leave edge (eu,ev) uncovered: remove it and continue with less slack
        GraphBuilder b(g);
        b.remove_edge(eu, ev);
        if (almost_cover(b.build(), removed, k, slack - 1, out)) return true;
    }
    return false;
}

}  // namespace detail

// A set S with |S| = delta_F whose removal leaves at most one edge when all
// components of F are odd, and no edge otherwise; nullopt if none exists.
inline std::optional<Mask> is_subgraph_of_gf(const Graph& g, const LinearForest& f) {
    const int d = f.delta_f();
    if (g.order() < d) return std::nullopt;
    const int slack = f.all_odd() ? 1 : 0;
    Mask cover = 0;
    if (!detail::almost_cover(g, 0, d, slack, cover)) return std::nullopt;
    // pad to exactly delta_F vertices; removing more only removes edges
    for (int v = 0; v < g.order() && popcount(cover) < d; ++v) cover |= Mask{1} << v;
    return cover;
}

namespace detail {

// F shapes of Theorem-6 case 1, returning the clique order parameter l.
inline std::optional<int> apex_clique_ell(const LinearForest& f) {
    const auto& o = f.orders();
    if (o.size() == 2) {
        int l = o[1];
        if (o[0] == l && l % 2 == 0) return l;                       // 2P_l, l even
        if (o[0] == l + 1) return l;                                 // P_{l+1} u P_l
        if (o[0] == l + 2 && l % 2 == 1) return l;                   // P_{l+2} u P_l, l odd
    }
    if (o.size() == 3 && o[2] == 2 && o[0] == o[1] && o[0] % 2 == 1) return o[0];  // 2P_l u P_2, l odd
    return std::nullopt;
}

inline std::optional<int> find_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return v;
    return std::nullopt;
}

inline bool is_disjoint_cliques_of_order(const Graph& g, int block) {
    for (Mask c : g.components()) {
        if (popcount(c) != block) return false;
        Graph h = g.induced(c);
        if (h.edge_count() != block * (block - 1) / 2) return false;
    }
    return true;
}

// Exact partition of the component orders into groups summing to l-1 or l-2.
inline bool bin_pack_components(std::vector<int> orders, int ell) {
    for (int o : orders)
        if (o > ell - 1) return false;
    std::sort(orders.begin(), orders.end(), std::greater<int>());
    std::vector<int> open;  // remaining room of open bins
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == orders.size()) {
            for (int room : open)
                if (room != 0) return false;
            return true;
        }
        int last = -1;
        for (std::size_t b = 0; b < open.size(); ++b) {
            if (open[b] < orders[idx] || open[b] == last) continue;
            last = open[b];
            open[b] -= orders[idx];
            if (self(self, idx + 1)) return true;
            open[b] += orders[idx];
        }
        for (int cap : {ell - 1, ell - 2}) {
            if (orders[idx] > cap) continue;
            open.push_back(cap - orders[idx]);
            if (self(self, idx + 1)) return true;
            open.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

// Weaker case-2 check reported alongside the packing interpretation: some
// apex whose removal leaves only components of order at most l-1.
inline bool has_apex_with_small_components(const Graph& g, int ell) {
    for (int v = 0; v < g.order(); ++v) {
        bool ok = true;
        for (Mask c : g.without(Mask{1} << v).components())
            if (popcount(c) > ell - 1) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline ClassificationVerdict classify(const Graph& g, const LinearForest& f) {
    f.require_theorem_valid();
    const int n = g.order();
    if (!g.is_connected()) return {FamilyCase::HypothesisFail, "graph is disconnected", {}, {}};
    if (g.min_degree() < f.delta_f())
        return {FamilyCase::HypothesisFail, "min degree below delta_F", {}, {}};
    if (n < 2 * f.total_order())
        return {FamilyCase::HypothesisFail, "order below 2|F|", {}, {}};
    if (!is_forest_free(g, f)) return {FamilyCase::HypothesisFail, "graph contains F", {}, {}};

    if (auto cover = is_subgraph_of_gf(g, f))
        return {FamilyCase::SubgraphOfGf, "", cover, {}};

    if (auto ell = detail::apex_clique_ell(f)) {
        if (auto apex = detail::find_universal_vertex(g)) {
            Graph rest = g.without(Mask{1} << *apex);
            if (detail::is_disjoint_cliques_of_order(rest, *ell - 1))
                return {FamilyCase::ApexCliques, "", {}, apex};
        }
    }

    if (is_two_odd_paths(f)) {
        const int ell = f.orders()[0];
        for (int v = 0; v < n; ++v) {
            std::vector<int> orders;
            for (Mask c : g.without(Mask{1} << v).components()) orders.push_back(popcount(c));
            if (detail::bin_pack_components(orders, ell))
                return {FamilyCase::ApexMixed, "", {}, v};
        }
    }

    if (f.orders() == std::vector<int>{5, 5, 5}) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Mask pair = (Mask{1} << a) | (Mask{1} << b);
                bool universal = true;
                for (int v = 0; v < n && universal; ++v)
                    if (v != a && v != b && (!g.has_edge(a, v) || !g.has_edge(b, v))) universal = false;
                if (!universal) continue;
                if (detail::is_disjoint_cliques_of_order(g.without(pair), 4))
                    return {FamilyCase::ThreeP5Exception, g.has_edge(a, b) ? "K2 base" : "E2 base", {}, a};
            }
    }

    return {FamilyCase::Unclassified, "no family matched", {}, {}};
}

struct AuditReport {
    int total = 0;
    std::map<FamilyCase, int> counts;
    std::vector<std::string> unclassified_graph6;
};

// Runs classify over every connected F-free graph with min degree >= delta_F
// on n vertices; any UNCLASSIFIED member is a counterexample candidate.
inline AuditReport audit_theorem1(const LinearForest& f, int n,
                                  std::uint64_t budget = default_enum_budget) {
    AuditReport report;
    EnumFilter filter;
    filter.connected = true;
    filter.min_degree = f.delta_f();
    filter.f_free = f;
    enumerate_graphs(
        n, filter,
        [&](const Graph& g) {
            ++report.total;
            auto verdict = classify(g, f);
            ++report.counts[verdict.family];
            if (verdict.family == FamilyCase::Unclassified)
                report.unclassified_graph6.push_back(to_graph6(g));
        },
        budget);
    return report;
}

}  // namespace linf
