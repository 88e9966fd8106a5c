#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linforest/canonical.hpp"
#include "linforest/cliques.hpp"
#include "linforest/enumerate.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"
#include "linforest/paths.hpp"

namespace linf {

struct ExtremalRecord {
    LinearForest forest;
    int n = 0;
    int s = 0;
    BigInt value;
    std::vector<std::string> extremal_graph6;  // all maximizers up to isomorphism
    std::optional<BigInt> formula_value;
    std::optional<long long> threshold;
    std::optional<bool> agrees;  // set only when n >= threshold
};

namespace detail {

// Maximize N_s over F-free graphs on n vertices by breadth-first canonical
// expansion. Only edge-maximal F-free graphs are scored; N_s is monotone
// under edge addition, so the maximum is unaffected.
inline void extremal_scan(int n, int s, const LinearForest& f, std::uint64_t budget,
                          BigInt& best, std::vector<std::string>& maximizers) {
    std::uint64_t nodes = 0;
    auto spend = [&] {
        if (++nodes > budget) throw budget_exceeded("extremal search budget exceeded");
    };
    best = -1;
    std::set<std::string> max_certs;
    auto score = [&](const Graph& g, const std::string& cert) {
        BigInt v = count_cliques(g, s);
        if (v > best) {
            best = v;
            max_certs.clear();
        }
        if (v == best) max_certs.insert(cert);
    };
    std::set<std::string> level{canonical_form(Graph(n)).bytes};
    while (!level.empty()) {
        std::set<std::string> next;
        for (const auto& cert : level) {
            Graph g = graph_from_certificate(cert);
            bool maximal = true;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    spend();
                    GraphBuilder b(g);
                    b.add_edge(u, v);
                    Graph child = b.build();
                    if (!is_forest_free(child, f)) continue;
                    maximal = false;
                    next.insert(canonical_form(child).bytes);
                }
            if (maximal) score(g, cert);
        }
        level = std::move(next);
    }
    maximizers.assign(max_certs.begin(), max_certs.end());
}

}  // namespace detail

inline ExtremalRecord brute_force_ex(int n, int s, const LinearForest& f,
                                     std::uint64_t budget = default_enum_budget) {
    if (!is_forest_free(Graph(n), f))
        throw std::invalid_argument("the empty graph already contains F; no F-free graph exists");
    ExtremalRecord rec{f, n, s, 0, {}, std::nullopt, std::nullopt, std::nullopt};
    std::vector<std::string> maximizers;
    detail::extremal_scan(n, s, f, budget, rec.value, maximizers);
    for (const auto& cert : maximizers)
        rec.extremal_graph6.push_back(to_graph6(graph_from_certificate(cert)));
    return rec;
}

// Exact ex(n,K_s,P_l) by the same search with a single-path forbidden pattern.
inline BigInt brute_force_path_ex(int n, int s, int ell,
                                  std::uint64_t budget = default_enum_budget) {
    if (ell < 2) throw std::invalid_argument("brute_force_path_ex needs ell >= 2");
    LinearForest f({ell});
    BigInt best;
    std::vector<std::string> maximizers;
    detail::extremal_scan(n, s, f, budget, best, maximizers);
    return best;
}

// Per-n reconciliation of brute force against the asserted closed form, with
// the exact threshold. Rows below threshold are informational (agrees unset).
inline std::vector<ExtremalRecord> reconcile(int n_lo, int n_hi, int s, const LinearForest& f,
                                             std::uint64_t budget = default_enum_budget) {
    f.require_theorem_valid();
    std::vector<ExtremalRecord> out;
    const long long thr = threshold_n(f, s);
    for (int n = n_lo; n <= n_hi; ++n) {
        ExtremalRecord rec = brute_force_ex(n, s, f, budget);
        rec.threshold = thr;
        if (n >= f.delta_f() + 2) {
            BigInt path_ex = brute_force_path_ex(n, s, f.orders()[0], budget);
            rec.formula_value = theorem_value(f, n, s, path_ex);
            if (n >= thr) rec.agrees = (rec.value == *rec.formula_value);
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace linf
