#pragma once

#include <vector>

#include "linforest/enumerate.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"
#include "linforest/paths.hpp"

namespace linf {

// Frozen statements of the two containment dichotomies over valid forests
// (k >= 2, no P_3). "Free" means P_{2d+1} u P_d (resp. P_{2d+1} u P_{d+1})
// does not contain F.

inline bool lemma7_predicts_free(const LinearForest& f) {
    const auto& o = f.orders();
    if (o == std::vector<int>{5, 5, 5, 5, 5}) return true;                       // 5P_5
    if (o.size() == 2 && o[0] == o[1]) return true;                              // 2P_l
    if (o.size() == 2 && o[0] == o[1] + 1) return true;                          // P_{l+1} u P_l
    if (o.size() == 2 && o[0] == o[1] + 2 && o[1] % 2 == 1) return true;         // P_{l+2} u P_l, l odd
    if (o.size() == 3 && o[2] == 2 && o[0] == o[1] && o[0] % 2 == 1) return true;  // 2P_l u P_2, l odd
    return false;
}

inline bool lemma8_predicts_free(const LinearForest& f) {
    const auto& o = f.orders();
    return o.size() == 2 && o[0] == o[1] && o[0] % 2 == 1;  // 2P_l, l odd
}

struct DichotomyRow {
    LinearForest forest;
    bool observed_free;
    bool predicted_free;
};

struct DichotomyReport {
    std::vector<DichotomyRow> rows;
    int mismatches = 0;
};

namespace detail {

template <typename Hosts, typename Predict>
DichotomyReport containment_sweep(int max_total, Hosts hosts, Predict predict) {
    DichotomyReport report;
    for (const LinearForest& f : enumerate_forests(max_total, /*theorem_only=*/true)) {
        bool free = !forest_fits_in_paths(hosts(f), f);
        bool predicted = predict(f);
        report.rows.push_back({f, free, predicted});
        if (free != predicted) ++report.mismatches;
    }
    return report;
}

}  // namespace detail

inline DichotomyReport lemma7_sweep(int max_total) {
    return detail::containment_sweep(
        max_total,
        [](const LinearForest& f) {
            int d = f.delta_f();
            return std::vector<int>{2 * d + 1, d};
        },
        lemma7_predicts_free);
}

inline DichotomyReport lemma8_sweep(int max_total) {
    return detail::containment_sweep(
        max_total,
        [](const LinearForest& f) {
            int d = f.delta_f();
            return std::vector<int>{2 * d + 1, d + 1};
        },
        lemma8_predicts_free);
}

// The positive half of the second dichotomy: P_{2d+1} u P_{d+2} contains
// every valid F. Returns the number of violations (expected zero).
inline int lemma8_positive_sweep(int max_total) {
    int violations = 0;
    for (const LinearForest& f : enumerate_forests(max_total, /*theorem_only=*/true)) {
        int d = f.delta_f();
        if (!forest_fits_in_paths({2 * d + 1, d + 2}, f)) ++violations;
    }
    return violations;
}

// Dirac: p(G) >= min(|G|, 2 delta + 1) over all connected graphs with at most
// max_n vertices. Returns the number of violations.
inline int dirac_sweep(int max_n) {
    int violations = 0;
    for (int n = 1; n <= max_n; ++n) {
        EnumFilter filter;
        filter.connected = true;
        enumerate_graphs(n, filter, [&](const Graph& g) {
            int bound = std::min(g.order(), 2 * g.min_degree() + 1);
            if (longest_path_order(g) < bound) ++violations;
        });
    }
    return violations;
}

// Chvatal-Erdos: alpha(G) <= kappa(G) + 1 implies a hamiltonian path, over
// all graphs with at most max_n vertices. Returns the number of violations.
inline int chvatal_erdos_sweep(int max_n) {
    int violations = 0;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            if (has_hamiltonian_path(g)) return;
            // no hamiltonian path: the hypothesis alpha <= kappa + 1 must fail
            if (kappa_at_least(g, independence_number(g) - 1)) ++violations;
        });
    }
    return violations;
}

}  // namespace linf
