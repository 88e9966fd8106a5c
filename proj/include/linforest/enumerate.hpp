#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linforest/canonical.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"
#include "linforest/paths.hpp"

namespace linf {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Conjunctive structural filters for the generator.
struct EnumFilter {
    std::optional<bool> connected;
    std::optional<int> min_degree;
    std::optional<LinearForest> f_free;
    std::optional<int> max_edges;
};

constexpr int unfiltered_enum_guard = 10;
constexpr std::uint64_t default_enum_budget = 200'000'000;

// Isomorph-free generation of all graphs on n labeled-then-canonicalized
// vertices: breadth-first over edge counts, expanding each isomorphism class
// once and pruning any intermediate that already contains the forbidden
// forest (containment is monotone under edge addition). The sink sees one
// canonical representative per class passing the filter, in deterministic
// (edge count, certificate) order.
inline void enumerate_graphs(int n, const EnumFilter& filter,
                             const std::function<void(const Graph&)>& sink,
                             std::uint64_t budget = default_enum_budget) {
    if (n < 0 || n > Graph::max_order) throw std::invalid_argument("enumerate_graphs order out of range");
    if (!filter.f_free && !filter.max_edges && n > unfiltered_enum_guard)
        throw std::invalid_argument("unfiltered exhaustion limited to n <= 10");
    std::uint64_t nodes = 0;
    auto spend = [&](std::uint64_t cost) {
        nodes += cost;
        if (nodes > budget) throw budget_exceeded("enumeration work budget exceeded");
    };

    auto passes = [&](const Graph& g) {
        if (filter.connected && g.is_connected() != *filter.connected) return false;
        if (filter.min_degree && g.min_degree() < *filter.min_degree) return false;
        return true;
    };

    const int max_edges = filter.max_edges ? *filter.max_edges : n * (n - 1) / 2;
    std::set<std::string> level{canonical_form(Graph(n)).bytes};
    int edges = 0;
    while (!level.empty()) {
        for (const auto& cert : level) {
            Graph g = graph_from_certificate(cert);
            if (passes(g)) sink(g);
        }
        if (edges == max_edges) break;
        std::set<std::string> next;
        for (const auto& cert : level) {
            Graph g = graph_from_certificate(cert);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    spend(1);
                    GraphBuilder b(g);
                    b.add_edge(u, v);
                    Graph child = b.build();
                    if (filter.f_free && !is_forest_free(child, *filter.f_free)) continue;
                    next.insert(canonical_form(child).bytes);
                }
        }
        level = std::move(next);
        ++edges;
    }
}

inline std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter = {},
                                           std::uint64_t budget = default_enum_budget) {
    std::vector<Graph> out;
    enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); }, budget);
    return out;
}

}  // namespace linf
