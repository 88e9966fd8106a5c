#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "linforest/forest.hpp"
#include "linforest/graph.hpp"

namespace linf {

namespace detail {

// endpoints[m] has bit v set when G[m] has a hamiltonian path ending at v.
inline std::vector<Mask> path_endpoint_table(const Graph& g) {
    const int n = g.order();
    std::vector<Mask> table(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) table[Mask{1} << v] = Mask{1} << v;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        if (popcount(m) < 2) continue;
        Mask ends = 0;
        for (Mask rest = m; rest; rest &= rest - 1) {
            int v = lowest_bit(rest);
            if (table[m & ~(Mask{1} << v)] & g.neighbors(v)) ends |= Mask{1} << v;
        }
        table[m] = ends;
    }
    return table;
}

inline std::vector<int> reconstruct_path(const Graph& g, const std::vector<Mask>& table, Mask m, int end) {
    std::vector<int> path;
    while (m) {
        path.push_back(end);
        Mask prev_mask = m & ~(Mask{1} << end);
        if (!prev_mask) break;
        Mask cands = table[prev_mask] & g.neighbors(end);
        end = lowest_bit(cands);
        m = prev_mask;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

constexpr int longest_path_guard = 24;
constexpr int dominating_path_guard = 20;

// p(G): order of a longest path, via the subset/endpoint DP per component.
inline int longest_path_order(const Graph& g) {
    if (g.order() > longest_path_guard)
        throw size_guard_error("longest_path_order limited to 24 vertices");
    int best = 0;
    for (Mask comp : g.components()) {
        Graph h = g.induced(comp);
        auto table = detail::path_endpoint_table(h);
        for (Mask m = 1; m < (Mask{1} << h.order()); ++m)
            if (table[m]) best = std::max(best, popcount(m));
    }
    return best;
}

inline bool has_hamiltonian_path(const Graph& g) {
    if (g.order() > longest_path_guard)
        throw size_guard_error("has_hamiltonian_path limited to 24 vertices");
    if (!g.is_connected()) return g.order() <= 1;
    return longest_path_order(g) == g.order();
}

// A path such that every vertex off it has all its neighbors on it, or
// nullopt. Found by scanning path-supporting vertex subsets.
inline std::optional<std::vector<int>> strong_dominating_path(const Graph& g) {
    const int n = g.order();
    if (n > dominating_path_guard)
        throw size_guard_error("strong_dominating_path limited to 20 vertices");
    if (n == 0) return std::vector<int>{};
    auto table = detail::path_endpoint_table(g);
    // closed neighborhoods let us test "all neighbors on the path" per mask
    std::optional<std::vector<int>> best;
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        if (!table[m]) continue;
        bool dominating = true;
        for (Mask rest = g.vertices() & ~m; rest && dominating; rest &= rest - 1)
            if (g.neighbors(lowest_bit(rest)) & ~m) dominating = false;
        if (!dominating) continue;
        auto path = detail::reconstruct_path(g, table, m, lowest_bit(table[m]));
        if (!best || path.size() < best->size()) best = path;
    }
    return best;
}

// Vertex-disjoint paths witnessing F inside a host graph.
struct ForestWitness {
    std::vector<std::vector<int>> paths;

    bool validate(const Graph& g, const LinearForest& f) const {
        if (paths.size() != f.orders().size()) return false;
        Mask used = 0;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& p = paths[i];
            if (static_cast<int>(p.size()) != f.orders()[i]) return false;
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (p[j] < 0 || p[j] >= g.order()) return false;
                Mask bit = Mask{1} << p[j];
                if (used & bit) return false;
                used |= bit;
                if (j && !g.has_edge(p[j - 1], p[j])) return false;
            }
        }
        return true;
    }
};

namespace detail {

// Assign forest parts to path-shaped hosts: a host of order m holds a set of
// parts iff their total order is at most m (disjoint consecutive segments).
inline bool pack_parts_into_hosts(const std::vector<int>& parts, std::size_t idx,
                                  std::vector<int>& room, std::vector<int>& assignment) {
    if (idx == parts.size()) return true;
    int last_room = -1;
    for (std::size_t h = 0; h < room.size(); ++h) {
        if (room[h] < parts[idx] || room[h] == last_room) continue;
        last_room = room[h];
        room[h] -= parts[idx];
        assignment[idx] = static_cast<int>(h);
        if (pack_parts_into_hosts(parts, idx + 1, room, assignment)) return true;
        room[h] += parts[idx];
    }
    return false;
}

}  // namespace detail

// Closed-form containment for hosts that are disjoint paths.
inline bool forest_fits_in_paths(const std::vector<int>& host_orders, const LinearForest& f) {
    std::vector<int> room = host_orders;
    std::vector<int> assignment(f.orders().size());
    return detail::pack_parts_into_hosts(f.orders(), 0, room, assignment);
}

namespace detail {

struct ForestSearch {
    const Graph& g;
    const std::vector<int>& orders;
    Mask free;
    std::vector<std::vector<int>> placed;
    std::vector<int> starts;  // seed vertex per placed path, for symmetry breaking

    explicit ForestSearch(const Graph& graph, const std::vector<int>& ord)
        : g(graph), orders(ord), free(graph.vertices()) {}

    bool extend(std::size_t path_idx, std::vector<int>& current, int need) {
        if (need == 0) {
            placed.push_back(current);
            bool ok = place(path_idx + 1);
            if (!ok) placed.pop_back();
            return ok;
        }
        Mask cands = g.neighbors(current.back()) & free;
        while (cands) {
            int v = lowest_bit(cands);
            cands &= cands - 1;
            free &= ~(Mask{1} << v);
            current.push_back(v);
            if (extend(path_idx, current, need - 1)) return true;
            current.pop_back();
            free |= Mask{1} << v;
        }
        return false;
    }

    bool place(std::size_t path_idx) {
        if (path_idx == orders.size()) return true;
        int remaining_demand = 0, cover_demand = 0;
        for (std::size_t i = path_idx; i < orders.size(); ++i) {
            remaining_demand += orders[i];
            cover_demand += orders[i] / 2;
        }
        if (popcount(free) < remaining_demand) return false;
        // Covering bound. For any vertex set C, an embedded P_l whose p
        // consecutive pairs both avoid C still uses >= floor((l-p)/2)
        // vertices of C, and those pairs are disjoint edges avoiding C, so
        // they total at most the edge count outside C. Walking greedy cover
        // prefixes, infeasibility of every pair budget proves failure.
        {
            Mask rest = free;
            long long edges_out = 0;
            for (Mask m = rest; m; m &= m - 1)
                edges_out += popcount(g.neighbors(lowest_bit(m)) & rest);
            edges_out /= 2;
            int j = 0;  // prefix size |C|
            auto infeasible = [&] {
                long long b = edges_out;
                long long gain = 0, extra_cap = 0;
                for (std::size_t i = path_idx; i < orders.size(); ++i) {
                    int cap = orders[i] / 2;
                    if (orders[i] % 2 == 0 && cap > 0 && b >= 1) {
                        ++gain;
                        --b;
                        --cap;
                    }
                    extra_cap += cap;
                }
                gain += std::min(extra_cap, b / 2);
                return j + gain < cover_demand;
            };
            while (j < cover_demand) {
                if (infeasible()) return false;
                int pick = -1, best_deg = 0;
                for (Mask m = rest; m; m &= m - 1) {
                    int v = lowest_bit(m);
                    int deg = popcount(g.neighbors(v) & rest);
                    if (deg > best_deg) {
                        best_deg = deg;
                        pick = v;
                    }
                }
                if (pick < 0) break;  // no edges left; infeasible() was final
                rest &= ~(Mask{1} << pick);
                edges_out -= best_deg;
                ++j;
            }
        }

        const int len = orders[path_idx];
        // a path lives inside one component of the free region
        std::vector<Mask> comps;
        {
            Mask rest = free;
            while (rest) {
                int v = lowest_bit(rest);
                Mask seen = Mask{1} << v, frontier = seen;
                while (frontier) {
                    Mask next = 0;
                    while (frontier) {
                        int u = lowest_bit(frontier);
                        frontier &= frontier - 1;
                        next |= g.neighbors(u) & free & ~seen;
                    }
                    seen |= next;
                    frontier = next;
                }
                comps.push_back(seen);
                rest &= ~seen;
            }
        }
        // identical path lengths: force nondecreasing seed vertices
        int min_seed = 0;
        if (path_idx > 0 && orders[path_idx] == orders[path_idx - 1]) min_seed = starts[path_idx - 1] + 1;
        std::vector<int> current;
        for (Mask cm : comps) {
            if (popcount(cm) < len) continue;
            for (Mask seeds = cm; seeds; seeds &= seeds - 1) {
                int v = lowest_bit(seeds);
                if (v < min_seed) continue;
                free &= ~(Mask{1} << v);
                current.assign(1, v);
                starts.push_back(v);
                if (extend(path_idx, current, len - 1)) return true;
                starts.pop_back();
                free |= Mask{1} << v;
            }
        }
        return false;
    }
};

}  // namespace detail

// Decides F subseteq G (paths need not be induced) and returns a witness.
// Search places the longest path first, seeding at the lowest free vertex of
// each free-region component, with demand and component-size pruning.
inline std::optional<ForestWitness> contains_linear_forest(const Graph& g, const LinearForest& f) {
    if (g.order() < f.total_order()) return std::nullopt;
    // fast path: host is a disjoint union of paths
    bool host_is_paths = true;
    for (int v = 0; v < g.order() && host_is_paths; ++v)
        if (g.degree(v) > 2) host_is_paths = false;
    if (host_is_paths) {
        std::vector<Mask> comps = g.components();
        std::vector<int> host_orders;
        std::vector<std::vector<int>> host_paths;
        for (Mask c : comps) {
            if (host_is_paths) {
                Graph h = g.induced(c);
                if (h.edge_count() != h.order() - 1) {
                    host_is_paths = false;  // a cycle component
                    break;
                }
            }
        }
        if (host_is_paths) {
            for (Mask c : comps) {
                // walk the path from one endpoint (or the single vertex)
                std::vector<int> seq;
                int start = -1;
                for (Mask m = c; m; m &= m - 1) {
                    int v = lowest_bit(m);
                    if (popcount(g.neighbors(v) & c) <= 1) {
                        start = v;
                        break;
                    }
                }
                Mask seen = 0;
                int v = start;
                while (v >= 0) {
                    seq.push_back(v);
                    seen |= Mask{1} << v;
                    Mask nxt = g.neighbors(v) & c & ~seen;
                    v = nxt ? lowest_bit(nxt) : -1;
                }
                host_orders.push_back(static_cast<int>(seq.size()));
                host_paths.push_back(std::move(seq));
            }
            std::vector<int> room = host_orders;
            std::vector<int> assignment(f.orders().size());
            if (!detail::pack_parts_into_hosts(f.orders(), 0, room, assignment)) return std::nullopt;
            ForestWitness w;
            std::vector<int> used(host_orders.size(), 0);
            for (std::size_t i = 0; i < f.orders().size(); ++i) {
                int h = assignment[i];
                const auto& hp = host_paths[h];
                w.paths.emplace_back(hp.begin() + used[h], hp.begin() + used[h] + f.orders()[i]);
                used[h] += f.orders()[i];
            }
            return w;
        }
    }
    detail::ForestSearch search(g, f.orders());
    if (search.place(0)) return ForestWitness{search.placed};
    return std::nullopt;
}

inline bool is_forest_free(const Graph& g, const LinearForest& f) {
    return !contains_linear_forest(g, f).has_value();
}

}  // namespace linf
