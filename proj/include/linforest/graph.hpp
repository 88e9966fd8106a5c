#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linf {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline Mask all_vertices_mask(int n) {
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on at most 64 vertices. Adjacency is one bit row
// per vertex; the value is immutable after construction.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > max_order) throw std::invalid_argument("graph order out of range [0,64]");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int order() const { return n_; }
    Mask vertices() const { return all_vertices_mask(n_); }
    Mask neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return popcount(adj_[check(v)]); }

    bool has_edge(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1; }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
        return twice / 2;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = max_order;
        for (int v = 0; v < n_; ++v) d = std::min(d, popcount(adj_[v]));
        return d;
    }

    // Component containing v, as a vertex mask.
    Mask component_of(int v) const {
        Mask seen = Mask{1} << check(v);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            while (frontier) {
                int u = lowest_bit(frontier);
                frontier &= frontier - 1;
                next |= adj_[u] & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    std::vector<Mask> components() const {
        std::vector<Mask> out;
        Mask rest = vertices();
        while (rest) {
            Mask c = component_of(lowest_bit(rest));
            out.push_back(c);
            rest &= ~c;
        }
        return out;
    }

    bool is_connected() const {
        if (n_ <= 1) return true;
        return popcount(component_of(0)) == n_;
    }

    // Induced subgraph on the vertices of `keep`, relabeled by order-preserving
    // compaction.
    Graph induced(Mask keep) const {
        keep &= vertices();
        Graph g(popcount(keep));
        int new_of[max_order];
        int idx = 0;
        for (Mask m = keep; m; m &= m - 1) new_of[lowest_bit(m)] = idx++;
        for (Mask m = keep; m; m &= m - 1) {
            int v = lowest_bit(m);
            for (Mask nb = adj_[v] & keep; nb; nb &= nb - 1)
                g.adj_[new_of[v]] |= Mask{1} << new_of[lowest_bit(nb)];
        }
        return g;
    }

    Graph without(Mask deleted) const { return induced(vertices() & ~deleted); }

    std::string to_dot(const std::string& name = "G") const {
        std::string out = "graph " + name + " {\n";
        for (int v = 0; v < n_; ++v) out += "  " + std::to_string(v) + ";\n";
        for (int u = 0; u < n_; ++u)
            for (Mask m = adj_[u] & ~((Mask{2} << u) - 1); m; m &= m - 1)
                out += "  " + std::to_string(u) + " -- " + std::to_string(lowest_bit(m)) + ";\n";
        out += "}\n";
        return out;
    }

    friend Graph disjoint_union(const Graph& a, const Graph& b);
    friend Graph join(const Graph& a, const Graph& b);
    friend class GraphBuilder;

private:
    int check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
        return v;
    }

    void add_edge_internal(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u] |= Mask{1} << v;
        adj_[v] |= Mask{1} << u;
    }

    int n_ = 0;
    std::array<Mask, max_order> adj_{};
};

// Mutable adjacency scratch used by generators; sealed into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}
    explicit GraphBuilder(const Graph& g) : g_(g) {}
    void add_edge(int u, int v) { g_.add_edge_internal(u, v); }
    void remove_edge(int u, int v) {
        g_.adj_[u] &= ~(Mask{1} << v);
        g_.adj_[v] &= ~(Mask{1} << u);
    }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int order() const { return g_.order(); }
    Graph build() const { return g_; }

private:
    Graph g_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

inline Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

inline Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    if (n >= 3) b.add_edge(n - 1, 0);
    return b.build();
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::max_order) throw std::invalid_argument("union order exceeds 64");
    Graph g(a.order() + b.order());
    for (int v = 0; v < a.order(); ++v) g.adj_[v] = a.adj_[v];
    for (int v = 0; v < b.order(); ++v) g.adj_[a.order() + v] = b.adj_[v] << a.order();
    return g;
}

inline Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    Mask left = all_vertices_mask(a.order());
    Mask right = g.vertices() & ~left;
    for (Mask m = left; m; m &= m - 1) g.adj_[lowest_bit(m)] |= right;
    for (Mask m = right; m; m &= m - 1) g.adj_[lowest_bit(m)] |= left;
    return g;
}

// Exact maximum independent set size by branch and bound.
inline int independence_number(const Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, Mask cand, int size) -> void {
        if (size + popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        // branch on a vertex of maximum degree within cand
        int pick = -1, pickdeg = -1;
        for (Mask m = cand; m; m &= m - 1) {
            int v = lowest_bit(m);
            int d = popcount(g.neighbors(v) & cand);
            if (d > pickdeg) {
                pickdeg = d;
                pick = v;
            }
        }
        if (pickdeg <= 1) {
            // remaining candidate graph is a union of edges and isolated
            // vertices; take one endpoint of each edge and all isolated
            int extra = 0;
            Mask rest = cand;
            while (rest) {
                int v = lowest_bit(rest);
                rest &= ~(Mask{1} << v);
                rest &= ~(g.neighbors(v) & cand);
                ++extra;
            }
            best = std::max(best, size + extra);
            return;
        }
        self(self, cand & ~(g.neighbors(pick) | (Mask{1} << pick)), size + 1);
        self(self, cand & ~(Mask{1} << pick), size);
    };
    rec(rec, g.vertices(), 0);
    return best;
}

namespace detail {

// Unit-capacity max flow on the vertex-split digraph, for vertex connectivity.
// Stops augmenting once `max_paths` paths are found.
inline int vertex_disjoint_paths(const Graph& g, int s, int t, int max_paths = Graph::max_order) {
    const int n = g.order();
    const int N = 2 * n;  // v_in = v, v_out = v + n
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[v][v + n] = (v == s || v == t) ? 2 : 1;
    for (int u = 0; u < n; ++u)
        for (Mask m = g.neighbors(u); m; m &= m - 1) {
            int v = lowest_bit(m);
            cap[u + n][v] = 2;
        }
    int flow = 0;
    while (flow < max_paths) {
        std::vector<int> prev(N, -1);
        std::vector<int> queue{s};
        prev[s] = s;
        for (std::size_t qi = 0; qi < queue.size() && prev[t + n] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < N; ++v)
                if (prev[v] < 0 && cap[u][v] > 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[t + n] < 0) break;
        for (int v = t + n; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Vertex connectivity, with kappa(K_n) = n-1 by convention.
inline int connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (!g.is_connected()) return 0;
    int best = n - 1;  // complete-graph convention
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) best = std::min(best, detail::vertex_disjoint_paths(g, u, v));
    return best;
}

// kappa(G) >= k, with per-pair early exit.
inline bool kappa_at_least(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.order();
    if (n <= 1) return false;
    if (!g.is_connected()) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && detail::vertex_disjoint_paths(g, u, v, k) < k) return false;
    return k <= n - 1;
}

// Minimum degree sum over independent triples; nullopt means no independent
// triple exists (treated as +infinity by callers).
inline std::optional<int> sigma3(const Graph& g) {
    const int n = g.order();
    std::optional<int> best;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.has_edge(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
                int sum = g.degree(x) + g.degree(y) + g.degree(z);
                if (!best || sum < *best) best = sum;
            }
        }
    return best;
}

// graph6 codec (McKay's format). Supports n <= 64 via the '~' long form.
inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + bits));
                bits = nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (bits << (6 - nbits))));
    return out;
}

inline Graph from_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
        return c - 63;
    };
    int n;
    int first = next();
    if (first == 63) {
        n = (next() << 12) | (next() << 6) | next();
    } else {
        n = first;
    }
    if (n > Graph::max_order) throw std::invalid_argument("graph6 order exceeds 64");
    GraphBuilder b(n);
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                bits = next();
                nbits = 6;
            }
            if ((bits >> (nbits - 1)) & 1) b.add_edge(i, j);
            --nbits;
        }
    return b.build();
}

}  // namespace linf
