#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "linforest/forest.hpp"
#include "linforest/graph.hpp"

namespace linf {

// G_F(n): K_{delta_F} joined to an independent set, plus one extra edge in the
// independent part when every path of F is odd. Clique vertices come first.
inline Graph build_gf(const LinearForest& f, int n) {
    const int d = f.delta_f();
    if (n > Graph::max_order) throw std::invalid_argument("build_gf order exceeds 64");
    if (n < d + 2) throw std::invalid_argument("build_gf needs n >= delta_F + 2");
    Graph rest = empty_graph(n - d);
    if (f.all_odd()) {
        GraphBuilder b(rest);
        b.add_edge(n - d - 2, n - d - 1);
        rest = b.build();
    }
    return join(complete_graph(d), rest);
}

// One attachment: list of (endpoint, clique vertex) cross edges for edge e_j,
// endpoint in {0,1}.
using GfiAttachment = std::vector<std::pair<int, int>>;

// G_F(n,i) for F = kP_5: K_{delta_F} + E_{n-delta_F-2i} with i added
// independent edges, each wired to the clique by the caller-supplied cross
// edges. Layout: clique 0..d-1, then e_j = {d+2j, d+2j+1}, then the
// independent set. Validation enforces the two constraints of the family:
// all but at most two e_j have two independent cross edges to the clique, and
// no clique vertex touches more than one e_j.
inline Graph build_gf_i(int k, int n, int i, const std::vector<GfiAttachment>& attachment) {
    if (k < 2) throw std::invalid_argument("build_gf_i needs k >= 2");
    if (i < 0 || i > k) throw std::invalid_argument("build_gf_i needs 0 <= i <= k");
    const int d = 2 * k - 1;  // delta of kP_5
    if (n > Graph::max_order) throw std::invalid_argument("build_gf_i order exceeds 64");
    if (n < d + 2 * i) throw std::invalid_argument("build_gf_i order too small");
    if (static_cast<int>(attachment.size()) != i)
        throw std::invalid_argument("build_gf_i needs one attachment per added edge");

    GraphBuilder b(n);
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) b.add_edge(u, v);
    for (int u = 0; u < d; ++u)
        for (int v = d + 2 * i; v < n; ++v) b.add_edge(u, v);

    std::vector<int> clique_owner(d, -1);
    int lacking = 0;
    for (int j = 0; j < i; ++j) {
        int lo = d + 2 * j, hi = lo + 1;
        b.add_edge(lo, hi);
        bool endpoint_used[2] = {false, false};
        std::vector<int> touched;
        for (auto [ep, c] : attachment[j]) {
            if (ep != 0 && ep != 1) throw std::invalid_argument("attachment endpoint must be 0 or 1");
            if (c < 0 || c >= d) throw std::invalid_argument("attachment clique vertex out of range");
            if (clique_owner[c] != -1 && clique_owner[c] != j)
                throw std::invalid_argument("clique vertex has neighbors in more than one added edge");
            clique_owner[c] = j;
            b.add_edge(ep == 0 ? lo : hi, c);
            endpoint_used[ep] = true;
            touched.push_back(c);
        }
        // two independent cross edges means both endpoints attached and at
        // least two distinct clique vertices touched
        bool two_independent = endpoint_used[0] && endpoint_used[1] &&
                               [&] {
                                   for (std::size_t a = 0; a < touched.size(); ++a)
                                       for (std::size_t bdx = a + 1; bdx < touched.size(); ++bdx)
                                           if (touched[a] != touched[bdx]) return true;
                                   return false;
                               }();
        if (!two_independent) ++lacking;
    }
    if (lacking > 2)
        throw std::invalid_argument("more than two added edges lack two independent cross edges");
    return b.build();
}

// Convenience default: disjoint clique pairs greedily while pairs remain,
// then single-edge attachments for up to two remaining e_j.
inline std::vector<GfiAttachment> default_gf_i_attachment(int k, int i) {
    const int d = 2 * k - 1;
    std::vector<GfiAttachment> out;
    int next_clique = 0;
    for (int j = 0; j < i; ++j) {
        GfiAttachment a;
        if (next_clique + 1 < d) {
            a.push_back({0, next_clique});
            a.push_back({1, next_clique + 1});
            next_clique += 2;
        } else if (next_clique < d) {
            a.push_back({0, next_clique});
            next_clique += 1;
        }
        out.push_back(std::move(a));
    }
    return out;
}

inline Graph build_gf_i(int k, int n, int i) {
    return build_gf_i(k, n, i, default_gf_i_attachment(k, i));
}

// K_1 + t K_{l-1}, apex first.
inline Graph apex_cliques(int ell, int t) {
    if (ell < 2 || t < 0) throw std::invalid_argument("apex_cliques needs ell >= 2, t >= 0");
    Graph blocks(0);
    for (int j = 0; j < t; ++j) blocks = disjoint_union(blocks, complete_graph(ell - 1));
    return join(complete_graph(1), blocks);
}

// K_1 + (t1 K_{l-1} u t2 K_{l-2}), apex first.
inline Graph apex_mixed(int ell, int t1, int t2) {
    if (ell < 3 || t1 < 0 || t2 < 0) throw std::invalid_argument("apex_mixed needs ell >= 3");
    Graph blocks(0);
    for (int j = 0; j < t1; ++j) blocks = disjoint_union(blocks, complete_graph(ell - 1));
    for (int j = 0; j < t2; ++j) blocks = disjoint_union(blocks, complete_graph(ell - 2));
    return join(complete_graph(1), blocks);
}

enum class GfBase { K2, E2 };

// K_2 + t K_4 or E_2 + t K_4, the 3P_5 exceptional family. Base pair first.
inline Graph base_plus_k4(GfBase base, int t) {
    if (t < 0) throw std::invalid_argument("base_plus_k4 needs t >= 0");
    Graph pair = base == GfBase::K2 ? complete_graph(2) : empty_graph(2);
    Graph blocks(0);
    for (int j = 0; j < t; ++j) blocks = disjoint_union(blocks, complete_graph(4));
    return join(pair, blocks);
}

// floor(n/(l-1)) copies of K_{l-1} plus one K_{n mod (l-1)}; P_l-free, and
// extremal for ex(n,K_s,P_l) when (l-1) | n.
inline Graph clique_union(int ell, int n) {
    if (ell < 2) throw std::invalid_argument("clique_union needs ell >= 2");
    if (n > Graph::max_order) throw std::invalid_argument("clique_union order exceeds 64");
    Graph g(0);
    for (int j = 0; j < n / (ell - 1); ++j) g = disjoint_union(g, complete_graph(ell - 1));
    return disjoint_union(g, complete_graph(n % (ell - 1)));
}

inline Graph path_union(const std::vector<int>& orders) {
    Graph g(0);
    for (int l : orders) g = disjoint_union(g, path_graph(l));
    return g;
}

inline Graph path_union(const LinearForest& f) { return path_union(f.orders()); }

}  // namespace linf
