#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "linforest/graph.hpp"

namespace linf {

// Canonical certificate: order byte plus canonically relabeled upper-triangle
// bits. Equal certificates iff isomorphic.
struct CanonicalForm {
    std::string bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

// Ordered partition of the vertex set as a list of cell masks.
using Partition = std::vector<Mask>;

inline void refine(const Graph& g, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < part.size(); ++si) {
            Mask splitter = part[si];
            for (std::size_t ci = 0; ci < part.size(); ++ci) {
                if (popcount(part[ci]) <= 1) continue;
                // group the cell by degree into the splitter
                int counts[Graph::max_order];
                std::vector<int> seen_counts;
                for (Mask m = part[ci]; m; m &= m - 1) {
                    int v = lowest_bit(m);
                    counts[v] = popcount(g.neighbors(v) & splitter);
                }
                int first = counts[lowest_bit(part[ci])];
                bool uniform = true;
                for (Mask m = part[ci]; m; m &= m - 1)
                    if (counts[lowest_bit(m)] != first) {
                        uniform = false;
                        break;
                    }
                if (uniform) continue;
                for (Mask m = part[ci]; m; m &= m - 1) {
                    int c = counts[lowest_bit(m)];
                    if (std::find(seen_counts.begin(), seen_counts.end(), c) == seen_counts.end())
                        seen_counts.push_back(c);
                }
                std::sort(seen_counts.begin(), seen_counts.end());
                std::vector<Mask> pieces(seen_counts.size(), 0);
                for (Mask m = part[ci]; m; m &= m - 1) {
                    int v = lowest_bit(m);
                    std::size_t slot = std::lower_bound(seen_counts.begin(), seen_counts.end(),
                                                        counts[v]) -
                                       seen_counts.begin();
                    pieces[slot] |= Mask{1} << v;
                }
                part[ci] = pieces[0];
                part.insert(part.begin() + ci + 1, pieces.begin() + 1, pieces.end());
                changed = true;
            }
            if (changed) break;  // splitter indices shifted; restart scan
        }
    }
}

inline std::string certificate_for_order(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::string bytes;
    bytes.push_back(static_cast<char>(n));
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0);
            if (++nbits == 8) {
                bytes.push_back(static_cast<char>(bits));
                bits = nbits = 0;
            }
        }
    if (nbits) bytes.push_back(static_cast<char>(bits << (8 - nbits)));
    return bytes;
}

struct CanonSearch {
    const Graph& g;
    std::string best;
    bool have_best = false;

    void descend(Partition part) {
        refine(g, part);
        std::size_t target = part.size();
        int target_size = Graph::max_order + 1;
        for (std::size_t i = 0; i < part.size(); ++i) {
            int sz = popcount(part[i]);
            if (sz > 1 && sz < target_size) {
                target_size = sz;
                target = i;
            }
        }
        if (target == part.size()) {
            std::vector<int> order;
            for (Mask cell : part) order.push_back(lowest_bit(cell));
            std::string cert = certificate_for_order(g, order);
            if (!have_best || cert < best) {
                best = std::move(cert);
                have_best = true;
            }
            return;
        }
        for (Mask m = part[target]; m; m &= m - 1) {
            int v = lowest_bit(m);
            // twins (equal neighborhoods, with or without the mutual edge) are
            // swapped by an automorphism; one representative per class suffices
            bool redundant = false;
            for (Mask earlier = part[target] & ((Mask{1} << v) - 1); earlier && !redundant;
                 earlier &= earlier - 1) {
                int u = lowest_bit(earlier);
                if (g.neighbors(u) == g.neighbors(v) ||
                    (g.neighbors(u) | (Mask{1} << u)) == (g.neighbors(v) | (Mask{1} << v)))
                    redundant = true;
            }
            if (redundant) continue;
            Partition child = part;
            child[target] &= ~(Mask{1} << v);
            child.insert(child.begin() + target, Mask{1} << v);
            descend(std::move(child));
        }
    }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return CanonicalForm{std::string(1, '\0')};
    detail::CanonSearch search{g};
    detail::Partition start{g.vertices()};
    search.descend(start);
    return CanonicalForm{search.best};
}

// Rebuild the graph a certificate describes.
inline Graph graph_from_certificate(const std::string& bytes) {
    int n = static_cast<unsigned char>(bytes.at(0));
    GraphBuilder b(n);
    int bit_idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = static_cast<unsigned char>(bytes.at(1 + bit_idx / 8));
            if ((byte >> (7 - bit_idx % 8)) & 1) b.add_edge(i, j);
            ++bit_idx;
        }
    return b.build();
}

inline Graph canonical_graph(const Graph& g) { return graph_from_certificate(canonical_form(g).bytes); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace linf
