#pragma once

#include <cstdint>
#include <vector>

#include "linforest/cliques.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"

namespace linf {

struct DisintegrationStep {
    int vertex;                       // id in the original labeling
    int degree;                       // degree at deletion time
    std::uint64_t cliques_destroyed;  // K_s copies through the vertex
};

struct DisintegrationTrace {
    std::vector<DisintegrationStep> steps;
    Graph original;
    Graph core;        // compacted, order-preserving labels
    Mask core_mask;    // core vertices in the original labeling
    int core_order;
    int s;
    int threshold;     // delta_F
    BigInt initial_cliques;
    BigInt core_cliques;
};

// Iteratively deletes the lowest-indexed vertex of degree < delta_F until the
// remainder has min degree >= delta_F or is empty, recording exact clique
// loss per step.
inline DisintegrationTrace disintegrate(const Graph& g, int delta_threshold, int s) {
    if (s < 1) throw std::invalid_argument("disintegrate needs s >= 1");
    DisintegrationTrace trace;
    trace.original = g;
    trace.s = s;
    trace.threshold = delta_threshold;
    trace.initial_cliques = count_cliques(g, s);

    Mask active = g.vertices();
    auto active_degree = [&](int v) { return popcount(g.neighbors(v) & active); };
    while (active) {
        int victim = -1;
        for (Mask m = active; m; m &= m - 1) {
            int v = lowest_bit(m);
            if (active_degree(v) < delta_threshold) {
                victim = v;
                break;
            }
        }
        if (victim < 0) break;
        Mask nbrs = g.neighbors(victim) & active;
        std::uint64_t lost =
            s == 1 ? 1 : static_cast<std::uint64_t>(count_cliques(g.induced(nbrs), s - 1));
        trace.steps.push_back({victim, popcount(nbrs), lost});
        active &= ~(Mask{1} << victim);
    }
    trace.core_mask = active;
    trace.core = g.induced(active);
    trace.core_order = popcount(active);
    trace.core_cliques = count_cliques(trace.core, s);
    return trace;
}

inline DisintegrationTrace disintegrate(const Graph& g, const LinearForest& f, int s) {
    return disintegrate(g, f.delta_f(), s);
}

// Checks every recorded per-step loss against C(delta_F-1, s-1), the exact
// telescoping recount, and the telescoped bound
// N_s(G) <= N_s(core) + (n - m) C(delta_F-1, s-1).
inline bool verify_step_bound(const DisintegrationTrace& trace) {
    const BigInt per_step_cap = binomial(trace.threshold - 1, trace.s - 1);
    BigInt total_loss = 0;
    for (const auto& step : trace.steps) {
        if (step.degree >= trace.threshold) return false;
        BigInt lost = step.cliques_destroyed;
        if (lost > binomial(step.degree, trace.s - 1)) return false;
        if (lost > per_step_cap) return false;
        total_loss += lost;
    }
    if (trace.initial_cliques != trace.core_cliques + total_loss) return false;
    BigInt deleted = static_cast<long long>(trace.steps.size());
    return trace.initial_cliques <= trace.core_cliques + deleted * per_step_cap;
}

inline bool verify_step_bound(const DisintegrationTrace& trace, const LinearForest& f, int s) {
    if (trace.threshold != f.delta_f() || trace.s != s) return false;
    return verify_step_bound(trace);
}

}  // namespace linf
