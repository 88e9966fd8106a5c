#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <random>
#include <set>

#include "linforest/enumerate.hpp"

using namespace linf;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) b.add_edge(perm[u], perm[v]);
    return b.build();
}

// factorial-time oracle: try every bijection
bool iso_oracle(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> perm(a.order());
    for (int i = 0; i < a.order(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < a.order() && ok; ++u)
            for (int v = u + 1; v < a.order() && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("canonical form is relabeling invariant", "[property]") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 150; ++iter) {
        int n = 1 + static_cast<int>(rng() % 10);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) b.add_edge(u, v);
        Graph g = b.build();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        REQUIRE(canonical_form(g) == canonical_form(h));
        REQUIRE(are_isomorphic(g, h));
    }
}

TEST_CASE("certificate round trip rebuilds an isomorphic graph") {
    std::mt19937_64 rng(1212);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) b.add_edge(u, v);
        Graph g = b.build();
        Graph canon = canonical_graph(g);
        REQUIRE(canon.edge_count() == g.edge_count());
        REQUIRE(canonical_form(canon) == canonical_form(g));
    }
}

TEST_CASE("isomorphism agrees with the permutation oracle", "[property]") {
    std::mt19937_64 rng(4321);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6 vertices
        GraphBuilder ba(n), bb(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 2) ba.add_edge(u, v);
                if (rng() % 2) bb.add_edge(u, v);
            }
        Graph a = ba.build(), b = bb.build();
        REQUIRE(are_isomorphic(a, b) == iso_oracle(a, b));
    }
}

TEST_CASE("distinguishes cospectral-degree pairs") {
    // C_6 vs 2 K_3: same order, size, and degree sequence
    CHECK_FALSE(are_isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    // K_{1,4} plus edge variants
    CHECK_FALSE(are_isomorphic(path_graph(5), join(complete_graph(1), empty_graph(4))));
}

TEST_CASE("graph class counts") {
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
}

TEST_CASE("labeled dedup oracle confirms the n = 5 count") {
    // canonicalize every labeled graph directly; the generator must agree
    std::set<std::string> certs;
    for (int code = 0; code < (1 << 10); ++code) {
        GraphBuilder b(5);
        int bit = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if ((code >> bit++) & 1) b.add_edge(u, v);
        certs.insert(canonical_form(b.build()).bytes);
    }
    CHECK(certs.size() == 34);
}

TEST_CASE("generator emits no duplicates and respects filters") {
    std::set<std::string> seen;
    EnumFilter filter;
    filter.connected = true;
    filter.min_degree = 2;
    enumerate_graphs(6, filter, [&](const Graph& g) {
        REQUIRE(g.is_connected());
        REQUIRE(g.min_degree() >= 2);
        REQUIRE(seen.insert(canonical_form(g).bytes).second);
    });
    CHECK_FALSE(seen.empty());
}

TEST_CASE("pruned generation matches post-filtering") {
    LinearForest f22 = LinearForest::parse("2+2");
    EnumFilter pruned;
    pruned.f_free = f22;
    auto fast = enumerate_graphs(6, pruned);

    std::size_t slow = 0;
    for (const Graph& g : enumerate_graphs(6))
        if (is_forest_free(g, f22)) ++slow;
    CHECK(fast.size() == slow);
    for (const Graph& g : fast) CHECK(is_forest_free(g, f22));
}

TEST_CASE("guards and budget") {
    CHECK_THROWS_AS(enumerate_graphs(11), std::invalid_argument);
    EnumFilter capped;
    capped.max_edges = 3;
    CHECK_NOTHROW(enumerate_graphs(12, capped));
    CHECK_THROWS_AS(enumerate_graphs(8, EnumFilter{}, 100), budget_exceeded);
}
