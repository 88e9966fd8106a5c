#include <catch2/catch_amalgamated.hpp>

#include "linforest/construct.hpp"
#include "linforest/extremal.hpp"

using namespace linf;

TEST_CASE("edge extremal numbers for two disjoint edges") {
    LinearForest f22 = LinearForest::parse("2+2");
    auto r5 = brute_force_ex(5, 2, f22);
    CHECK(r5.value == 4);
    REQUIRE(r5.extremal_graph6.size() == 1);
    Graph star = from_graph6(r5.extremal_graph6[0]);
    CHECK(are_isomorphic(star, join(complete_graph(1), empty_graph(4))));

    auto r3 = brute_force_ex(3, 2, f22);
    CHECK(r3.value == 3);  // the triangle: below threshold, not the star shape
    CHECK(are_isomorphic(from_graph6(r3.extremal_graph6[0]), complete_graph(3)));

    for (int n = 4; n <= 8; ++n) CHECK(brute_force_ex(n, 2, f22).value == n - 1);
}

TEST_CASE("path extremal numbers") {
    CHECK(brute_force_path_ex(9, 2, 4) == 9);
    CHECK(brute_force_path_ex(8, 2, 4) == 7);  // 2 K_3 u K_2: 8 is not divisible by 3
    CHECK(brute_force_path_ex(6, 2, 3) == 3);
    CHECK(brute_force_path_ex(7, 3, 5) == 5);  // K_4 u K_3 gives 4 + 1 triangles
    CHECK_THROWS_AS(brute_force_path_ex(4, 2, 1), std::invalid_argument);
}

TEST_CASE("maximizer for P4 at n = 9 is three triangles") {
    LinearForest p4({4});
    auto rec = brute_force_ex(9, 2, p4);
    CHECK(rec.value == 9);
    bool found = false;
    Graph three_k3 = clique_union(4, 9);
    for (const auto& g6 : rec.extremal_graph6)
        if (are_isomorphic(from_graph6(g6), three_k3)) found = true;
    CHECK(found);
}

TEST_CASE("all reported maximizers are F-free") {
    for (const char* text : {"2+2", "4+2"}) {
        LinearForest f = LinearForest::parse(text);
        for (int n = f.total_order(); n <= 7; ++n) {
            auto rec = brute_force_ex(n, 2, f);
            REQUIRE_FALSE(rec.extremal_graph6.empty());
            for (const auto& g6 : rec.extremal_graph6) {
                Graph g = from_graph6(g6);
                REQUIRE(is_forest_free(g, f));
                REQUIRE(count_cliques(g, 2) == rec.value);
            }
        }
    }
}

TEST_CASE("reconcile rows") {
    LinearForest f22 = LinearForest::parse("2+2");
    auto rows = reconcile(3, 8, 2, f22);
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CHECK(row.threshold == 16);
        CHECK_FALSE(row.agrees.has_value());  // every n here is below threshold
        REQUIRE(row.formula_value.has_value());
        if (row.n >= 4) {
            // the closed form already matches from n = 4 on
            CHECK(row.value == *row.formula_value);
        } else {
            CHECK(row.value > *row.formula_value);  // triangle beats the formula at n = 3
        }
    }
    CHECK_THROWS_AS(reconcile(5, 6, 2, LinearForest::parse("5+3")), std::invalid_argument);
}

TEST_CASE("small-n value below the formula is flagged not failed") {
    // the n = 3 row documents why the threshold exists
    auto rows = reconcile(3, 3, 2, LinearForest::parse("2+2"));
    CHECK(rows[0].value == 3);
    CHECK(*rows[0].formula_value == 2);
    CHECK_FALSE(rows[0].agrees.has_value());
}

TEST_CASE("degenerate and guard cases") {
    LinearForest f22 = LinearForest::parse("2+2");
    CHECK_THROWS_AS(brute_force_ex(4, 2, f22, 3), budget_exceeded);
    auto r1 = brute_force_ex(1, 1, f22);
    CHECK(r1.value == 1);
}
