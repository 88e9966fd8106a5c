// Acceptance gate: ten end-to-end checks, one pass/fail line each.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "linforest/construct.hpp"
#include "linforest/disintegration.hpp"
#include "linforest/extremal.hpp"
#include "linforest/lemmas.hpp"
#include "linforest/structure.hpp"

using namespace linf;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double seconds, const std::string& note = "") {
    std::printf("[%2d] %-34s %s  (%.1fs)%s%s\n", idx, name, ok ? "PASS" : "FAIL", seconds,
                note.empty() ? "" : "  ", note.c_str());
    if (!ok) ++failures;
}

template <typename Fn>
void run(int idx, const char* name, Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, ok, secs, note);
}

const std::vector<const char*> battery = {"2+2", "4+2", "4+4", "5+5",
                                          "5+4", "7+5", "5+5+5", "5+5+2"};

bool formula_agreement(std::string& note) {
    long long rows = 0;
    for (const char* text : battery) {
        LinearForest f = LinearForest::parse(text);
        for (int n = f.delta_f() + 2; n <= 60; ++n) {
            Graph g = build_gf(f, n);
            for (int s = 1; s <= f.delta_f() + 1; ++s) {
                ++rows;
                if (gf_formula(f, n, s) != count_cliques(g, s)) {
                    note = "mismatch at F=" + f.format() + " n=" + std::to_string(n) +
                           " s=" + std::to_string(s);
                    return false;
                }
            }
        }
    }
    note = std::to_string(rows) + " rows exact";
    return true;
}

bool first_dichotomy(std::string& note) {
    auto r = lemma7_sweep(16);
    note = std::to_string(r.rows.size()) + " forests, " + std::to_string(r.mismatches) +
           " mismatches";
    return !r.rows.empty() && r.mismatches == 0;
}

bool second_dichotomy(std::string& note) {
    auto r = lemma8_sweep(16);
    int positive_violations = lemma8_positive_sweep(16);
    note = std::to_string(r.rows.size()) + " forests, " + std::to_string(r.mismatches) +
           " mismatches, " + std::to_string(positive_violations) + " positive-side violations";
    return !r.rows.empty() && r.mismatches == 0 && positive_violations == 0;
}

bool two_edges_reconciliation(std::string& note) {
    LinearForest f = LinearForest::parse("2+2");
    if (threshold_n(f, 2) != 16) {
        note = "threshold mismatch";
        return false;
    }
    for (int n = 4; n <= 9; ++n) {
        auto rec = brute_force_ex(n, 2, f);
        BigInt expected = n - 1;
        if (rec.value != expected) {
            note = "ex(" + std::to_string(n) + ") != n-1";
            return false;
        }
        if (rec.value != theorem_value(f, n, 2, brute_force_path_ex(n, 2, 2))) {
            note = "closed form disagrees at n=" + std::to_string(n);
            return false;
        }
        if (n >= 5) {
            Graph star = join(complete_graph(1), empty_graph(n - 1));
            bool star_found = false;
            for (const auto& g6 : rec.extremal_graph6)
                if (are_isomorphic(from_graph6(g6), star)) star_found = true;
            if (!star_found) {
                note = "star missing among maximizers at n=" + std::to_string(n);
                return false;
            }
        }
    }
    auto r3 = brute_force_ex(3, 2, f);
    bool flagged = r3.value == 3 && gf_formula(f, 3, 2) == 2 && 3 < threshold_n(f, 2);
    if (!flagged) {
        note = "n=3 exception not flagged below threshold";
        return false;
    }
    note = "ex = n-1 for n=4..9; star extremal; n=3 row below threshold 16";
    return true;
}

bool path_turan_equality(std::string& note) {
    auto rec9 = brute_force_ex(9, 2, LinearForest({4}));
    if (rec9.value != 9) {
        note = "ex(9,K_2,P_4) != 9";
        return false;
    }
    bool triangles_found = false;
    Graph three_k3 = clique_union(4, 9);
    for (const auto& g6 : rec9.extremal_graph6)
        if (are_isomorphic(from_graph6(g6), three_k3)) triangles_found = true;
    if (!triangles_found) {
        note = "3K_3 missing among maximizers";
        return false;
    }
    BigInt v8 = brute_force_path_ex(8, 2, 4);
    if (BigRat(v8) > luo_bound(4, 2, 8)) {
        note = "n=8 value exceeds the upper bound";
        return false;
    }
    note = "ex(9,K_2,P_4)=9 with 3K_3; ex(8)=" + v8.str() + " <= 8";
    return true;
}

bool odd_branch_lower_bound(std::string& note) {
    LinearForest f = LinearForest::parse("5+5");
    for (int n = 10; n <= 40; ++n) {
        int t = (n - 1) / 4, r = (n - 1) % 4;
        Graph g = join(complete_graph(1),
                       disjoint_union(clique_union(5, 4 * t), complete_graph(r)));
        BigInt expected = BigInt(t) * 5 + (r == 3 ? 1 : 0);
        if (count_cliques(g, 4) != expected) {
            note = "count mismatch at n=" + std::to_string(n);
            return false;
        }
        if (expected != theorem_value(f, n, 4, 0)) {
            note = "closed form mismatch at n=" + std::to_string(n);
            return false;
        }
        if (!is_forest_free(g, f)) {
            note = "built graph contains F at n=" + std::to_string(n);
            return false;
        }
    }
    note = "apex counts match floor((n-1)/4)*5+mu and stay F-free for n=10..40";
    return true;
}

bool classification_audit(std::string& note) {
    LinearForest f = LinearForest::parse("2+2");
    int total = 0;
    for (int n : {8, 9}) {
        auto report = audit_theorem1(f, n);
        total += report.total;
        if (!report.unclassified_graph6.empty() ||
            report.counts[FamilyCase::SubgraphOfGf] != report.total) {
            note = "non-layered member at n=" + std::to_string(n);
            return false;
        }
    }
    note = std::to_string(total) + " graphs audited, all SUBGRAPH_OF_GF";
    return true;
}

bool disintegration_ledger(std::string& note) {
    std::mt19937_64 rng(20260823);
    const double probs[3] = {0.1, 0.3, 0.5};
    std::vector<LinearForest> forests;
    for (const char* text : battery) forests.push_back(LinearForest::parse(text));
    long long traces = 0;
    for (int i = 0; i < 10000; ++i) {
        int n = 5 + static_cast<int>(rng() % 26);  // 5..30
        double p = probs[rng() % 3];
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < p) b.add_edge(u, v);
        Graph g = b.build();
        for (const auto& f : forests) {
            std::vector<int> svals = {2};
            if (i % 10 == 0) svals.push_back(f.delta_f() + 1);
            for (int s : svals) {
                auto trace = disintegrate(g, f, s);
                ++traces;
                if (!verify_step_bound(trace, f, s)) {
                    note = "bound violated, graph " + to_graph6(g) + " F=" + f.format() +
                           " s=" + std::to_string(s);
                    return false;
                }
            }
        }
    }
    note = std::to_string(traces) + " traces, every step within C(delta_F-1,s-1), telescoping exact";
    return true;
}

bool apex_comparison(std::string& note) {
    // shapes paired with an apex family of parameter l
    struct Shape {
        LinearForest f;
        int ell;
    };
    std::vector<Shape> shapes;
    for (int ell = 2; ell <= 15; ++ell) {
        if (ell % 2 == 0 && ell != 3) shapes.push_back({LinearForest({ell, ell}), ell});
        if (ell >= 4) shapes.push_back({LinearForest({ell + 1, ell}), ell});
        if (ell % 2 == 1 && ell >= 5) shapes.push_back({LinearForest({ell + 2, ell}), ell});
        if (ell % 2 == 1 && ell >= 5) shapes.push_back({LinearForest({ell, ell, 2}), ell});
    }
    long long checks = 0;
    for (const auto& [f, ell] : shapes) {
        for (int t = 1; t <= 30; ++t) {
            long long n = static_cast<long long>(t) * (ell - 1) + 1;
            if (n > 64) break;
            if (n < f.delta_f() + 2) continue;
            Graph gf = build_gf(f, static_cast<int>(n));
            Graph apex = apex_cliques(ell, t);
            for (int s = 1; s <= f.delta_f() + 1; ++s) {
                ++checks;
                if (count_cliques(gf, s) < count_cliques(apex, s)) {
                    note = "inequality 1 fails: F=" + f.format() + " t=" + std::to_string(t) +
                           " s=" + std::to_string(s);
                    return false;
                }
            }
        }
    }
    LinearForest f3p5 = LinearForest::parse("5+5+5");
    for (int t = 2; 4 * t + 2 <= 64; ++t) {
        Graph gf = build_gf(f3p5, 4 * t + 2);
        Graph base = base_plus_k4(GfBase::K2, t);
        for (int s = 2; s <= 6; ++s) {
            ++checks;
            if (count_cliques(gf, s) <= count_cliques(base, s)) {
                note = "strict inequality 2 fails: t=" + std::to_string(t) +
                       " s=" + std::to_string(s);
                return false;
            }
        }
    }
    note = std::to_string(checks) + " comparisons, zero violations";
    return true;
}

bool naive_contains(const Graph& g, const LinearForest& f) {
    const auto& orders = f.orders();
    int total = f.total_order();
    if (g.order() < total) return false;
    std::vector<int> flat;
    std::vector<bool> used(g.order(), false);
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == total) return true;
        int acc = 0;
        std::size_t path = 0;
        while (acc + orders[path] <= pos) acc += orders[path++];
        bool start = pos == acc;
        for (int v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            if (!start && !g.has_edge(flat.back(), v)) continue;
            used[v] = true;
            flat.push_back(v);
            if (self(self, pos + 1)) return true;
            flat.pop_back();
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

bool property_suites(std::string& note) {
    int dirac = dirac_sweep(9);
    int ce = chvatal_erdos_sweep(9);
    if (dirac != 0 || ce != 0) {
        note = "long-path violations: " + std::to_string(dirac) + "/" + std::to_string(ce);
        return false;
    }

    auto forests = enumerate_forests(7, /*theorem_only=*/false);
    long long agreements = 0;
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            for (const auto& f : forests) {
                if (contains_linear_forest(g, f).has_value() != naive_contains(g, f)) {
                    note = "oracle disagreement on " + to_graph6(g) + " F=" + f.format();
                    return false;
                }
                ++agreements;
            }
        }
    }

    const int expected_counts[4] = {11, 34, 156, 1044};
    for (int n = 4; n <= 7; ++n) {
        if (static_cast<int>(enumerate_graphs(n).size()) != expected_counts[n - 4]) {
            note = "generator count off at n=" + std::to_string(n);
            return false;
        }
        // labeled-graph dedup oracle
        std::set<std::string> certs;
        int pairs = n * (n - 1) / 2;
        for (long long code = 0; code < (1LL << pairs); ++code) {
            GraphBuilder b(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if ((code >> bit++) & 1) b.add_edge(u, v);
            certs.insert(canonical_form(b.build()).bytes);
        }
        if (static_cast<int>(certs.size()) != expected_counts[n - 4]) {
            note = "dedup oracle count off at n=" + std::to_string(n);
            return false;
        }
    }
    note = "sweeps clean; " + std::to_string(agreements) +
           " oracle agreements; class counts 11/34/156/1044 doubly confirmed";
    return true;
}

}  // namespace

int main() {
    run(1, "formula agreement", formula_agreement);
    run(2, "first containment dichotomy", first_dichotomy);
    run(3, "second containment dichotomy", second_dichotomy);
    run(4, "two-edge forest reconciliation", two_edges_reconciliation);
    run(5, "path Turan equality", path_turan_equality);
    run(6, "odd-branch lower bound", odd_branch_lower_bound);
    run(7, "classification audit", classification_audit);
    run(8, "disintegration ledger", disintegration_ledger);
    run(9, "apex comparison inequalities", apex_comparison);
    run(10, "property suites", property_suites);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
