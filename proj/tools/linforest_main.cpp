// Command-line front end: every subcommand maps onto one library operation,
// reads graph6 on stdin where applicable, and emits JSON/CSV/graph6/DOT with
// byte-reproducible output for a fixed configuration.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "linforest/canonical.hpp"
#include "linforest/cliques.hpp"
#include "linforest/construct.hpp"
#include "linforest/disintegration.hpp"
#include "linforest/enumerate.hpp"
#include "linforest/extremal.hpp"
#include "linforest/forest.hpp"
#include "linforest/graph.hpp"
#include "linforest/lemmas.hpp"
#include "linforest/paths.hpp"
#include "linforest/structure.hpp"

using json = nlohmann::ordered_json;
using namespace linf;

namespace {

constexpr const char* kSchema = "linforest/1";

std::vector<std::string> read_graph_lines(const std::string& input_path) {
    std::vector<std::string> lines;
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!input_path.empty() && input_path != "-") {
        file.open(input_path);
        if (!file) throw std::invalid_argument("cannot open input file: " + input_path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string big_to_string(const BigInt& v) { return v.str(); }

json record_to_json(const ExtremalRecord& rec) {
    json j{{"schema", kSchema},
           {"forest", rec.forest.format()},
           {"n", rec.n},
           {"s", rec.s},
           {"brute", big_to_string(rec.value)},
           {"extremal_graph6", rec.extremal_graph6}};
    j["formula"] = rec.formula_value ? json(big_to_string(*rec.formula_value)) : json(nullptr);
    j["threshold"] = rec.threshold ? json(*rec.threshold) : json(nullptr);
    j["agrees"] = rec.agrees ? json(*rec.agrees) : json(nullptr);
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"exact laboratory for clique counts in linear-forest-free graphs"};
    app.require_subcommand(1);

    std::string forest_text, input_path, family, base_text = "k2", format = "g6", kind = "gf";
    std::string path_ex_text;
    int n = 0, s = 2, i_edges = 0, k_paths = 2, ell = 0, t = 1, t1 = 0, t2 = 0;
    int n_from = 0, n_to = 0, max_order = 16, threads = 1;
    std::uint64_t budget = default_enum_budget;
    bool flag_connected = false;
    int min_degree = -1, max_edges = -1;
    std::string f_free_text;
    bool compute_path_ex = false;

    auto* cmd_delta = app.add_subcommand("delta", "print delta_F for a forest");
    cmd_delta->add_option("--forest", forest_text)->required();

    auto* cmd_construct = app.add_subcommand("construct", "build a named graph family");
    cmd_construct->add_option("family", family, "gf|gfi|apex-cliques|apex-mixed|base-k4|clique-union|path-union")
        ->required();
    cmd_construct->add_option("--forest", forest_text);
    cmd_construct->add_option("--n", n);
    cmd_construct->add_option("--i", i_edges);
    cmd_construct->add_option("--k", k_paths);
    cmd_construct->add_option("--ell", ell);
    cmd_construct->add_option("--t", t);
    cmd_construct->add_option("--t1", t1);
    cmd_construct->add_option("--t2", t2);
    cmd_construct->add_option("--base", base_text, "k2|e2");
    cmd_construct->add_option("--format", format, "g6|dot");

    auto* cmd_count = app.add_subcommand("count", "count K_s copies in graph6 input");
    cmd_count->add_option("--s", s)->required();
    cmd_count->add_option("--input", input_path);
    cmd_count->add_option("--threads", threads);

    auto* cmd_formula = app.add_subcommand("formula", "closed-form values");
    cmd_formula->add_option("--kind", kind, "gf|theorem|luo|path-lower|threshold");
    cmd_formula->add_option("--forest", forest_text);
    cmd_formula->add_option("--n", n);
    cmd_formula->add_option("--s", s);
    cmd_formula->add_option("--ell", ell);
    cmd_formula->add_option("--path-ex", path_ex_text, "exact ex(n,K_s,P_l1) for kind=theorem");
    cmd_formula->add_flag("--compute-path-ex", compute_path_ex, "brute-force the path term");

    auto* cmd_contains = app.add_subcommand("contains", "linear-forest containment verdicts");
    cmd_contains->add_option("--forest", forest_text)->required();
    cmd_contains->add_option("--input", input_path);

    auto* cmd_core = app.add_subcommand("core", "delta_F-core disintegration trace");
    cmd_core->add_option("--forest", forest_text)->required();
    cmd_core->add_option("--s", s);
    cmd_core->add_option("--input", input_path);

    auto* cmd_enum = app.add_subcommand("enumerate", "isomorph-free graph stream");
    cmd_enum->add_option("--n", n)->required();
    cmd_enum->add_flag("--connected", flag_connected);
    cmd_enum->add_option("--min-degree", min_degree);
    cmd_enum->add_option("--f-free", f_free_text);
    cmd_enum->add_option("--max-edges", max_edges);
    cmd_enum->add_option("--budget", budget);

    auto* cmd_extremal = app.add_subcommand("extremal", "exact ex(n,K_s,F) by search");
    cmd_extremal->add_option("--forest", forest_text)->required();
    cmd_extremal->add_option("--n", n)->required();
    cmd_extremal->add_option("--s", s);
    cmd_extremal->add_option("--budget", budget);

    auto* cmd_reconcile = app.add_subcommand("reconcile", "brute force vs formula table");
    cmd_reconcile->add_option("--forest", forest_text)->required();
    cmd_reconcile->add_option("--s", s);
    cmd_reconcile->add_option("--n-from", n_from)->required();
    cmd_reconcile->add_option("--n-to", n_to)->required();
    cmd_reconcile->add_option("--budget", budget);
    cmd_reconcile->add_option("--format", format, "json|csv");

    auto* cmd_classify = app.add_subcommand("classify", "structure-family verdicts");
    cmd_classify->add_option("--forest", forest_text)->required();
    cmd_classify->add_option("--input", input_path);

    auto* cmd_audit = app.add_subcommand("audit", "classify every enumerated candidate");
    cmd_audit->add_option("--forest", forest_text)->required();
    cmd_audit->add_option("--n", n)->required();
    cmd_audit->add_option("--budget", budget);

    auto* cmd_lemma = app.add_subcommand("lemma-check", "containment/path lemma sweeps");
    std::string which;
    cmd_lemma->add_option("which", which, "claw|claw2|dirac|chvatal-erdos")->required();
    cmd_lemma->add_option("--max-order", max_order);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_delta->parsed()) {
        std::cout << LinearForest::parse(forest_text).delta_f() << "\n";
        return 0;
    }

    if (cmd_construct->parsed()) {
        Graph g;
        if (family == "gf") {
            g = build_gf(LinearForest::parse(forest_text), n);
        } else if (family == "gfi") {
            g = build_gf_i(k_paths, n, i_edges);
        } else if (family == "apex-cliques") {
            g = apex_cliques(ell, t);
        } else if (family == "apex-mixed") {
            g = apex_mixed(ell, t1, t2);
        } else if (family == "base-k4") {
            g = base_plus_k4(base_text == "e2" ? GfBase::E2 : GfBase::K2, t);
        } else if (family == "clique-union") {
            g = clique_union(ell, n);
        } else if (family == "path-union") {
            g = path_union(LinearForest::parse(forest_text));
        } else {
            throw std::invalid_argument("unknown construction family: " + family);
        }
        if (format == "dot")
            std::cout << g.to_dot();
        else
            std::cout << to_graph6(g) << "\n";
        return 0;
    }

    if (cmd_count->parsed()) {
        for (const auto& line : read_graph_lines(input_path)) {
            Graph g = from_graph6(line);
            json j{{"schema", kSchema},
                   {"graph6", line},
                   {"s", s},
                   {"value", big_to_string(count_cliques(g, s, threads))},
                   {"source", "ENUMERATED"}};
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (cmd_formula->parsed()) {
        json j{{"schema", kSchema}, {"kind", kind}, {"source", "FORMULA"}};
        if (kind == "gf") {
            LinearForest f = LinearForest::parse(forest_text);
            j["forest"] = f.format();
            j["n"] = n;
            j["s"] = s;
            j["value"] = big_to_string(gf_formula(f, n, s));
        } else if (kind == "theorem") {
            LinearForest f = LinearForest::parse(forest_text);
            BigInt path_ex = 0;
            if (compute_path_ex)
                path_ex = brute_force_path_ex(n, s, f.orders()[0], budget);
            else if (!path_ex_text.empty())
                path_ex = BigInt(path_ex_text);
            else
                throw std::invalid_argument("kind=theorem needs --path-ex or --compute-path-ex");
            j["forest"] = f.format();
            j["n"] = n;
            j["s"] = s;
            j["path_ex"] = big_to_string(path_ex);
            j["value"] = big_to_string(theorem_value(f, n, s, path_ex));
        } else if (kind == "luo") {
            BigRat v = luo_bound(ell, s, n);
            j["ell"] = ell;
            j["n"] = n;
            j["s"] = s;
            j["value"] = boost::multiprecision::numerator(v).str() + "/" +
                         boost::multiprecision::denominator(v).str();
        } else if (kind == "path-lower") {
            j["ell"] = ell;
            j["n"] = n;
            j["s"] = s;
            j["value"] = big_to_string(path_turan_lower(ell, s, n));
        } else if (kind == "threshold") {
            LinearForest f = LinearForest::parse(forest_text);
            j["forest"] = f.format();
            j["s"] = s;
            j["value"] = threshold_n(f, s);
        } else {
            throw std::invalid_argument("unknown formula kind: " + kind);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (cmd_contains->parsed()) {
        LinearForest f = LinearForest::parse(forest_text);
        for (const auto& line : read_graph_lines(input_path)) {
            Graph g = from_graph6(line);
            auto witness = contains_linear_forest(g, f);
            json j{{"schema", kSchema}, {"graph6", line}, {"forest", f.format()},
                   {"contains", witness.has_value()}};
            if (witness) j["witness"] = witness->paths;
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (cmd_core->parsed()) {
        LinearForest f = LinearForest::parse(forest_text);
        for (const auto& line : read_graph_lines(input_path)) {
            Graph g = from_graph6(line);
            auto trace = disintegrate(g, f, s);
            json steps = json::array();
            for (const auto& st : trace.steps)
                steps.push_back(json{{"vertex", st.vertex},
                                     {"degree", st.degree},
                                     {"cliques_destroyed", st.cliques_destroyed}});
            json j{{"schema", kSchema},
                   {"graph6", line},
                   {"forest", f.format()},
                   {"s", s},
                   {"steps", steps},
                   {"core_graph6", to_graph6(trace.core)},
                   {"m", trace.core_order},
                   {"initial_cliques", big_to_string(trace.initial_cliques)},
                   {"core_cliques", big_to_string(trace.core_cliques)},
                   {"bound_ok", verify_step_bound(trace)}};
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (cmd_enum->parsed()) {
        EnumFilter filter;
        if (flag_connected) filter.connected = true;
        if (min_degree >= 0) filter.min_degree = min_degree;
        if (!f_free_text.empty()) filter.f_free = LinearForest::parse(f_free_text);
        if (max_edges >= 0) filter.max_edges = max_edges;
        for (const Graph& g : enumerate_graphs(n, filter, budget)) std::cout << to_graph6(g) << "\n";
        return 0;
    }

    if (cmd_extremal->parsed()) {
        auto rec = brute_force_ex(n, s, LinearForest::parse(forest_text), budget);
        rec.threshold = threshold_n(rec.forest, s);
        std::cout << record_to_json(rec).dump() << "\n";
        return 0;
    }

    if (cmd_reconcile->parsed()) {
        auto rows = reconcile(n_from, n_to, s, LinearForest::parse(forest_text), budget);
        if (format == "csv") {
            std::cout << "n,s,forest,brute,formula,threshold,agrees,extremal_graph6\n";
            for (const auto& rec : rows) {
                std::cout << rec.n << "," << rec.s << "," << rec.forest.format() << ","
                          << big_to_string(rec.value) << ","
                          << (rec.formula_value ? big_to_string(*rec.formula_value) : "") << ","
                          << (rec.threshold ? std::to_string(*rec.threshold) : "") << ","
                          << (rec.agrees ? (*rec.agrees ? "true" : "false") : "");
                std::cout << ",";
                for (std::size_t gi = 0; gi < rec.extremal_graph6.size(); ++gi)
                    std::cout << (gi ? ";" : "") << rec.extremal_graph6[gi];
                std::cout << "\n";
            }
        } else {
            for (const auto& rec : rows) std::cout << record_to_json(rec).dump() << "\n";
        }
        return 0;
    }

    if (cmd_classify->parsed()) {
        LinearForest f = LinearForest::parse(forest_text);
        for (const auto& line : read_graph_lines(input_path)) {
            Graph g = from_graph6(line);
            auto verdict = classify(g, f);
            json j{{"schema", kSchema},
                   {"graph6", line},
                   {"forest", f.format()},
                   {"family", family_name(verdict.family)}};
            if (!verdict.detail.empty()) j["detail"] = verdict.detail;
            if (verdict.covering_set) {
                std::vector<int> cover;
                for (Mask m = *verdict.covering_set; m; m &= m - 1) cover.push_back(lowest_bit(m));
                j["covering_set"] = cover;
            }
            if (verdict.apex) j["apex"] = *verdict.apex;
            std::cout << j.dump() << "\n";
        }
        return 0;
    }

    if (cmd_audit->parsed()) {
        LinearForest f = LinearForest::parse(forest_text);
        auto report = audit_theorem1(f, n, budget);
        json counts;
        for (const auto& [fam, cnt] : report.counts) counts[family_name(fam)] = cnt;
        json j{{"schema", kSchema},
               {"forest", f.format()},
               {"n", n},
               {"total", report.total},
               {"counts", counts},
               {"unclassified", report.unclassified_graph6}};
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (cmd_lemma->parsed()) {
        bool pass = false;
        if (which == "claw" || which == "claw2") {
            auto report = which == "claw" ? lemma7_sweep(max_order) : lemma8_sweep(max_order);
            for (const auto& row : report.rows)
                std::cout << row.forest.format() << "\t"
                          << (row.observed_free ? "free" : "contains") << "\t"
                          << (row.predicted_free ? "free" : "contains") << "\t"
                          << (row.observed_free == row.predicted_free ? "ok" : "MISMATCH") << "\n";
            pass = report.mismatches == 0;
            if (which == "claw2") pass = pass && lemma8_positive_sweep(max_order) == 0;
        } else if (which == "dirac") {
            pass = dirac_sweep(max_order) == 0;
        } else if (which == "chvatal-erdos") {
            pass = chvatal_erdos_sweep(max_order) == 0;
        } else {
            throw std::invalid_argument("unknown lemma check: " + which);
        }
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_exceeded& e) {
        std::cerr << json{{"schema", kSchema}, {"error", e.what()}, {"code", "budget_exceeded"}}.dump()
                  << "\n";
        return 1;
    } catch (const size_guard_error& e) {
        std::cerr << json{{"schema", kSchema}, {"error", e.what()}, {"code", "size_guard"}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"schema", kSchema}, {"error", e.what()}, {"code", "domain_error"}}.dump()
                  << "\n";
        return 1;
    }
}
