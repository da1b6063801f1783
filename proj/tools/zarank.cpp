// Command-line surface for the Zarankiewicz bound library: closed-form
// bounds with regime selection, exact LP cross-checks, witness
// construction/verification, the brute-force oracle, and table generation.
//
// Exit codes: 0 success/verified, 1 verified-false or construction failure,
// 2 usage error, 3 budget exhaustion.

#include "zarank/bounds.hpp"
#include "zarank/construct.hpp"
#include "zarank/hypergraph.hpp"
#include "zarank/lp.hpp"
#include "zarank/oracle.hpp"
#include "zarank/params.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace zarank;

#ifndef ZARANK_DATA_DIR
#define ZARANK_DATA_DIR "data"
#endif

struct Output {
    bool json = false;
    bool header = true;
    ordered_json payload;  // query/result/provenance for --format json
    std::vector<std::string> tsv_header_lines;
    std::vector<std::vector<std::string>> tsv;

    void emit() const {
        if (json) {
            std::cout << payload.dump() << "\n";
            return;
        }
        if (header)
            for (const auto& line : tsv_header_lines) std::cout << "# " << line << "\n";
        for (const auto& row : tsv) {
            for (size_t i = 0; i < row.size(); ++i) std::cout << (i ? "\t" : "") << row[i];
            std::cout << "\n";
        }
    }
};

std::string family_provenance(BoundFamily f) {
    switch (f) {
        case BoundFamily::Culik: return "edge-count bound at the dense threshold";
        case BoundFamily::A: return "two-size certificate family";
        case BoundFamily::B: return "deficiency-constrained certificate family";
    }
    return "";
}

// Closed-form optimal profile columns for a B-family bound,
// or "-" when the profile formula does not apply at these parameters.
std::vector<std::string> profile_columns(long long k, long long lambda, long long m, long long n) {
    try {
        EdgeProfile p = optimal_profile_B(k, lambda, m, n);
        return {p.at1(k - 1).str(), p.at1(k).str(), p.at1(k + 1).str()};
    } catch (const std::exception&) {
        return {"-", "-", "-"};
    }
}

int cmd_bounds(long long lambda, long long m, long long n, long long k, const std::string& family,
               Output& out) {
    BoundReport rep;
    std::string regime;
    if (!family.empty()) {
        if (k <= 0) {
            std::cerr << "error: --family requires --k\n";
            return 2;
        }
        rep.k_used = k;
        rep.family = family == "A" ? BoundFamily::A : BoundFamily::B;
        rep.value = rep.family == BoundFamily::A ? bound_A(k, lambda, m, n) : bound_B(k, lambda, m, n);
        rep.floor_value = rep.value.floor();
        regime = "forced";
    } else {
        if (k > 0) {
            std::cerr << "error: --k requires --family\n";
            return 2;
        }
        rep = best_bound(lambda, m, n);
        regime = to_string(rep.regime);
    }
    std::vector<std::string> prof = {"-", "-", "-"};
    if (rep.family == BoundFamily::B) prof = profile_columns(rep.k_used, lambda, m, n);

    out.tsv_header_lines = {"zarank bounds", "provenance: " + family_provenance(rep.family)};
    out.tsv.push_back({"lambda", "m", "n", "family", "k", "regime", "value", "floor", "nstar_km1", "nstar_k",
                       "nstar_k1"});
    out.tsv.push_back({std::to_string(lambda), std::to_string(m), std::to_string(n), to_string(rep.family),
                       std::to_string(rep.k_used), regime, rep.value.str(), rep.floor_value.get_str(),
                       prof[0], prof[1], prof[2]});
    out.payload = {{"query", {{"lambda", lambda}, {"m", m}, {"n", n}}},
                   {"result",
                    {{"family", to_string(rep.family)},
                     {"k", rep.k_used},
                     {"regime", regime},
                     {"value", rep.value.str()},
                     {"floor", rep.floor_value.get_str()},
                     {"profile",
                      prof[0] == "-" ? ordered_json(nullptr)
                                     : ordered_json{{"n_km1", prof[0]}, {"n_k", prof[1]}, {"n_k1", prof[2]}}}}},
                   {"provenance", family_provenance(rep.family)}};
    out.emit();
    return 0;
}

int cmd_table(const std::string& preset, long long lambda, long long m, long long n_from, long long n_to,
              Output& out) {
    if (preset == "dhs-improvements") {
        static const long long rows[][3] = {{14, 29, 3}, {14, 30, 3}, {17, 24, 4}, {17, 25, 4}, {18, 24, 4},
                                            {18, 25, 4}, {20, 31, 4}, {21, 31, 4}, {22, 25, 5}, {23, 25, 5}};
        out.tsv_header_lines = {"zarank table preset=dhs-improvements",
                                "provenance: floors of the deficiency-constrained family at lambda=1"};
        out.tsv.push_back({"m", "n", "k", "floor"});
        ordered_json jrows = ordered_json::array();
        for (const auto& r : rows) {
            Int fl = bound_B(r[2], 1, r[0], r[1]).floor();
            out.tsv.push_back(
                {std::to_string(r[0]), std::to_string(r[1]), std::to_string(r[2]), fl.get_str()});
            jrows.push_back({{"m", r[0]}, {"n", r[1]}, {"k", r[2]}, {"floor", fl.get_str()}});
        }
        out.payload = {{"query", {{"preset", preset}}}, {"result", jrows}};
        out.emit();
        return 0;
    }
    if (preset.empty() && m > 0 && n_from > 0 && n_to >= n_from) {
        out.tsv_header_lines = {"zarank table", "provenance: best bound per n with regime selection"};
        out.tsv.push_back({"m", "n", "family", "k", "regime", "value", "floor"});
        ordered_json jrows = ordered_json::array();
        for (long long n = n_from; n <= n_to; ++n) {
            BoundReport rep = best_bound(lambda, m, n);
            out.tsv.push_back({std::to_string(m), std::to_string(n), to_string(rep.family),
                               std::to_string(rep.k_used), to_string(rep.regime), rep.value.str(),
                               rep.floor_value.get_str()});
            jrows.push_back({{"m", m},
                             {"n", n},
                             {"family", to_string(rep.family)},
                             {"k", rep.k_used},
                             {"regime", to_string(rep.regime)},
                             {"value", rep.value.str()},
                             {"floor", rep.floor_value.get_str()}});
        }
        out.payload = {{"query", {{"lambda", lambda}, {"m", m}, {"n_from", n_from}, {"n_to", n_to}}},
                       {"result", jrows}};
        out.emit();
        return 0;
    }
    std::cerr << "error: table needs --preset dhs-improvements or --lambda/--m/--n-from/--n-to\n";
    return 2;
}

int cmd_construct(long long k, long long lambda, long long m, long long n, const std::string& family,
                  long long budget, unsigned seed, const std::string& out_path, Output& out) {
    ConstructResult r = family == "B" ? construct_B_witness(k, lambda, m, n, budget, seed)
                                      : construct_A_witness(k, lambda, m, n, budget, seed);
    bool ok = r.status == ConstructStatus::Success;
    out.tsv_header_lines = {"zarank construct"};
    out.tsv.push_back({"status", "stage", "detail", "edges", "total_degree"});
    out.tsv.push_back({ok ? "success" : (r.status == ConstructStatus::BudgetExhausted ? "budget" : "failure"),
                       ok ? "-" : r.stage, ok ? "-" : r.detail,
                       ok ? std::to_string(r.witness.edge_total()) : "-",
                       ok ? std::to_string(r.witness.total_degree()) : "-"});
    out.payload = {{"query",
                    {{"k", k}, {"lambda", lambda}, {"m", m}, {"n", n}, {"family", family}, {"seed", seed}}},
                   {"result",
                    {{"ok", ok},
                     {"stage", ok ? "" : r.stage},
                     {"detail", ok ? "" : r.detail},
                     {"edges", ok ? r.witness.edge_total() : 0},
                     {"total_degree", ok ? r.witness.total_degree() : 0}}}};
    out.emit();
    if (ok && !out_path.empty()) write_witness_file(out_path, r.witness, lambda);
    if (r.status == ConstructStatus::BudgetExhausted) return 3;
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& in_path, long long k, long long lambda, long long n,
               const std::string& family, Output& out) {
    long long file_lambda = 0;
    Hypergraph h = read_witness_file(in_path, &file_lambda);
    long long lam = lambda > 0 ? lambda : file_lambda;
    bool ok = false;
    std::string failure;
    if (family == "B") {
        auto lin = is_lambda_linear(h, lam);
        Int target = bound_B(k, lam, h.m, n).floor();
        if (!lin.linear)
            failure = "not lambda-linear at (" + std::to_string(lin.u) + "," + std::to_string(lin.v) + ")";
        else if (h.edge_total() != n)
            failure = "edge count " + std::to_string(h.edge_total()) + " != " + std::to_string(n);
        else if (Int(static_cast<long>(h.total_degree())) != target)
            failure = "total degree " + std::to_string(h.total_degree()) + " != floor bound " + target.get_str();
        else
            ok = true;
    } else {
        WitnessCheck w = verify_witness(h, k, lam, h.m, n);
        ok = w.ok;
        failure = w.failure;
    }
    out.tsv_header_lines = {"zarank verify"};
    out.tsv.push_back({"verified", "m", "edges", "total_degree", "detail"});
    out.tsv.push_back({ok ? "true" : "false", std::to_string(h.m), std::to_string(h.edge_total()),
                       std::to_string(h.total_degree()), ok ? "-" : failure});
    out.payload = {{"query", {{"in", in_path}, {"k", k}, {"lambda", lam}, {"n", n}, {"family", family}}},
                   {"result",
                    {{"verified", ok},
                     {"m", h.m},
                     {"edges", h.edge_total()},
                     {"total_degree", h.total_degree()},
                     {"detail", ok ? "" : failure}}}};
    out.emit();
    return ok ? 0 : 1;
}

int cmd_oracle(long long lambda, int m, long long n, long long budget, const std::string& out_path,
               Output& out) {
    OracleTask t;
    t.lambda = lambda;
    t.m = m;
    t.n = n;
    t.node_budget = budget;
    OracleResult r = exact_z(t);
    out.tsv_header_lines = {"zarank oracle", "provenance: canonical branch-and-bound ground truth"};
    out.tsv.push_back({"lambda", "m", "n", "value", "exact", "nodes"});
    out.tsv.push_back({std::to_string(lambda), std::to_string(m), std::to_string(n),
                       std::to_string(r.value), r.exact ? "true" : "false", std::to_string(r.nodes)});
    out.payload = {{"query", {{"lambda", lambda}, {"m", m}, {"n", n}}},
                   {"result", {{"value", r.value}, {"exact", r.exact}, {"nodes", r.nodes}}}};
    out.emit();
    if (!out_path.empty()) write_witness_file(out_path, r.witness, lambda);
    return r.exact ? 0 : 3;
}

int cmd_scan(long long lambda, int m, long long n_from, long long n_to, long long budget, Output& out) {
    auto rows = scan_exact(lambda, m, n_from, n_to, budget);
    out.tsv_header_lines = {"zarank scan"};
    out.tsv.push_back({"n", "value", "exact"});
    ordered_json jrows = ordered_json::array();
    bool all_exact = true;
    for (const auto& r : rows) {
        out.tsv.push_back({std::to_string(r.n), std::to_string(r.value), r.exact ? "true" : "false"});
        jrows.push_back({{"n", r.n}, {"value", r.value}, {"exact", r.exact}});
        all_exact = all_exact && r.exact;
    }
    out.payload = {{"query", {{"lambda", lambda}, {"m", m}, {"n_from", n_from}, {"n_to", n_to}}},
                   {"result", jrows}};
    out.emit();
    return all_exact ? 0 : 3;
}

int cmd_design(long long k, long long lambda, const std::string& catalog, long long budget,
               const std::string& out_path, Output& out) {
    DesignResult r = symmetric_design(k, lambda, catalog, budget);
    out.tsv_header_lines = {"zarank design"};
    out.tsv.push_back({"k", "lambda", "h", "status", "blocks", "source"});
    out.tsv.push_back({std::to_string(k), std::to_string(lambda), std::to_string(r.h), to_string(r.status),
                       r.status == DesignStatus::Exists ? std::to_string(r.design.edge_total()) : "-",
                       r.source});
    out.payload = {{"query", {{"k", k}, {"lambda", lambda}}},
                   {"result",
                    {{"h", r.h},
                     {"status", to_string(r.status)},
                     {"blocks", r.status == DesignStatus::Exists ? r.design.edge_total() : 0},
                     {"source", r.source}}}};
    out.emit();
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << design_to_catalog_json(k, lambda, r);
    }
    if (r.status == DesignStatus::Unknown)
        return r.source.find("budget") != std::string::npos ? 3 : 1;
    return 0;
}

int cmd_predicates(long long k, long long lambda, long long m, long long n, Output& out) {
    AchievabilityVerdict v = not_achieved(k, lambda, m, n);
    out.tsv_header_lines = {"zarank predicates"};
    out.tsv.push_back({"status", "clause", "design_k", "design_lambda", "design_h", "detail"});
    out.tsv.push_back({to_string(v.status), std::to_string(v.clause), std::to_string(v.design_k),
                       std::to_string(v.design_lambda), v.design_h.str(), v.detail});
    out.payload = {{"query", {{"k", k}, {"lambda", lambda}, {"m", m}, {"n", n}}},
                   {"result",
                    {{"status", to_string(v.status)},
                     {"clause", v.clause},
                     {"design_k", v.design_k},
                     {"design_lambda", v.design_lambda},
                     {"design_h", v.design_h.str()},
                     {"detail", v.detail}}}};
    out.emit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Zarankiewicz bounds, witnesses and oracles for Z_{2,lambda+1}(m,n)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "tsv";
    bool no_header = false;
    app.add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    app.add_flag("--no-header", no_header);

    long long k = 0, lambda = 1, m = 0, n = 0, n_from = 0, n_to = 0, budget = 0;
    unsigned seed = 0;
    std::string family, preset, in_path, out_path;
    std::string catalog = std::string(ZARANK_DATA_DIR) + "/designs";

    auto* c_bounds = app.add_subcommand("bounds", "best or forced bound for (lambda, m, n)");
    c_bounds->add_option("--lambda", lambda)->required();
    c_bounds->add_option("--m", m)->required();
    c_bounds->add_option("--n", n)->required();
    c_bounds->add_option("--k", k);
    c_bounds->add_option("--family", family)->check(CLI::IsMember({"A", "B"}));

    auto* c_table = app.add_subcommand("table", "bound tables (preset or explicit range)");
    c_table->add_option("--preset", preset)->check(CLI::IsMember({"dhs-improvements"}));
    c_table->add_option("--lambda", lambda);
    c_table->add_option("--m", m);
    c_table->add_option("--n-from", n_from);
    c_table->add_option("--n-to", n_to);

    auto* c_construct = app.add_subcommand("construct", "build a floor-achieving witness");
    c_construct->add_option("--k", k)->required();
    c_construct->add_option("--lambda", lambda)->required();
    c_construct->add_option("--m", m)->required();
    c_construct->add_option("--n", n)->required();
    c_construct->add_option("--family", family)->required()->check(CLI::IsMember({"A", "B"}));
    c_construct->add_option("--budget", budget);
    c_construct->add_option("--seed", seed);
    c_construct->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "verify a witness file");
    c_verify->add_option("--in", in_path)->required();
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--lambda", lambda);
    c_verify->add_option("--n", n)->required();
    c_verify->add_option("--family", family)->check(CLI::IsMember({"A", "B"}));

    auto* c_oracle = app.add_subcommand("oracle", "exact maximum by branch-and-bound");
    c_oracle->add_option("--lambda", lambda)->required();
    c_oracle->add_option("--m", m)->required();
    c_oracle->add_option("--n", n)->required();
    c_oracle->add_option("--budget", budget);
    c_oracle->add_option("--out", out_path);

    auto* c_scan = app.add_subcommand("scan", "oracle over a range of n");
    c_scan->add_option("--lambda", lambda)->required();
    c_scan->add_option("--m", m)->required();
    c_scan->add_option("--n-from", n_from)->required();
    c_scan->add_option("--n-to", n_to)->required();
    c_scan->add_option("--budget", budget);

    auto* c_design = app.add_subcommand("design", "symmetric design lookup/construction");
    c_design->add_option("--k", k)->required();
    c_design->add_option("--lambda", lambda)->required();
    c_design->add_option("--catalog", catalog);
    c_design->add_option("--budget", budget);
    c_design->add_option("--out", out_path);

    auto* c_pred = app.add_subcommand("predicates", "non-achievability verdicts");
    c_pred->add_option("--k", k)->required();
    c_pred->add_option("--lambda", lambda)->required();
    c_pred->add_option("--m", m)->required();
    c_pred->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.json = format == "json";
    out.header = !no_header;
    try {
        long long search_budget = budget > 0 ? budget : 10'000'000;
        long long oracle_budget = budget > 0 ? budget : 100'000'000;
        if (app.got_subcommand(c_bounds)) return cmd_bounds(lambda, m, n, k, family, out);
        if (app.got_subcommand(c_table)) return cmd_table(preset, lambda, m, n_from, n_to, out);
        if (app.got_subcommand(c_construct))
            return cmd_construct(k, lambda, m, n, family, search_budget, seed, out_path, out);
        if (app.got_subcommand(c_verify)) return cmd_verify(in_path, k, lambda, n, family, out);
        if (app.got_subcommand(c_oracle))
            return cmd_oracle(lambda, static_cast<int>(m), n, oracle_budget, out_path, out);
        if (app.got_subcommand(c_scan))
            return cmd_scan(lambda, static_cast<int>(m), n_from, n_to, oracle_budget, out);
        if (app.got_subcommand(c_design)) return cmd_design(k, lambda, catalog, search_budget, out_path, out);
        if (app.got_subcommand(c_pred)) return cmd_predicates(k, lambda, m, n, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
