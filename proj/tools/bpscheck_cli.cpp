// Command-line front end: verification checks, series extraction, counting
// oracles and Kac polynomials, with machine-readable JSON reports.

#include "bpscheck/checks.hpp"
#include "bpscheck/kac.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bps;

struct WindowFlags {
    int tmax = 4;
    int qmin = -20;
    int qmax = 40;

    TruncationPolicy policy() const { return TruncationPolicy(tmax, 2 * qmin, 2 * qmax); }
};

void add_window_flags(CLI::App* cmd, WindowFlags& w) {
    cmd->add_option("--tmax", w.tmax, "t-truncation order");
    cmd->add_option("--qmin", w.qmin, "lowest retained q-exponent");
    cmd->add_option("--qmax", w.qmax, "highest retained q-exponent");
}

void write_report(const std::string& path, const std::string& json) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write report file: " + path);
    out << json << "\n";
}

int emit_check(const CheckReport& report, const std::string& report_path) {
    std::string json = report_to_json(report);
    write_report(report_path, json);
    std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.name;
    if (report.witness)
        std::cout << "  first mismatch at t^" << report.witness->n << " q^("
                  << report.witness->e2 << "/2): " << report.witness->lhs << " vs "
                  << report.witness->rhs;
    if (!report.message.empty()) std::cout << "  (" << report.message << ")";
    std::cout << "  [" << report.seconds << "s]\n";
    if (report_path.empty()) std::cout << json << "\n";
    return report.pass ? 0 : 1;
}

// Builds 1 + sum_r t^r * stack series for ranks <= rmax.
GradedSeries assemble_stack_series(int genus, int rmax, const TruncationPolicy& pol) {
    GradedSeries acc = GradedSeries::unit(pol);
    for (int r = 1; r <= rmax; ++r) {
        GradedSeries s = (genus == 0)
                             ? pt_mod_glr_bm_vir_series(r, 0, pol)
                             : stack_count_series(genus, r, 0, betti_stack_vdim(genus, r), pol);
        acc = acc + s.shifted(r, 0);
    }
    return acc;
}

// Scalar central element zeta_r^d inside GL_r(F_q); needs q = 1 mod r for a
// nontrivial twist.
int central_scalar(const GroupModel& G, int r, int d) {
    int d_eff = ((d % r) + r) % r;
    if (d_eff == 0) return G.identity();
    const Fq& F = G.field();
    for (int z = 1; z < F.q(); ++z) {
        int pow = 1;
        int order = 0;
        do {
            pow = F.mul(pow, z);
            ++order;
        } while (pow != 1);
        if (order == r) {
            int value = 1;
            for (int i = 0; i < d_eff; ++i) value = F.mul(value, z);
            return G.scalar(value);
        }
    }
    throw Error("no primitive root of unity of order " + std::to_string(r) + " in F_q (need q = 1 mod r)");
}

std::vector<long> parse_csv_longs(const std::string& text) {
    std::vector<long> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(std::stol(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::stol(cur));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graded-dimension identities for character variety and Higgs stacks"};
    app.require_subcommand(1);

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand("check", "run a verification job");
    check->require_subcommand(1);
    struct {
        WindowFlags window;
        int genus = 0;
        int rmax = 2;
        long budget = 200000;
        std::string report;
        std::string corrupt;
    } ck;
    std::vector<CLI::App*> check_cmds;
    for (const char* name : {"genus0", "genus1", "echeck", "psws"}) {
        auto* sub = check->add_subcommand(name);
        sub->add_option("--genus", ck.genus, "genus (echeck/psws)");
        sub->add_option("--rmax", ck.rmax, "largest rank checked");
        sub->add_option("--budget", ck.budget, "group enumeration budget");
        sub->add_option("--report", ck.report, "write JSON report here");
        sub->add_option("--corrupt", ck.corrupt, "self-test fixture corruption")->group("");
        add_window_flags(sub, ck.window);
        check_cmds.push_back(sub);
    }

    // ---- extract --------------------------------------------------------
    auto* extract = app.add_subcommand("extract", "extract BPS or IC series from stack counts");
    extract->require_subcommand(1);
    struct {
        WindowFlags window;
        int genus = 2;
        int rmax = 2;
        std::string report;
    } ex;
    for (const char* name : {"bps", "ic"}) {
        auto* sub = extract->add_subcommand(name);
        sub->add_option("--genus", ex.genus, "genus");
        sub->add_option("--rmax", ex.rmax, "largest rank");
        sub->add_option("--report", ex.report, "write series JSON here");
        add_window_flags(sub, ex.window);
    }

    // ---- count ----------------------------------------------------------
    auto* count = app.add_subcommand("count", "relation-variety point counts");
    struct {
        int genus = 1;
        int rank = 2;
        int twist = 0;
        std::string qs = "2,3";
        std::string oracle = "both";
        std::string format = "csv";
        std::string report;
        long budget = 200000;
        long tuples = 100000000;
    } cn;
    count->add_option("--genus", cn.genus, "genus g of the surface relation");
    count->add_option("--rank", cn.rank, "rank r");
    count->add_option("--twist", cn.twist, "central twist d");
    count->add_option("--qs", cn.qs, "comma-separated prime powers");
    count->add_option("--oracle", cn.oracle, "brute | frobenius | both");
    count->add_option("--format", cn.format, "csv | json");
    count->add_option("--report", cn.report, "write JSON rows here");
    count->add_option("--budget", cn.budget, "group enumeration budget");
    count->add_option("--tuple-budget", cn.tuples, "brute-force tuple budget");

    // ---- kac ------------------------------------------------------------
    auto* kac = app.add_subcommand("kac", "Kac polynomial of a quiver");
    struct {
        std::string quiver;
        std::string dim = "1";
        std::string qs;
        long budget = 200000;
        std::string report;
    } kc;
    kac->add_option("--quiver", kc.quiver, "quiver description file")->required();
    kac->add_option("--dim", kc.dim, "dimension vector, comma separated");
    kac->add_option("--qs", kc.qs, "sample prime powers (default: chosen from the degree bound)");
    kac->add_option("--budget", kc.budget, "group enumeration budget");
    kac->add_option("--report", kc.report, "write JSON report here");

    // ---- series ---------------------------------------------------------
    auto* series = app.add_subcommand("series", "emit a building-block series as JSON");
    struct {
        WindowFlags window;
        std::string kind = "bcstar";
        int genus = 0;
        int rank = 1;
        int twist = 1;
        std::string report;
    } se;
    series->add_option("kind", se.kind, "bcstar | glr | stack | twisted")->required();
    series->add_option("--genus", se.genus, "genus");
    series->add_option("--rank", se.rank, "rank");
    series->add_option("--twist", se.twist, "twist d (twisted kind)");
    series->add_option("--report", se.report, "write series JSON here");
    add_window_flags(series, se.window);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            CheckSpec spec;
            spec.genus = ck.genus;
            spec.r_max = ck.rmax;
            spec.window = ck.window.policy();
            spec.order_budget = ck.budget;
            spec.corruption = ck.corrupt;
            CheckReport report;
            if (check_cmds[0]->parsed()) {
                spec.genus = 0;
                spec.name = "genus0";
                report = check_genus0_euler(spec);
            } else if (check_cmds[1]->parsed()) {
                spec.genus = 1;
                spec.name = "genus1";
                report = check_genus1_betti(spec);
            } else if (check_cmds[2]->parsed()) {
                spec.name = "echeck";
                report = check_echeck(spec);
            } else {
                spec.name = "psws";
                report = check_psws_genus01(spec);
            }
            return emit_check(report, ck.report);
        }

        if (extract->parsed()) {
            TruncationPolicy assert_pol(ex.rmax, 2 * ex.window.qmin, 2 * ex.window.qmax);
            int margin = 2 * (4 * std::max(1, ex.genus) + 2) * ex.rmax + 12;
            TruncationPolicy wide = assert_pol.widened(margin, margin);
            GradedSeries stack = assemble_stack_series(ex.genus, ex.rmax, wide);
            bool want_ic = extract->get_subcommands().front()->get_name() == "ic";
            GradedSeries out = want_ic ? extract_ic(stack) : extract_bps(stack);
            std::string json = series_to_json(out.restricted(assert_pol), 2);
            write_report(ex.report, json);
            std::cout << json << "\n";
            return 0;
        }

        if (count->parsed()) {
            nlohmann::json rows = nlohmann::json::array();
            std::ostringstream csv;
            csv << "q,count,oracle\n";
            for (long q : parse_csv_longs(cn.qs)) {
                if (cn.oracle == "brute" || cn.oracle == "both") {
                    GroupModel G = build_group(cn.rank, q, cn.budget);
                    Int c = brute_relation_count(G, cn.genus, central_scalar(G, cn.rank, cn.twist),
                                                 cn.tuples);
                    csv << q << "," << c.get_str() << ",brute\n";
                    rows.push_back({{"q", q}, {"count", c.get_str()}, {"oracle", "brute"}});
                }
                if (cn.oracle == "frobenius" || cn.oracle == "both") {
                    RationalFunctionQ f = frobenius_count(cn.rank, cn.genus, cn.twist);
                    Int c(f.eval(Rat(q)).get_num());
                    csv << q << "," << c.get_str() << ",frobenius\n";
                    rows.push_back({{"q", q}, {"count", c.get_str()}, {"oracle", "frobenius"}});
                }
            }
            nlohmann::json j = {{"genus", cn.genus},
                                {"rank", cn.rank},
                                {"twist", cn.twist},
                                {"fit", cn.rank <= 2 ? frobenius_count(cn.rank, cn.genus, cn.twist).str()
                                                     : std::string("n/a")},
                                {"rows", rows}};
            write_report(cn.report, j.dump(2));
            if (cn.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << csv.str();
            return 0;
        }

        if (kac->parsed()) {
            Quiver Q = load_quiver(kc.quiver);
            DimVector d = parse_csv_longs(kc.dim);
            KacOptions opts;
            opts.group_order_cap = kc.budget;
            std::vector<long> samples;
            if (!kc.qs.empty()) {
                samples = parse_csv_longs(kc.qs);
            } else {
                long bound = std::max<long>(0, 1 - euler_form(Q, d, d));
                static const long pool[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19};
                for (long q : pool) {
                    if (static_cast<long>(samples.size()) >= bound + 2) break;
                    samples.push_back(q);
                }
            }
            KacPolynomial a = kac_polynomial(Q, d, samples, opts);
            std::string rendered = poly_to_string(a.poly);
            nlohmann::json j = {{"quiver", kc.quiver}, {"dim", d}, {"samples", samples},
                                {"kac_polynomial", rendered}};
            write_report(kc.report, j.dump(2));
            std::cout << rendered << "\n";
            return 0;
        }

        if (series->parsed()) {
            TruncationPolicy pol = se.window.policy();
            GradedSeries out(pol);
            if (se.kind == "bcstar") {
                out = bcstar_series(pol);
            } else if (se.kind == "glr") {
                out = pt_mod_glr_bm_vir_series(se.rank, se.genus, pol);
            } else if (se.kind == "stack") {
                out = (se.genus == 0) ? pt_mod_glr_bm_vir_series(se.rank, 0, pol)
                                      : stack_count_series(se.genus, se.rank, 0,
                                                           betti_stack_vdim(se.genus, se.rank), pol);
            } else if (se.kind == "twisted") {
                out = smooth_twisted_series(se.genus, se.rank, se.twist, pol);
            } else {
                throw Error("unknown series kind: " + se.kind);
            }
            std::string json = series_to_json(out, 2);
            write_report(se.report, json);
            std::cout << json << "\n";
            return 0;
        }
    } catch (const std::exception& ex2) {
        std::cerr << "error: " << ex2.what() << "\n";
        return 2;
    }
    return 0;
}
