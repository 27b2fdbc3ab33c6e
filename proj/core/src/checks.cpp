#include "bpscheck/checks.hpp"

#include "bpscheck/plethysm.hpp"

#include <nlohmann/json.hpp>

#include <chrono>

namespace bps {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckReport finish(CheckReport report, const Stopwatch& watch) {
    report.seconds = watch.seconds();
    return report;
}

// Runs the body, turning thrown errors into failed reports with a message.
template <class Body>
CheckReport guarded(const char* name, const CheckSpec& spec, Body body) {
    Stopwatch watch;
    CheckReport report;
    report.name = name;
    report.spec = spec;
    try {
        body(report);
    } catch (const std::exception& ex) {
        report.pass = false;
        report.message = ex.what();
    }
    return finish(std::move(report), watch);
}

} // namespace

std::optional<Witness> compare_series(const GradedSeries& lhs, const GradedSeries& rhs,
                                      const TruncationPolicy& pol) {
    GradedSeries a = lhs.restricted(pol);
    GradedSeries b = rhs.restricted(pol);
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return Witness{ia->first.first, ia->first.second, ia->second.get_str(), "0"};
        }
        if (ia == ea || ib->first < ia->first) {
            return Witness{ib->first.first, ib->first.second, "0", ib->second.get_str()};
        }
        if (ia->second != ib->second) {
            return Witness{ia->first.first, ia->first.second, ia->second.get_str(),
                           ib->second.get_str()};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

GradedSeries extract_bps(const GradedSeries& stack_series) {
    const TruncationPolicy& pol = stack_series.policy();
    GradedSeries one_minus_q = GradedSeries::make_series(pol, {{0, 0, 1}, {0, 2, -1}});
    return one_minus_q * plog(stack_series);
}

GradedSeries extract_ic(const GradedSeries& stack_series) {
    GradedSeries bps = extract_bps(stack_series);
    const TruncationPolicy& pol = stack_series.policy();
    return GradedSeries::unit(pol) - invert_geometric(pexp(bps));
}

CheckReport check_genus0_euler(const CheckSpec& spec) {
    return guarded("genus0", spec, [&](CheckReport& report) {
        if (spec.genus != 0) throw Error("check_genus0_euler: spec.genus must be 0");
        if (spec.r_max < 1) throw Error("check_genus0_euler: r_max must be >= 1");
        TruncationPolicy assert_pol(spec.r_max, std::max(0, spec.window.e2_min),
                                    spec.window.e2_max);
        if (assert_pol.e2_max < 2 * spec.r_max)
            throw WindowError("check_genus0_euler: window too small to see rank r_max");
        report.oracles = {"lhs: 1/|GL_r| reflected through the dictionary",
                          "rhs: plethystic exponential of the q-shift tower"};

        // Counting route: reflected stack counts of pt/GL_r.
        GradedSeries lhs = GradedSeries::unit(assert_pol);
        for (int r = 1; r <= spec.r_max; ++r)
            lhs = lhs + pt_mod_glr_bm_vir_series(r, 0, assert_pol).shifted(r, 0);
        if (spec.corruption == "lhs")
            lhs = lhs + GradedSeries::monomial(assert_pol, 1, 0, 1);

        // One class per rank in degree zero.
        for (int r = 1; r <= spec.r_max; ++r) {
            Int c = lhs.coeff(r, 0);
            if (c != 1) {
                report.pass = false;
                report.witness = Witness{r, 0, c.get_str(), "1"};
                return;
            }
        }

        // Plethystic route.
        GradedSeries rhs = pexp(bcstar_series(assert_pol).shifted(1, 0));

        report.witness = compare_series(lhs, rhs, assert_pol);
        report.pass = !report.witness.has_value();
    });
}

CheckReport check_genus1_betti(const CheckSpec& spec) {
    return guarded("genus1", spec, [&](CheckReport& report) {
        if (spec.genus != 1) throw Error("check_genus1_betti: spec.genus must be 1");
        if (spec.r_max < 1 || spec.r_max > 3)
            throw Error("check_genus1_betti: r_max must be in [1,3]");
        TruncationPolicy assert_pol(spec.r_max, spec.window.e2_min, spec.window.e2_max);
        int margin = 2 * (3 * spec.r_max + 6);
        TruncationPolicy wide = assert_pol.widened(margin, margin);
        report.oracles = {"lhs: brute-force class counts fitted to polynomials"
                          " (rcf classification for rank 3)",
                          "rhs: torus fixture through dictionary and pexp"};

        // Counting route: class-count polynomials, reflected.
        GradedSeries lhs = GradedSeries::unit(wide);
        for (int r = 1; r <= spec.r_max; ++r) {
            IntPoly classes = (r <= 2)
                                  ? class_count_poly_from_groups(r, {2, 3, 4, 5}, spec.order_budget)
                                  : class_count_poly_via_rcf(r, {2, 3, 4, 5, 7});
            if (r == 1 && !(classes == IntPoly({-1, 1})))
                throw Error("genus1 fixture: rank-1 class polynomial must be q - 1");
            if (r == 2 && !(classes == IntPoly({-1, 0, 1})))
                throw Error("genus1 fixture: rank-2 class polynomial must be q^2 - 1");
            VirtualDimension vdim{spec.corruption == "reflection_off" ? 1 : 0};
            lhs = lhs + bm_vir_from_count(RationalFunctionQ(classes), vdim, wide).shifted(r, 0);
        }

        // Plethystic route from the torus closed form (q-1)^2.
        IntPoly torus = (spec.corruption == "torus_sign") ? IntPoly({1, 2, 1}) : IntPoly({1, -2, 1});
        GradedSeries package =
            bm_vir_from_count(RationalFunctionQ(torus), VirtualDimension{2}, wide) *
            bcstar_series(wide);
        GradedSeries arg(wide);
        for (int r = 1; r <= spec.r_max; ++r) arg = arg + package.shifted(r, 0);
        GradedSeries rhs = pexp(arg);

        report.witness = compare_series(lhs, rhs, assert_pol);
        report.pass = !report.witness.has_value();
    });
}

CheckReport check_echeck(const CheckSpec& spec) {
    return guarded("echeck", spec, [&](CheckReport& report) {
        if (spec.genus < 0) throw Error("check_echeck: genus must be >= 0");
        if (spec.r_max < 1 || spec.r_max > 2)
            throw Error("check_echeck: r_max must be 1 or 2 (no GL_3 character table)");
        TruncationPolicy assert_pol(spec.r_max, spec.window.e2_min, spec.window.e2_max);
        int depth = 2 * (4 * spec.genus + 2) * spec.r_max + 12;
        TruncationPolicy wide = assert_pol.widened(depth, depth);
        report.oracles = {"lhs: Frobenius character sums for the relation variety",
                          "rhs: twisted smooth counts through dictionary and pexp"};

        // Counting route: reflected stack counts per rank.
        GradedSeries lhs = GradedSeries::unit(wide);
        for (int r = 1; r <= spec.r_max; ++r)
            lhs = lhs +
                  stack_count_series(spec.genus, r, 0, betti_stack_vdim(spec.genus, r), wide,
                                     CountOracle::Frobenius)
                      .shifted(r, 0);

        // Plethystic route: twisted smooth counts, possibly with a corrupted
        // central sign in the rank-2 character data.
        GradedSeries arg(wide);
        GradedSeries tower = bcstar_series(wide);
        for (int r = 1; r <= spec.r_max; ++r) {
            GradedSeries twisted(wide);
            if (r == 2 && spec.corruption == "char_sign") {
                CharacterDegreeData data = CharacterDegreeData::gl2(1).with_flipped_sign(0);
                RationalFunctionQ relations = frobenius_count(2, spec.genus, 1, data);
                RationalFunctionQ count = relations * RationalFunctionQ(IntPoly({-1, 1})) /
                                          RationalFunctionQ(glr_order_poly(2));
                twisted = bm_vir_from_count(count, twisted_smooth_vdim(spec.genus, 2), wide);
            } else {
                RationalFunctionQ count = smooth_twisted_count(spec.genus, r, 1);
                if (count.is_zero()) continue; // empty twisted moduli (genus 0, r >= 2)
                twisted = bm_vir_from_count(count, twisted_smooth_vdim(spec.genus, r), wide);
            }
            arg = arg + (twisted * tower).shifted(r, 0);
        }
        GradedSeries rhs = pexp(arg);

        report.witness = compare_series(lhs, rhs, assert_pol);
        report.pass = !report.witness.has_value();
    });
}

CheckReport check_psws_genus01(const CheckSpec& spec) {
    return guarded("psws", spec, [&](CheckReport& report) {
        if (spec.genus != 0 && spec.genus != 1)
            throw Error("check_psws_genus01: genus must be 0 or 1");
        if (spec.r_max < 1) throw Error("check_psws_genus01: r_max must be >= 1");
        int deg_cap = spec.window.e2_max;
        if (deg_cap < 4) throw WindowError("check_psws_genus01: degree window too small");
        report.oracles =
            spec.genus == 0
                ? std::vector<std::string>{"weight: reflected pt/GL_r counts (purity)",
                                           "combined: partition combinatorics"}
                : std::vector<std::string>{"weight: torus profile under Sym",
                                           "combined: elliptic perverse profile under Sym"};

        FiltrationTables tables =
            spec.genus == 0 ? genus0_tables(spec.r_max, deg_cap) : genus1_tables(spec.r_max, deg_cap);
        if (spec.corruption == "table_shift")
            tables.combined = tables.combined.with_shifted_indices(spec.r_max, 1);

        // Structural table invariants come before any equality testing.
        tables.weight.validate();
        tables.perverse.validate();
        tables.less_perverse.validate();
        tables.combined.validate();

        if (spec.genus == 1) {
            // Rank-1 anchor: the (1,2,1) torus/elliptic package.
            static const long long expect[3] = {1, 2, 1};
            for (int d = 0; d <= 2; ++d) {
                if (tables.weight.dim(1, d, 2 * d) != expect[d])
                    throw Error("genus1 fixture: rank-1 weight profile is not (1,2,1)");
                if (spec.corruption.empty() && tables.combined.dim(1, d, d) != expect[d])
                    throw Error("genus1 fixture: rank-1 combined profile is not (1,2,1)");
            }
        }

        auto mismatch = compare_weight_vs_combined(tables.weight, tables.combined);
        if (mismatch) {
            const TableWitness& w = *mismatch;
            report.witness = Witness{w.rank, w.deg,
                                     "dim Gr^W_{2i} = " + std::to_string(w.lhs) + " at i=" +
                                         std::to_string(w.idx),
                                     "dim Gr^F_i = " + std::to_string(w.rhs)};
            report.pass = false;
            return;
        }
        report.pass = true;
    });
}

std::string report_to_json(const CheckReport& report, int indent) {
    nlohmann::json j;
    j["name"] = report.name;
    j["params"] = {{"genus", report.spec.genus},
                   {"r_max", report.spec.r_max},
                   {"window",
                    {{"t_max", report.spec.window.t_max},
                     {"e2_min", report.spec.window.e2_min},
                     {"e2_max", report.spec.window.e2_max}}},
                   {"order_budget", report.spec.order_budget},
                   {"tuple_budget", report.spec.tuple_budget}};
    if (!report.spec.corruption.empty()) j["params"]["corruption"] = report.spec.corruption;
    j["pass"] = report.pass;
    if (report.witness) {
        j["witness"] = {{"t_degree", report.witness->n},
                        {"e2", report.witness->e2},
                        {"q_exponent", std::to_string(report.witness->e2) + "/2"},
                        {"lhs", report.witness->lhs},
                        {"rhs", report.witness->rhs}};
    }
    j["timings"] = {{"seconds", report.seconds}};
    j["oracles"] = report.oracles;
    if (!report.message.empty()) j["message"] = report.message;
    return j.dump(indent);
}

} // namespace bps
