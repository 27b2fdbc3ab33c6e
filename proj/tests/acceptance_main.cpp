// Acceptance suite: one line per criterion, exit status 0 only if every
// criterion holds at its stated tolerance (all identities are exact; the
// tolerances are runtime ceilings).

#include "bpscheck/checks.hpp"
#include "bpscheck/kac.hpp"
#include "bpscheck/plethysm.hpp"

#include "test_util.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace bps;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = false;
    double seconds = 0.0;
    std::string note;
};

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void run(std::vector<Criterion>& all, int id, const std::string& label, double time_limit,
         const std::function<void(Criterion&)>& body) {
    Criterion c{id, label};
    double t0 = now_seconds();
    try {
        body(c);
        c.pass = true;
    } catch (const std::exception& ex) {
        c.pass = false;
        c.note = ex.what();
    }
    c.seconds = now_seconds() - t0;
    if (c.pass && time_limit > 0 && c.seconds > time_limit) {
        c.pass = false;
        c.note = "runtime limit " + std::to_string(time_limit) + "s exceeded";
    }
    all.push_back(std::move(c));
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error(what);
}

void require_report(const CheckReport& r) {
    if (r.pass) return;
    std::ostringstream msg;
    msg << r.name << " failed";
    if (r.witness)
        msg << " at t^" << r.witness->n << " q^(" << r.witness->e2 << "/2): " << r.witness->lhs
            << " vs " << r.witness->rhs;
    if (!r.message.empty()) msg << " (" << r.message << ")";
    throw Error(msg.str());
}

SpectrumTuple elem_of(const std::vector<Rat>& eigenvalues) {
    std::vector<Rat> e(eigenvalues.size() + 1, Rat(0));
    e[0] = 1;
    size_t used = 0;
    for (const Rat& x : eigenvalues) {
        ++used;
        for (size_t k = used; k >= 1; --k) e[k] = e[k] + x * e[k - 1];
    }
    return SpectrumTuple(std::vector<Rat>(e.begin() + 1, e.end()));
}

} // namespace

int main() {
    std::vector<Criterion> all;

    run(all, 1, "genus-0 Euler identity, r <= 6 on q <= 20", 1.0, [](Criterion&) {
        CheckSpec spec;
        spec.name = "genus0";
        spec.genus = 0;
        spec.r_max = 6;
        spec.window = TruncationPolicy(6, 0, 40);
        require_report(check_genus0_euler(spec));
    });

    run(all, 2, "genus-1 PBW identity, r <= 2 (stretch r = 3)", 60.0, [](Criterion& c) {
        CheckSpec spec;
        spec.name = "genus1";
        spec.genus = 1;
        spec.r_max = 2;
        spec.window = TruncationPolicy(4, -24, 40);
        require_report(check_genus1_betti(spec));
        spec.r_max = 3;
        require_report(check_genus1_betti(spec));
        c.note = "rank-3 stretch included";
    });

    run(all, 3, "Frobenius vs brute force, g = 2, r = 2", 120.0, [](Criterion& c) {
        RationalFunctionQ untwisted = frobenius_count(2, 2, 0);
        std::ostringstream note;
        for (long q : {2L, 3L}) {
            GroupModel G = build_group(2, q);
            Int brute = brute_relation_count(G, 2, G.identity());
            Int frob(untwisted.eval(Rat(q)).get_num());
            require(brute == frob, "untwisted mismatch at q = " + std::to_string(q));
            note << "q=" << q << ": " << brute.get_str() << "  ";
        }
        GroupModel G3 = build_group(2, 3);
        Int brute = brute_relation_count(G3, 2, G3.minus_identity());
        Int frob(frobenius_count(2, 2, 1).eval(Rat(3)).get_num());
        require(brute == frob, "twisted mismatch at q = 3");
        note << "twisted q=3: " << brute.get_str();
        c.note = note.str();
    });

    run(all, 4, "genus-2 E-series identity, r <= 2", 300.0, [](Criterion&) {
        CheckSpec spec;
        spec.name = "echeck";
        spec.genus = 2;
        spec.r_max = 2;
        spec.window = TruncationPolicy(2, -40, 80);
        require_report(check_echeck(spec));
    });

    run(all, 5, "Kac polynomial closed forms", 120.0, [](Criterion&) {
        for (long d = 1; d <= 3; ++d) {
            std::vector<long> samples = (d < 3) ? std::vector<long>{2, 3, 5}
                                                : std::vector<long>{2, 3, 4};
            require(kac_polynomial(Quiver::jordan(), {d}, samples).poly == IntPoly({0, 1}),
                    "Jordan quiver at d = " + std::to_string(d));
        }
        for (int g = 1; g <= 3; ++g) {
            std::vector<long> samples{2, 3, 4, 5, 7, 8};
            samples.resize(static_cast<size_t>(g) + 2);
            require(kac_polynomial(Quiver::loops(g), {1}, samples).poly == IntPoly::monomial(1, g),
                    "loop quiver g = " + std::to_string(g));
        }
        require(kac_polynomial(Quiver::a2(), {1, 1}, {2, 3}).poly == IntPoly::constant(1),
                "A2 quiver at (1,1)");
    });

    run(all, 6, "plethystic round trips and free Lie dimensions", 120.0, [](Criterion&) {
        std::mt19937 rng(101);
        for (const TruncationPolicy& pol :
             {TruncationPolicy(8, 0, 24), TruncationPolicy(5, -10, 20)}) {
            for (int iter = 0; iter < 110; ++iter) {
                GradedSeries f = test::random_series(rng, pol, 6, 1, pol.t_max,
                                                     std::max(0, pol.e2_min), 10, 5);
                require(plog(pexp(f)) == f, "plog(pexp) round trip");
                GradedSeries h = GradedSeries::unit(pol) +
                                 test::random_series(rng, pol, 6, 1, pol.t_max,
                                                     std::max(0, pol.e2_min), 10, 5);
                require(pexp(plog(h)) == h, "pexp(plog) round trip");
            }
        }
        TruncationPolicy pol(8, 0, 24);
        for (int iter = 0; iter < 40; ++iter) {
            GradedSeries f = test::random_series(rng, pol, 6, 1, 5, 0, 10, 4);
            require(pexp(free_lie_series(f)) == tensor_series(f), "PBW round trip");
        }
        GradedSeries two = free_lie_series(GradedSeries::monomial(pol, 1, 0, 2));
        for (int n = 1; n <= 8; ++n)
            require(two.coeff(n, 0) == test::necklace_dimension(2, n),
                    "free Lie dimension at degree " + std::to_string(n));
    });

    run(all, 7, "PS=WS tables in genus 0 and 1", 120.0, [](Criterion&) {
        CheckSpec spec;
        spec.name = "psws";
        spec.genus = 0;
        spec.r_max = 4;
        spec.window = TruncationPolicy(4, -24, 40);
        require_report(check_psws_genus01(spec));
        spec.genus = 1;
        spec.r_max = 2;
        require_report(check_psws_genus01(spec));
        FiltrationTables tables = genus1_tables(1, 8);
        const long long expect[3] = {1, 2, 1};
        for (int d = 0; d <= 2; ++d) {
            require(tables.weight.dim(1, d, 2 * d) == expect[d], "rank-1 weight profile");
            require(tables.combined.dim(1, d, d) == expect[d], "rank-1 combined profile");
        }
    });

    run(all, 8, "IC extraction duality, g = 2, r <= 2", 300.0, [](Criterion&) {
        int genus = 2, rmax = 2;
        TruncationPolicy wide(rmax, -80, 100);
        GradedSeries stack = GradedSeries::unit(wide);
        for (int r = 1; r <= rmax; ++r)
            stack = stack +
                    stack_count_series(genus, r, 0, betti_stack_vdim(genus, r), wide).shifted(r, 0);
        GradedSeries ic = extract_ic(stack);
        for (int r = 1; r <= rmax; ++r) {
            int half = r * r * (genus - 1) + 1;
            require(ic.coeff(r, -2 * half) == 1, "lowest IC class missing");
            for (const auto& [k, c] : ic.terms())
                require(k.first != r || (k.second >= -2 * half && k.second <= 2 * half),
                        "IC support exceeds the duality range");
            for (int e2 = -2 * half; e2 <= 2 * half; e2 += 2) {
                Int a = ic.coeff(r, e2);
                require(a == ic.coeff(r, -e2), "palindromicity");
                Int signed_a = ((e2 / 2 + half) % 2 == 0) ? a : -a;
                require(signed_a >= 0, "sign-normalized positivity");
            }
        }
    });

    run(all, 9, "symmetric-function layer oracles", 120.0, [](Criterion&) {
        // exhaustive small integer eigenvalues, total size <= 6
        auto enumerate = [&](int size, auto&& self, std::vector<Rat>& cur,
                             std::vector<std::vector<Rat>>& out) -> void {
            if (static_cast<int>(cur.size()) == size) {
                out.push_back(cur);
                return;
            }
            for (long v : {-1L, 0L, 1L}) {
                cur.emplace_back(v);
                self(size, self, cur, out);
                cur.pop_back();
            }
        };
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                std::vector<std::vector<Rat>> as, bs;
                std::vector<Rat> scratch;
                enumerate(m, enumerate, scratch, as);
                enumerate(n, enumerate, scratch, bs);
                for (const auto& ea : as)
                    for (const auto& eb : bs) {
                        std::vector<Rat> both = ea;
                        both.insert(both.end(), eb.begin(), eb.end());
                        require(spectrum_cup(elem_of(ea), elem_of(eb)) == elem_of(both),
                                "cup vs multiset union (exhaustive)");
                    }
            }
        // random rational multisets up to total size 6
        std::mt19937 rng(103);
        std::uniform_int_distribution<long> num(-5, 5);
        std::uniform_int_distribution<long> den(1, 4);
        std::uniform_int_distribution<int> len(0, 6);
        for (int iter = 0; iter < 300; ++iter) {
            int m = len(rng);
            int n = len(rng) % (7 - m);
            std::vector<Rat> ea, eb, both;
            auto make_rat = [&]() {
                Rat r(num(rng), den(rng));
                r.canonicalize();
                return r;
            };
            for (int i = 0; i < m; ++i) ea.push_back(make_rat());
            for (int i = 0; i < n; ++i) eb.push_back(make_rat());
            both = ea;
            both.insert(both.end(), eb.begin(), eb.end());
            SpectrumTuple a = elem_of(ea), b = elem_of(eb);
            require(spectrum_cup(a, b) == elem_of(both), "cup vs multiset union (random)");
            require(spectrum_cup(a, b) == spectrum_cup(b, a), "cup commutativity");
            require(power_to_elem(elem_to_power(a), a.rank()) == a, "Newton round trip");
        }
    });

    run(all, 10, "corrupted fixtures fail with localized witnesses", 300.0, [](Criterion&) {
        CheckSpec spec;
        spec.window = TruncationPolicy(4, -24, 40);
        auto expect_witness = [](const CheckReport& r, const char* what) {
            require(!r.pass, std::string(what) + ": corrupted run still passes");
            require(r.witness.has_value(), std::string(what) + ": no witness");
        };
        spec.name = "genus0";
        spec.genus = 0;
        spec.r_max = 4;
        spec.corruption = "lhs";
        expect_witness(check_genus0_euler(spec), "genus0/lhs");
        spec.name = "genus1";
        spec.genus = 1;
        spec.r_max = 2;
        spec.corruption = "reflection_off";
        expect_witness(check_genus1_betti(spec), "genus1/reflection_off");
        spec.corruption = "torus_sign";
        expect_witness(check_genus1_betti(spec), "genus1/torus_sign");
        spec.name = "echeck";
        spec.genus = 2;
        spec.r_max = 2;
        spec.corruption = "char_sign";
        expect_witness(check_echeck(spec), "echeck/char_sign");
        spec.name = "psws";
        spec.genus = 1;
        spec.r_max = 2;
        spec.corruption = "table_shift";
        expect_witness(check_psws_genus01(spec), "psws/table_shift");
    });

    bool all_pass = true;
    for (const Criterion& c : all) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.label
                  << "  [" << c.seconds << "s]";
        if (!c.note.empty()) std::cout << "  -- " << c.note;
        std::cout << "\n";
        all_pass = all_pass && c.pass;
    }
    std::cout << (all_pass ? "acceptance: all criteria hold\n" : "acceptance: FAILURES above\n");
    return all_pass ? 0 : 1;
}
