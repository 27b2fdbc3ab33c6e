#include "bpscheck/plethysm.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace bps;

namespace {

const TruncationPolicy kPol(6, -12, 24);

GradedSeries tpow(int n, int e2 = 0, long c = 1) { return GradedSeries::monomial(kPol, n, e2, Int(c)); }

Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Elementary symmetric values of an explicit eigenvalue multiset.
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

TEST_CASE("adams substitution") {
    CHECK(adams(tpow(1), 2) == tpow(2));
    CHECK(adams(tpow(1, 1), 2) == tpow(2, 2));
    std::mt19937 rng(3);
    GradedSeries f = test::random_series(rng, kPol, 8, 0, 6, -12, 24);
    CHECK(adams(f, 1) == f);
    CHECK_THROWS_AS(adams(tpow(4), 2), WindowError);
    CHECK_THROWS_AS(adams(tpow(1, 14), 2), WindowError);
    CHECK_THROWS_AS(adams(f, 0), Error);
    // the truncating variant drops what the strict one rejects
    CHECK(adams_truncating(tpow(4), 2).is_zero());
}

TEST_CASE("pexp closed forms") {
    // pexp(t) = 1/(1-t)
    GradedSeries expect = invert_geometric(GradedSeries::unit(kPol) - tpow(1));
    CHECK(pexp(tpow(1)) == expect);

    // pexp(2t) counts multisets from two generators
    GradedSeries p2 = pexp(tpow(1, 0, 2));
    CHECK(p2.coeff(2, 0) == 3);
    CHECK(p2.coeff(3, 0) == 4);

    CHECK_THROWS_AS(pexp(GradedSeries::unit(kPol)), Error);
}

TEST_CASE("pexp against the product expansion") {
    // pexp(t * sum_{i<=imax} q^i) vs prod_i 1/(1 - q^i t), expanded directly
    TruncationPolicy pol(5, 0, 20);
    std::vector<GradedSeries::Term> gen;
    for (int e2 = 0; e2 <= pol.e2_max; e2 += 2) gen.push_back({1, e2, 1});
    GradedSeries lhs = pexp(GradedSeries::make_series(pol, gen));

    GradedSeries rhs = GradedSeries::unit(pol);
    for (int i = 0; 2 * i <= pol.e2_max; ++i) {
        // 1/(1 - q^i t) = sum_n q^{i n} t^n
        std::vector<GradedSeries::Term> factor;
        for (int n = 0; n <= pol.t_max && 2 * i * n <= pol.e2_max; ++n)
            factor.push_back({n, 2 * i * n, 1});
        rhs = rhs * GradedSeries::make_series(pol, factor);
    }
    CHECK(lhs == rhs);
}

TEST_CASE("plog closed forms") {
    GradedSeries geo = invert_geometric(GradedSeries::unit(kPol) - tpow(1));
    CHECK(plog(geo) == tpow(1));
    CHECK(plog(GradedSeries::unit(kPol)).is_zero());
    CHECK_THROWS_AS(plog(tpow(1)), Error);
    CHECK_THROWS_AS(plog(Int(2) * GradedSeries::unit(kPol)), Error);
}

TEST_CASE("plethystic round trips and exponential property") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 50; ++iter) {
        GradedSeries f = test::random_series(rng, kPol, 6, 1, 4, 0, 10, 5);
        GradedSeries g = test::random_series(rng, kPol, 6, 1, 4, 0, 10, 5);
        CHECK(plog(pexp(f)) == f);
        CHECK(pexp(f + g) == (pexp(f) * pexp(g)));
    }
    for (int iter = 0; iter < 50; ++iter) {
        // pexp(plog(h)) = h for integral h with constant term 1
        GradedSeries h =
            GradedSeries::unit(kPol) + test::random_series(rng, kPol, 6, 1, 4, 0, 10, 5);
        CHECK(pexp(plog(h)) == h);
    }
}

TEST_CASE("newton transforms") {
    CHECK(elem_to_power(SpectrumTuple({rat(3)})) == std::vector<Rat>{rat(3)});
    // eigenvalues +1, -1
    CHECK(elem_to_power(SpectrumTuple({rat(0), rat(-1)})) == std::vector<Rat>{rat(0), rat(2)});
    // double eigenvalue 1
    CHECK(elem_to_power(SpectrumTuple({rat(2), rat(1)})) == std::vector<Rat>{rat(2), rat(2)});

    CHECK(power_to_elem({rat(0), rat(0)}, 2) == SpectrumTuple({rat(0), rat(0)}));
    CHECK_THROWS_AS(power_to_elem({rat(1)}, 2), Error);

    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (int iter = 0; iter < 100; ++iter) {
        std::uniform_int_distribution<int> len(0, 6);
        int r = len(rng);
        std::vector<Rat> s;
        for (int i = 0; i < r; ++i) s.push_back(rat(num(rng), den(rng)));
        SpectrumTuple tup{s};
        CHECK(power_to_elem(elem_to_power(tup), r) == tup);
    }
}

TEST_CASE("spectrum_cup against the multiset-union oracle") {
    CHECK(spectrum_cup(SpectrumTuple({rat(5)}), SpectrumTuple()) == SpectrumTuple({rat(5)}));
    CHECK(spectrum_cup(elem_of({rat(1)}), elem_of({rat(-1)})) == SpectrumTuple({rat(0), rat(-1)}));

    std::mt19937 rng(29);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> len(0, 6);
    for (int iter = 0; iter < 200; ++iter) {
        int m = len(rng);
        int n = len(rng) % (7 - m); // total size <= 6
        std::vector<Rat> ev_a, ev_b, ev_all;
        for (int i = 0; i < m; ++i) ev_a.push_back(rat(num(rng), den(rng)));
        for (int i = 0; i < n; ++i) ev_b.push_back(rat(num(rng), den(rng)));
        ev_all = ev_a;
        ev_all.insert(ev_all.end(), ev_b.begin(), ev_b.end());
        SpectrumTuple a = elem_of(ev_a), b = elem_of(ev_b);
        SpectrumTuple cup = spectrum_cup(a, b);
        CHECK(cup == elem_of(ev_all));
        CHECK(cup == spectrum_cup(b, a));
    }
}
