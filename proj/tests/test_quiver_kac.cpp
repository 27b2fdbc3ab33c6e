#include "bpscheck/kac.hpp"
#include "bpscheck/quiver.hpp"

#include "bpscheck/checks.hpp"

#include <doctest.h>

#include <random>

using namespace bps;

TEST_CASE("euler form") {
    CHECK(euler_form(Quiver::point(), {1}, {1}) == 1);
    CHECK(euler_form(Quiver::jordan(), {1}, {1}) == 0);
    for (int g = 0; g <= 4; ++g)
        CHECK(euler_form(Quiver::loops(g), {1}, {1}) == 1 - g);
    CHECK(euler_form(Quiver::a2(), {1, 1}, {1, 1}) == 1);
    CHECK_THROWS_AS(euler_form(Quiver::a2(), {1}, {1, 1}), Error);

    // bilinearity on random dimension vectors
    std::mt19937 rng(67);
    std::uniform_int_distribution<long> entry(0, 5);
    Quiver Q = Quiver(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
    for (int iter = 0; iter < 50; ++iter) {
        DimVector a{entry(rng), entry(rng), entry(rng)};
        DimVector b{entry(rng), entry(rng), entry(rng)};
        DimVector c{entry(rng), entry(rng), entry(rng)};
        DimVector ab{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
        CHECK(euler_form(Q, ab, c) == euler_form(Q, a, c) + euler_form(Q, b, c));
        CHECK(euler_form(Q, c, ab) == euler_form(Q, c, a) + euler_form(Q, c, b));
        if (sym_euler(Q, a, b) <= 0) CHECK(serre_exponent(Q, a, b) >= 1);
    }
}

TEST_CASE("symmetrized form and Serre exponents") {
    CHECK(sym_euler(Quiver::jordan(), {1}, {1}) == 0);
    CHECK(sym_euler(Quiver::a2(), {1, 0}, {0, 1}) == -1);
    Quiver Q = Quiver(2, {{0, 1}, {1, 1}});
    DimVector d{2, 3};
    CHECK(sym_euler(Q, d, d) == 2 * euler_form(Q, d, d));

    CHECK(serre_exponent(Quiver::a2(), {1, 0}, {0, 1}) == 2);
    CHECK(serre_exponent(Quiver::jordan(), {1}, {1}) == 1);
    CHECK(serre_exponent(Quiver::loops(2), {1}, {1}) == 3);
    CHECK_THROWS_AS(serre_exponent(Quiver::a2(), {1, 0}, {1, 0}), Error);
}

TEST_CASE("tripled quiver") {
    Quiver tj = triple_quiver(Quiver::jordan());
    CHECK(tj.n_vertices == 1);
    CHECK(tj.arrows.size() == 3);
    Quiver ta = triple_quiver(Quiver::a2());
    CHECK(ta.n_vertices == 2);
    CHECK(ta.arrows.size() == 4);
}

TEST_CASE("preprojective virtual dimension") {
    CHECK(preproj_vdim(Quiver::jordan(), {1}).value == 0);
    for (int g = 1; g <= 3; ++g)
        CHECK(preproj_vdim(Quiver::loops(g), {1}).value == 2 * (g - 1));
    CHECK(preproj_vdim(Quiver::a2(), {1, 1}).value == -2);
}

TEST_CASE("quiver text format") {
    Quiver Q = parse_quiver("# loop quiver\nvertices: 2\narrow: 0 1\narrow: 1 1\n");
    CHECK(Q.n_vertices == 2);
    CHECK(Q.arrows.size() == 2);

    CHECK_THROWS_WITH(parse_quiver("vertices: 1\nbogus: 0\n"), doctest::Contains("line 2"));
    CHECK_THROWS_WITH(parse_quiver("vertices: 1\narrow: 0 3\n"), doctest::Contains("line 2"));
    CHECK_THROWS_WITH(parse_quiver("arrow: 0 0\n"), doctest::Contains("line 1"));
    CHECK_THROWS_WITH(parse_quiver("vertices: 1\nvertices: 2\n"), doctest::Contains("duplicate"));
    CHECK_THROWS_AS(parse_quiver("# nothing\n"), Error);
}

TEST_CASE("representation class counts") {
    for (long q : {2L, 3L, 5L})
        CHECK(count_rep_classes(Quiver::jordan(), {1}, q) == q);
    for (long q : {2L, 3L, 4L})
        CHECK(count_rep_classes(Quiver::a2(), {1, 1}, q) == 2);
    CHECK(count_rep_classes(Quiver::point(), {2}, 3) == 1);
    CHECK(count_rep_classes(Quiver::point(), {3}, 2) == 1);
    // similarity classes of 2x2 matrices: q^2 + q
    for (long q : {2L, 3L})
        CHECK(count_rep_classes(Quiver::jordan(), {2}, q) == q * q + q);

    KacOptions tight;
    tight.group_order_cap = 10;
    CHECK_THROWS_AS(count_rep_classes(Quiver::jordan(), {2}, 5, tight), BudgetError);
}

TEST_CASE("kac polynomials at closed forms") {
    IntPoly q_poly({0, 1});
    for (long d = 1; d <= 3; ++d) {
        std::vector<long> samples = (d < 3) ? std::vector<long>{2, 3, 5} : std::vector<long>{2, 3, 4};
        CHECK(kac_polynomial(Quiver::jordan(), {d}, samples).poly == q_poly);
    }
    for (int g = 1; g <= 3; ++g) {
        std::vector<long> samples{2, 3, 4, 5, 7, 8};
        samples.resize(static_cast<size_t>(g) + 2);
        CHECK(kac_polynomial(Quiver::loops(g), {1}, samples).poly == IntPoly::monomial(1, g));
    }
    CHECK(kac_polynomial(Quiver::a2(), {1, 1}, {2, 3}).poly == IntPoly::constant(1));

    CHECK_THROWS_AS(kac_polynomial(Quiver::jordan(), {1}, {2}), Error);
    KacOptions small;
    small.total_dim_cap = 2;
    CHECK_THROWS_AS(kac_polynomial(Quiver::jordan(), {3}, {2, 3, 4}, small), BudgetError);
}

TEST_CASE("rank-1 BPS character matches the reflected Kac polynomial") {
    // For the g-loop quiver at d = 1 the preprojective stage has count
    // q^{2g}/(q-1) and vdim 2(g-1); extracting the BPS series returns the
    // Kac polynomial with q inverted.
    TruncationPolicy pol(1, -12, 12);
    for (int g = 1; g <= 3; ++g) {
        Quiver Q = Quiver::loops(g);
        RationalFunctionQ count(IntPoly::monomial(1, 2 * g), IntPoly({-1, 1}));
        GradedSeries stage = bm_vir_from_count(count, preproj_vdim(Q, {1}), pol);
        GradedSeries stack = GradedSeries::unit(pol) + stage.shifted(1, 0);
        GradedSeries bps = extract_bps(stack);

        IntPoly kac = kac_polynomial(Q, {1}, {2, 3, 4, 5, 7, 8}).poly;
        // chi_{q^{1/2}} of the BPS stage = kac(q^{-1}): compare coefficients
        for (long i = 0; i <= kac.degree(); ++i)
            CHECK(bps.coeff(1, -2 * static_cast<int>(i)) == kac.coeff(i));
        for (const auto& [k, c] : bps.terms()) {
            CHECK(k.first == 1);
            CHECK(k.second <= 0);
        }
    }
}
