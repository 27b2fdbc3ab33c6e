#include "bpscheck/charvar.hpp"

#include <doctest.h>

using namespace bps;

TEST_CASE("group model construction") {
    GroupModel g22 = build_group(2, 2);
    CHECK(g22.order() == 6);
    GroupModel g23 = build_group(2, 3);
    CHECK(g23.order() == 48);
    CHECK(build_group(1, 5).order() == 4);
    CHECK(build_group(3, 2).order() == 168);
    CHECK(build_group(2, 4).order() == 180); // prime-power field

    for (const GroupModel* G : {&g22, &g23}) {
        CHECK(Int(glr_order_poly(G->r()).eval(Int(G->field().q()))) == G->order());
        // closure and inverses
        int x = static_cast<int>(G->size()) / 3, y = static_cast<int>(G->size()) / 2;
        int xy = G->mul(x, y);
        CHECK(G->mul(G->inv(x), xy) == y);
    }

    CHECK_THROWS_AS(build_group(3, 5), BudgetError);
    CHECK_THROWS_AS(build_group(2, 6), Error);
    CHECK_THROWS_AS(build_group(4, 2), Error);
}

TEST_CASE("class counts") {
    CHECK(class_count(build_group(1, 7)) == 6);
    // GL_2(F_2) is S_3: three classes (q^2 - 1 at q = 2)
    CHECK(class_count(build_group(2, 2)) == 3);
    CHECK(class_count(build_group(2, 3)) == 8);
}

TEST_CASE("brute relation counts") {
    GroupModel G = build_group(2, 3);
    CHECK(brute_relation_count(G, 0, G.identity()) == 1);
    CHECK(brute_relation_count(G, 0, G.minus_identity()) == 0);

    // abelian rank 1: the relation is automatic
    GroupModel g1 = build_group(1, 5);
    CHECK(brute_relation_count(g1, 1, g1.identity()) == 16);
    CHECK(brute_relation_count(g1, 2, g1.identity()) == 256);

    // commuting-pair identity: #pairs = #classes * |G|
    for (long q : {2L, 3L}) {
        GroupModel H = build_group(2, q);
        CHECK(brute_relation_count(H, 1, H.identity()) == class_count(H) * H.order());
    }
    GroupModel g32 = build_group(3, 2);
    CHECK(brute_relation_count(g32, 1, g32.identity()) == class_count(g32) * g32.order());

    CHECK(brute_relation_count(G, 1, G.identity()) == 48 * 8);

    CHECK_THROWS_AS(brute_relation_count(G, 3, G.identity()), BudgetError);
    int nonscalar = -1;
    for (int i = 0; i < G.size(); ++i)
        if (!G.is_scalar(i)) { nonscalar = i; break; }
    CHECK_THROWS_AS(brute_relation_count(G, 1, nonscalar), Error);
}

TEST_CASE("character data validation") {
    validate_character_data(CharacterDegreeData::gl1());
    validate_character_data(CharacterDegreeData::gl2(0));
    validate_character_data(CharacterDegreeData::gl2(1));
    CHECK_THROWS_AS(validate_character_data(CharacterDegreeData::gl2(1).with_flipped_sign(2)),
                    Error);
}

TEST_CASE("frobenius counts against closed forms and brute force") {
    // rank 1: (q-1)^{2g}
    for (int g = 0; g <= 3; ++g) {
        RationalFunctionQ f = frobenius_count(1, g, 0);
        IntPoly p = f.as_polynomial();
        CHECK(p == IntPoly({-1, 1}).pow(2 * g));
    }

    // genus 0 is the orthogonality degenerate case
    CHECK(frobenius_count(2, 0, 0).as_polynomial() == IntPoly::constant(1));
    CHECK(frobenius_count(2, 0, 1).is_zero());

    // genus 1, untwisted: commuting pairs = class count * |GL_2|
    IntPoly commuting = frobenius_count(2, 1, 0).as_polynomial();
    IntPoly classes = class_count_poly_via_rcf(2, {2, 3, 4, 5});
    CHECK(commuting == classes * glr_order_poly(2));

    // genus 2 against the brute-force oracle
    for (long q : {2L, 3L}) {
        GroupModel G = build_group(2, q);
        Int expect = brute_relation_count(G, 2, G.identity());
        CHECK(Int(frobenius_count(2, 2, 0).eval(Rat(q)).get_num()) == expect);
    }
    {
        GroupModel G = build_group(2, 3);
        Int expect = brute_relation_count(G, 2, G.minus_identity());
        CHECK(Int(frobenius_count(2, 2, 1).eval(Rat(3)).get_num()) == expect);
        // genus 1 at the twist as well
        Int pairs = brute_relation_count(G, 1, G.minus_identity());
        CHECK(Int(frobenius_count(2, 1, 1).eval(Rat(3)).get_num()) == pairs);
    }

    CHECK_THROWS_AS(frobenius_count(3, 1, 0), Error);
}

TEST_CASE("rcf class counts cross the group oracle") {
    for (int r = 1; r <= 2; ++r)
        for (long q : {2L, 3L, 4L, 5L})
            CHECK(class_count_via_rcf(r, q) == class_count(build_group(r, q)));
    CHECK(class_count_via_rcf(3, 2) == class_count(build_group(3, 2)));

    CHECK(class_count_poly_from_groups(1, {2, 3, 4, 5}) == IntPoly({-1, 1}));
    CHECK(class_count_poly_from_groups(2, {2, 3, 4, 5}) == IntPoly({-1, 0, 1}));
    IntPoly c3 = class_count_poly_via_rcf(3, {2, 3, 4, 5, 7});
    CHECK(c3.degree() == 3);
    CHECK(Int(c3.eval(Int(2))) == class_count(build_group(3, 2)));
}

TEST_CASE("smooth twisted counts") {
    IntPoly torus({1, -2, 1}); // (q-1)^2
    CHECK(smooth_twisted_count(1, 1, 1).as_polynomial() == torus);
    // the same torus for rank 2, through the full character-sum machinery
    CHECK(smooth_twisted_count(1, 2, 1).as_polynomial() == torus);

    CHECK(smooth_twisted_count(0, 1, 1).as_polynomial() == IntPoly::constant(1));
    CHECK(smooth_twisted_count(0, 2, 1).is_zero());
    CHECK(smooth_twisted_count(2, 1, 1).as_polynomial() == IntPoly({-1, 1}).pow(4));
    CHECK_THROWS_AS(smooth_twisted_count(1, 2, 0), Error);

    TruncationPolicy pol(0, -8, 8);
    GradedSeries b = GradedSeries::make_series(pol, {{0, -2, 1}, {0, 0, -2}, {0, 2, 1}});
    CHECK(smooth_twisted_series(1, 1, 1, pol) == b);
    CHECK(smooth_twisted_series(1, 2, 1, pol) == b);
    CHECK(smooth_twisted_series(0, 1, 1, pol) == GradedSeries::unit(pol));
}

TEST_CASE("stack count series") {
    TruncationPolicy pol(0, -10, 20);
    // genus 0 reproduces pt/GL_r
    for (int r = 1; r <= 2; ++r)
        CHECK(stack_count_series(0, r, 0, betti_stack_vdim(0, r), pol) ==
              pt_mod_glr_bm_vir_series(r, 0, pol));

    // genus 1: reflected class-count polynomials
    CHECK(stack_count_series(1, 1, 0, betti_stack_vdim(1, 1), pol) ==
          GradedSeries::make_series(pol, {{0, -2, 1}, {0, 0, -1}}));
    CHECK(stack_count_series(1, 2, 0, betti_stack_vdim(1, 2), pol) ==
          GradedSeries::make_series(pol, {{0, -4, 1}, {0, 0, -1}}));
    // rank 3 through the rcf class polynomial
    CHECK(stack_count_series(1, 3, 0, betti_stack_vdim(1, 3), pol) ==
          GradedSeries::make_series(pol, {{0, -6, 1}, {0, -2, -1}}));

    // genus 2 rank 1: -(q-1)^3 q^{-2} reflected
    CHECK(stack_count_series(2, 1, 0, betti_stack_vdim(2, 1), pol) ==
          GradedSeries::make_series(pol, {{0, -4, 1}, {0, -2, -3}, {0, 0, 3}, {0, 2, -1}}));

    CHECK_THROWS_AS(stack_count_series(2, 3, 0, betti_stack_vdim(2, 3), pol), Error);
}
