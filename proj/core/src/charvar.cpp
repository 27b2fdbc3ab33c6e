#include "bpscheck/charvar.hpp"

#include "bpscheck/numeric.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace bps {

namespace {

RationalFunctionQ rf(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return RationalFunctionQ(IntPoly(std::move(v)));
}

RationalFunctionQ rf_over(std::initializer_list<long> coeffs, long den) {
    std::vector<Int> v;
    for (long c : coeffs) v.emplace_back(c);
    return RationalFunctionQ(IntPoly(std::move(v)), IntPoly::constant(den));
}

} // namespace

CharacterDegreeData CharacterDegreeData::gl1() {
    CharacterDegreeData d;
    d.r = 1;
    d.twist_d = 0;
    // The q-1 linear characters of F_q^*, all trivial on the trivial twist.
    d.families = {{rf({1}), rf({-1, 1}), +1}};
    return d;
}

CharacterDegreeData CharacterDegreeData::gl2(int twist_d) {
    CharacterDegreeData d;
    d.r = 2;
    d.twist_d = twist_d;
    if (twist_d == 0) {
        // Four families at z = Id: degrees 1, q, q+1, q-1 with multiplicities
        // q-1, q-1, (q-1)(q-2)/2, q(q-1)/2.
        d.families = {
            {rf({1}), rf({-1, 1}), +1},
            {rf({0, 1}), rf({-1, 1}), +1},
            {rf({1, 1}), rf_over({2, -3, 1}, 2), +1},
            {rf({-1, 1}), rf_over({0, -1, 1}, 2), +1},
        };
    } else if (twist_d == 1) {
        // z = -Id, q odd. The determinant-twist families always take +1 on
        // -Id; the principal series splits by the parities of its two
        // parameters, the cuspidal series by the parity of its parameter.
        d.families = {
            {rf({1}), rf({-1, 1}), +1},
            {rf({0, 1}), rf({-1, 1}), +1},
            {rf({1, 1}), rf_over({3, -4, 1}, 4), +1},  // (q-1)(q-3)/4 same-parity pairs
            {rf({1, 1}), rf_over({1, -2, 1}, 4), -1},  // (q-1)^2/4 opposite-parity pairs
            {rf({-1, 1}), rf_over({1, -2, 1}, 4), +1}, // (q-1)^2/4 even cuspidal
            {rf({-1, 1}), rf_over({-1, 0, 1}, 4), -1}, // (q^2-1)/4 odd cuspidal
        };
    } else {
        throw Error("gl2 character data: twist must be 0 or 1");
    }
    return d;
}

CharacterDegreeData CharacterDegreeData::with_flipped_sign(size_t family_index) const {
    if (family_index >= families.size())
        throw Error("with_flipped_sign: family index out of range");
    CharacterDegreeData d(*this);
    d.families[family_index].central_sign = -d.families[family_index].central_sign;
    return d;
}

void validate_character_data(const CharacterDegreeData& data) {
    RationalFunctionQ order(glr_order_poly(data.r));
    RationalFunctionQ sum_sq, sum_mult, sum_signed_sq;
    for (const auto& f : data.families) {
        sum_sq = sum_sq + f.multiplicity * f.degree * f.degree;
        sum_mult = sum_mult + f.multiplicity;
        RationalFunctionQ sgn = rf({f.central_sign});
        sum_signed_sq = sum_signed_sq + sgn * f.multiplicity * f.degree * f.degree;
    }
    if (!(sum_sq == order))
        throw Error("character data: sum mult*deg^2 != |GL_r|");
    // Class-count polynomial from the independent rcf route.
    IntPoly classes = class_count_poly_via_rcf(data.r, {2, 3, 4, 5, 7, 8});
    if (!(sum_mult == RationalFunctionQ(classes)))
        throw Error("character data: sum mult != class-count polynomial");
    if (data.twist_d != 0 && !sum_signed_sq.is_zero())
        throw Error("character data: column orthogonality at the twist fails");
}

RationalFunctionQ frobenius_count(int r, int g, int d, const CharacterDegreeData& data) {
    if (g < 0) throw Error("frobenius_count: negative genus");
    if (r != data.r) throw Error("frobenius_count: rank does not match character data");
    int d_eff = (r == 0) ? 0 : ((d % r) + r) % r;
    if (d_eff != data.twist_d)
        throw Error("frobenius_count: twist does not match character data");

    RationalFunctionQ order(glr_order_poly(r));
    RationalFunctionQ sum;
    for (const auto& f : data.families) {
        // lambda * mult * deg^{2-2g}
        RationalFunctionQ term = rf({f.central_sign}) * f.multiplicity;
        int e = 2 - 2 * g;
        RationalFunctionQ degpow = rf({1});
        for (int i = 0; i < std::abs(e); ++i) degpow = degpow * f.degree;
        term = (e >= 0) ? term * degpow : term / degpow;
        sum = sum + term;
    }
    RationalFunctionQ orderpow = rf({1});
    for (int i = 0; i < std::abs(2 * g - 1); ++i) orderpow = orderpow * order;
    RationalFunctionQ count = (2 * g - 1 >= 0) ? orderpow * sum : sum / orderpow;
    // The solution count of the matrix relation is a polynomial in q; a
    // non-polynomial reduction means the character data is wrong.
    count.as_polynomial("frobenius_count");
    return count;
}

RationalFunctionQ frobenius_count(int r, int g, int d) {
    int d_eff = ((d % r) + r) % r;
    if (r == 1) return frobenius_count(1, g, 0, CharacterDegreeData::gl1());
    if (r == 2) return frobenius_count(2, g, d_eff, CharacterDegreeData::gl2(d_eff));
    throw Error("frobenius_count: no symbolic character table for r = " + std::to_string(r));
}

Int class_count_via_rcf(int r, long q) {
    if (r < 1) throw Error("class_count_via_rcf: r must be >= 1");
    if (!is_prime_power(q)) throw Error("class_count_via_rcf: q must be a prime power");
    // Conjugacy classes of GL_r(F_q) are rational canonical forms: an
    // assignment of a partition to each monic irreducible polynomial != x,
    // with sum deg(f)*|lambda_f| = r. Expand prod_d P(t^d)^{N_d} where
    // P(t) = sum_m p(m) t^m and N_d counts the degree-d irreducibles.
    std::vector<Int> series(static_cast<size_t>(r) + 1, 0);
    series[0] = 1;
    auto mul_trunc = [r](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> c(static_cast<size_t>(r) + 1, 0);
        for (int i = 0; i <= r; ++i) {
            if (a[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= r; ++j)
                c[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
        return c;
    };
    for (int deg = 1; deg <= r; ++deg) {
        // N_deg = (1/deg) * sum_{e | deg} mu(e) q^{deg/e}, minus 1 at deg = 1
        // to exclude the polynomial x (zero is not an eigenvalue of an
        // invertible matrix).
        Int n_irred = 0;
        for (long e = 1; e <= deg; ++e) {
            if (deg % e != 0) continue;
            Int qe;
            mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q),
                          static_cast<unsigned long>(deg / e));
            n_irred += mobius(e) * qe;
        }
        if (n_irred % deg != 0) throw Error("class_count_via_rcf: necklace count not integral");
        n_irred /= deg;
        if (deg == 1) n_irred -= 1;

        std::vector<Int> base(static_cast<size_t>(r) + 1, 0);
        for (int m = 0; m * deg <= r; ++m)
            base[static_cast<size_t>(m * deg)] = partition_count(m, m);
        // series *= base^{n_irred}, truncated at t^r; n_irred fits a long
        // at desk scale.
        long e = n_irred.get_si();
        std::vector<Int> pow(static_cast<size_t>(r) + 1, 0);
        pow[0] = 1;
        std::vector<Int> sq = base;
        while (e > 0) {
            if (e & 1) pow = mul_trunc(pow, sq);
            e >>= 1;
            if (e > 0) sq = mul_trunc(sq, sq);
        }
        series = mul_trunc(series, pow);
    }
    return series[static_cast<size_t>(r)];
}

IntPoly class_count_poly_from_groups(int r, const std::vector<long>& qs, long order_cap) {
    std::vector<Int> counts;
    counts.reserve(qs.size());
    for (long q : qs) counts.push_back(class_count(build_group(r, q, order_cap)));
    return fit_integer_polynomial(qs, counts, r, "class_count_poly_from_groups");
}

IntPoly class_count_poly_via_rcf(int r, const std::vector<long>& qs) {
    std::vector<Int> counts;
    counts.reserve(qs.size());
    for (long q : qs) counts.push_back(class_count_via_rcf(r, q));
    return fit_integer_polynomial(qs, counts, r, "class_count_poly_via_rcf");
}

RationalFunctionQ smooth_twisted_count(int g, int r, int d) {
    if (std::gcd(r, d) != 1)
        throw Error("smooth_twisted_count: gcd(r, d) must be 1");
    RationalFunctionQ relations = frobenius_count(r, g, d);
    // Free PGL_r = GL_r/(center) action on the twisted relation variety:
    // |M| = |R| * (q-1) / |GL_r|.
    RationalFunctionQ count =
        relations * RationalFunctionQ(IntPoly({-1, 1})) / RationalFunctionQ(glr_order_poly(r));
    count.as_polynomial("smooth_twisted_count");
    return count;
}

GradedSeries smooth_twisted_series(int g, int r, int d, const TruncationPolicy& pol) {
    return bm_vir_from_count(smooth_twisted_count(g, r, d), twisted_smooth_vdim(g, r), pol);
}

GradedSeries stack_count_series(int g, int r, int d, VirtualDimension vdim,
                                const TruncationPolicy& pol, CountOracle oracle) {
    if (oracle == CountOracle::Auto)
        oracle = (r <= 2) ? CountOracle::Frobenius : CountOracle::ClassPolynomial;
    RationalFunctionQ count;
    switch (oracle) {
    case CountOracle::Frobenius:
        count = frobenius_count(r, g, d) / RationalFunctionQ(glr_order_poly(r));
        break;
    case CountOracle::ClassPolynomial: {
        if (g != 1 || d != 0)
            throw Error("stack_count_series: class-polynomial oracle only covers g=1, d=0");
        // |R_{1,r,0}| / |GL_r| = (commuting pairs)/|GL_r| = class count.
        count = RationalFunctionQ(class_count_poly_via_rcf(r, {2, 3, 4, 5, 7}));
        break;
    }
    default:
        throw Error("stack_count_series: unknown oracle");
    }
    return bm_vir_from_count(count, vdim, pol);
}

} // namespace bps
