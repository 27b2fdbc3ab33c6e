#include "bpscheck/lie_functors.hpp"

#include <sstream>

namespace bps {

namespace {

void require_no_constant_block(const GradedSeries& f, const char* op) {
    auto it = f.terms().begin();
    if (it != f.terms().end() && it->first.first == 0)
        throw Error(std::string(op) + ": input must have zero t^0 part");
}

} // namespace

GradedSeries sym_series(const GradedSeries& f) {
    require_no_constant_block(f, "sym_series");
    return pexp(f);
}

GradedSeries tensor_series(const GradedSeries& f) {
    require_no_constant_block(f, "tensor_series");
    return invert_geometric(GradedSeries::unit(f.policy()) - f);
}

GradedSeries free_lie_series(const GradedSeries& f) {
    require_no_constant_block(f, "free_lie_series");
    return plog(tensor_series(f));
}

GradedSeries uea_series(const GradedSeries& g) {
    require_no_constant_block(g, "uea_series");
    return pexp(g);
}

GradedSeries bcstar_series(const TruncationPolicy& pol) {
    std::vector<GradedSeries::Term> terms;
    for (int e2 = std::max(0, pol.e2_min); e2 <= pol.e2_max; e2 += 2) {
        if (e2 % 2 != 0) continue;
        terms.push_back({0, e2, 1});
    }
    return GradedSeries::make_series(pol, terms);
}

IntPoly glr_order_poly(int r) {
    if (r < 1) throw Error("glr_order_poly: r must be >= 1");
    IntPoly result = IntPoly::constant(1);
    IntPoly qr = IntPoly::monomial(1, r);
    for (int i = 0; i < r; ++i)
        result = result * (qr - IntPoly::monomial(1, i));
    return result;
}

GradedSeries bm_vir_from_count(const RationalFunctionQ& count, VirtualDimension vdim,
                               const TruncationPolicy& pol) {
    if (count.is_zero()) return GradedSeries(pol);
    const IntPoly& num = count.num();
    const IntPoly& den = count.den();
    // count(1/q) = q^{deg den - deg num} * rev(num)(q) / rev(den)(q), and
    // rev(den)(0) = leading(den) != 0, so the ascending expansion always exists.
    IntPoly a = num.reversed();
    IntPoly b = den.reversed();
    long shift = 2 * (den.degree() - num.degree()) + vdim.value;
    if (shift < pol.e2_min) {
        std::ostringstream msg;
        msg << "bm_vir_from_count: expansion starts at e2=" << shift
            << ", below the window floor " << pol.e2_min
            << " (count " << count.str() << ")";
        throw WindowError(msg.str());
    }
    long jmax = (static_cast<long>(pol.e2_max) - shift) / 2;
    std::vector<GradedSeries::Term> terms;
    if (jmax >= 0) {
        std::vector<Rat> c(static_cast<size_t>(jmax) + 1, Rat(0));
        Rat b0(b.coeff(0));
        for (long j = 0; j <= jmax; ++j) {
            Rat acc(a.coeff(j));
            for (long i = 0; i < j; ++i)
                acc -= c[static_cast<size_t>(i)] * Rat(b.coeff(j - i));
            c[static_cast<size_t>(j)] = acc / b0;
        }
        for (long j = 0; j <= jmax; ++j) {
            const Rat& v = c[static_cast<size_t>(j)];
            if (v == 0) continue;
            if (v.get_den() != 1)
                throw Error("bm_vir_from_count: count does not expand integrally: " + count.str());
            long e2 = shift + 2 * j;
            if (e2 > pol.e2_max) break;
            terms.push_back({0, static_cast<int>(e2), Int(v.get_num())});
        }
    }
    return GradedSeries::make_series(pol, terms);
}

GradedSeries pt_mod_glr_bm_vir_series(int r, int g, const TruncationPolicy& pol) {
    RationalFunctionQ count(IntPoly::constant(1), glr_order_poly(r));
    return bm_vir_from_count(count, betti_stack_vdim(g, r), pol);
}

} // namespace bps
