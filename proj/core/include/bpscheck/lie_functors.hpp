#pragma once

#include "bpscheck/plethysm.hpp"
#include "bpscheck/rational_fn.hpp"
#include "bpscheck/series.hpp"

namespace bps {

/// Tate-twist normalization exponent. 2r^2(g-1) for the surface moduli
/// stacks, -2*chi_Q(d,d) for preprojective stacks; may be negative and odd
/// values are legal (half twists).
struct VirtualDimension {
    int value = 0;
};

inline VirtualDimension betti_stack_vdim(int g, int r) {
    return VirtualDimension{2 * r * r * (g - 1)};
}

/// Dimension of the smooth twisted moduli space, used as its vdim.
inline VirtualDimension twisted_smooth_vdim(int g, int r) {
    return VirtualDimension{2 * r * r * (g - 1) + 2};
}

/// Series of the symmetric algebra on f (equals pexp); zero t^0 block required.
GradedSeries sym_series(const GradedSeries& f);

/// Series of the tensor algebra on f: 1/(1 - f) = sum_n f^n.
GradedSeries tensor_series(const GradedSeries& f);

/// Series of the free Lie algebra on f, defined through the PBW identity
/// pexp(free_lie_series(f)) = tensor_series(f).
GradedSeries free_lie_series(const GradedSeries& f);

/// Universal enveloping algebra series; by PBW this equals sym_series.
GradedSeries uea_series(const GradedSeries& g);

/// Sum of q^i over i >= 0 within the window, at rank grading 0. Callers
/// attach t-powers as needed.
GradedSeries bcstar_series(const TruncationPolicy& pol);

/// |GL_r(F_q)| = prod_{i=0}^{r-1} (q^r - q^i) as an integer polynomial.
IntPoly glr_order_poly(int r);

/// The count <-> virtual Borel-Moore dictionary: substitute q -> 1/q in the
/// point count, expand ascending in q, and multiply by q^{vdim/2}. The
/// expansion's lowest exponent must not fall below the window floor
/// (truncation at the bottom of a count is never silent).
GradedSeries bm_vir_from_count(const RationalFunctionQ& count, VirtualDimension vdim,
                               const TruncationPolicy& pol);

/// Virtual BM series of pt/GL_r with vdim 2r^2(g-1), i.e. the dictionary
/// applied to the stack count 1/|GL_r(F_q)|. Lives at rank grading 0.
GradedSeries pt_mod_glr_bm_vir_series(int r, int g, const TruncationPolicy& pol);

} // namespace bps
