#pragma once

#include "bpscheck/polynomial.hpp"
#include "bpscheck/quiver.hpp"

#include <vector>

namespace bps {

struct KacOptions {
    long group_order_cap = 200000; // cap on |GL_d(F_q)| per Burnside run
    long total_dim_cap = 4;        // Krull-Schmidt / Galois inversion depth
    int threads = 0;               // 0 = hardware concurrency
};

/// Number of isomorphism classes of d-dimensional F_q-representations of Q,
/// by Burnside averaging of fixed points of the GL_d(F_q) base-change action
/// on the space of arrow matrices. Errors when the enumeration exceeds the
/// configured budget.
Int count_rep_classes(const Quiver& Q, const DimVector& d, long q, const KacOptions& opts = {});

/// Integer polynomial with nonnegative coefficients counting absolutely
/// indecomposable representations.
struct KacPolynomial {
    IntPoly poly;
};

/// Kac polynomial a_{Q,d}(q): per sample, isomorphism-class counts are
/// inverted through Krull-Schmidt (multiset) structure to indecomposables
/// and through Galois descent to absolutely indecomposables, then the
/// integer polynomial is interpolated. Needs degree_bound + 2 samples so at
/// least one point cross-checks the fit; an inconsistent extra sample
/// reports "not polynomial at tested degree".
KacPolynomial kac_polynomial(const Quiver& Q, const DimVector& d,
                             const std::vector<long>& q_samples, const KacOptions& opts = {});

} // namespace bps
