#pragma once

#include "bpscheck/series.hpp"

#include <vector>

namespace bps {

/// Plethystic exponential: the series of the symmetric algebra on the input.
/// Computed as exp(sum_{n>=1} adams(f, n)/n) with exact rational intermediate
/// arithmetic; the final coefficients must come out integral, and a
/// non-integral coefficient aborts (it signals an arithmetic bug, not bad
/// input). Requires a vanishing t^0 block.
GradedSeries pexp(const GradedSeries& f);

/// Plethystic logarithm, the inverse of pexp on series with constant term 1
/// and no other t^0 terms: plog(pexp(g)) = g and pexp(plog(f)) = f on the
/// window.
GradedSeries plog(const GradedSeries& f);

/// Elementary symmetric values (s_1, ..., s_r) of an eigenvalue multiset of
/// size r; the scalar model of the Hitchin base Lambda_r at one point.
struct SpectrumTuple {
    std::vector<Rat> s;

    SpectrumTuple() = default;
    explicit SpectrumTuple(std::vector<Rat> values) : s(std::move(values)) {}
    long rank() const { return static_cast<long>(s.size()); }

    friend bool operator==(const SpectrumTuple&, const SpectrumTuple&) = default;
};

/// Newton transform: power sums (p_1, ..., p_r) of the multiset with
/// elementary symmetric values s.
std::vector<Rat> elem_to_power(const SpectrumTuple& s);

/// Power sums extended past the rank (elementary values above r are zero);
/// returns (p_1, ..., p_count).
std::vector<Rat> power_sums_extended(const SpectrumTuple& s, long count);

/// Inverse Newton transform; uses the first r entries of p.
SpectrumTuple power_to_elem(const std::vector<Rat>& p, long r);

/// Elementary symmetric values of the disjoint union of the two eigenvalue
/// multisets, computed through power sums: P^{-1}_{m+n}(i_m P_m(a) + i_n P_n(b)).
SpectrumTuple spectrum_cup(const SpectrumTuple& a, const SpectrumTuple& b);

} // namespace bps
