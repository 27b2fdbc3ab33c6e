#pragma once

#include "bpscheck/series.hpp"

#include <random>

namespace bps::test {

/// Deterministic random series with keys inside the given box.
inline GradedSeries random_series(std::mt19937& rng, const TruncationPolicy& pol, int n_terms,
                                  int n_min, int n_max, int e2_min, int e2_max, long coeff_range = 9) {
    std::uniform_int_distribution<int> pick_n(n_min, n_max);
    std::uniform_int_distribution<int> pick_e2(e2_min, e2_max);
    std::uniform_int_distribution<long> pick_c(-coeff_range, coeff_range);
    std::vector<GradedSeries::Term> terms;
    for (int i = 0; i < n_terms; ++i)
        terms.push_back({pick_n(rng), pick_e2(rng), Int(pick_c(rng))});
    return GradedSeries::make_series(pol, terms);
}

/// Witt/necklace dimension of the degree-n piece of the free Lie algebra on
/// m generators: (1/n) sum_{d|n} mu(d) m^{n/d}.
inline Int necklace_dimension(long m, long n) {
    Int acc = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n / d));
        acc += mobius(d) * p;
    }
    return acc / n;
}

} // namespace bps::test
