#pragma once

#include "bpscheck/charvar.hpp"
#include "bpscheck/filtration.hpp"
#include "bpscheck/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bps {

/// Parameters of one verification job. The window is the ASSERTED window;
/// checks compute on internally widened scratch windows so that truncation
/// effects never reach the asserted coefficients.
struct CheckSpec {
    std::string name;
    int genus = 0;
    int r_max = 1;
    TruncationPolicy window = TruncationPolicy(4, -40, 80);
    long order_budget = 200000;     // group enumeration cap
    long tuple_budget = 100000000;  // brute relation-count cap
    int threads = 0;
    /// Self-test hook: deliberately corrupts one fixture so the check must
    /// fail with a witness. Empty in normal runs. Recognized values are
    /// check-specific ("lhs", "reflection_off", "torus_sign", "char_sign",
    /// "table_shift").
    std::string corruption;
};

/// First mismatching coefficient: t-degree, doubled q-exponent, both values.
struct Witness {
    int n = 0;
    int e2 = 0;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string name;
    CheckSpec spec;
    bool pass = false;
    std::optional<Witness> witness;
    double seconds = 0.0;
    std::vector<std::string> oracles; // which oracle produced each side
    std::string message;              // error text when a check aborts
};

/// Windowed comparison; returns the first mismatching (n, e2) inside pol.
std::optional<Witness> compare_series(const GradedSeries& lhs, const GradedSeries& rhs,
                                      const TruncationPolicy& pol);

/// Genus-0 Euler identity: sum_r t^r / prod_{i<=r}(1 - q^i) = pexp(t * sum q^i),
/// plus the rank-wise degree-0 statement (one class per rank).
CheckReport check_genus0_euler(const CheckSpec& spec);

/// Genus-1 PBW identity: reflected class-count polynomials of GL_r(F_q)
/// against the plethystic exponential of the torus package. Rank 1 and 2
/// closed forms are pinned as fixtures; rank 3 runs off rational canonical
/// form class counting.
CheckReport check_genus1_betti(const CheckSpec& spec);

/// E-series identity: reflected stack counts against the plethystic
/// exponential of the twisted smooth counts, both via independent oracles.
CheckReport check_echeck(const CheckSpec& spec);

/// Weight vs combined-perverse comparison of explicit filtration tables in
/// genus 0 and 1: dim Gr^W_{2i} = dim Gr^F_i degree by degree.
CheckReport check_psws_genus01(const CheckSpec& spec);

/// BPS character series: (1 - q) * plog(stack_series).
GradedSeries extract_bps(const GradedSeries& stack_series);

/// Candidate intersection-cohomology series: inverts the chain
/// UEA(FreeLie(IC)) = tensor algebra, i.e. 1 - invert_geometric(pexp(bps)).
GradedSeries extract_ic(const GradedSeries& stack_series);

std::string report_to_json(const CheckReport& report, int indent = 2);

} // namespace bps
