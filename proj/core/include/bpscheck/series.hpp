#pragma once

#include "bpscheck/errors.hpp"
#include "bpscheck/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bps {

/// Truncation window for GradedSeries. The rank variable t is graded over
/// the naturals and cut at t_max; the weight variable q may carry half-integer
/// exponents, stored doubled, and is retained on [e2_min, e2_max] (doubled
/// units, so q^{1/2} is e2 = 1).
///
/// Operations never auto-extend windows: binary operations merge the two
/// operand windows to their intersection, and anything falling outside a
/// window during arithmetic is dropped. Equality of series is therefore
/// always windowed equality.
struct TruncationPolicy {
    int t_max = 0;
    int e2_min = 0;
    int e2_max = 0;

    TruncationPolicy() = default;
    TruncationPolicy(int tmax, int e2min, int e2max) : t_max(tmax), e2_min(e2min), e2_max(e2max) {
        if (t_max < 0) throw Error("policy: t_max must be >= 0");
        if (e2_min > e2_max) throw Error("policy: empty q window");
    }

    bool contains(int n, int e2) const {
        return n >= 0 && n <= t_max && e2 >= e2_min && e2 <= e2_max;
    }

    /// Intersection window; throws if the q ranges are disjoint.
    TruncationPolicy merged(const TruncationPolicy& other) const;

    /// Same t ceiling, q window padded by `lo`/`hi` doubled units. Used by
    /// callers that compute on a wider scratch window and assert on this one.
    TruncationPolicy widened(int lo, int hi, int extra_t = 0) const {
        return TruncationPolicy(t_max + extra_t, e2_min - lo, e2_max + hi);
    }

    friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

/// Truncated series in the rank variable t and the weight variable q with
/// half-integer exponents, over the integers. Keys are (n, e2) with n the
/// t-degree and e2 the doubled q-exponent; zero coefficients are never
/// stored, so the representation is canonical and equality is structural.
///
/// Values are immutable after construction; all operations are pure and the
/// type is safe to share between threads.
class GradedSeries {
public:
    using Key = std::pair<int, int>; // (n, e2)
    using TermMap = std::map<Key, Int>;
    struct Term {
        int n;
        int e2;
        Int c;
    };

    explicit GradedSeries(TruncationPolicy pol) : pol_(pol) {}

    /// The series 1 (requires the window to contain (0, 0)).
    static GradedSeries unit(const TruncationPolicy& pol);

    /// c * q^{e2/2} * t^n; the key must lie inside the window.
    static GradedSeries monomial(const TruncationPolicy& pol, int n, int e2, Int c);

    /// Builds a series from explicit terms, merging duplicates and dropping
    /// zeros. Any term outside the window is rejected, naming the offender.
    static GradedSeries make_series(const TruncationPolicy& pol, const std::vector<Term>& terms);

    const TruncationPolicy& policy() const { return pol_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stored coefficient or 0; queries outside the window raise WindowError
    /// (truncated region), never a silent zero.
    Int coeff(int n, int e2) const;

    /// Restriction to a window contained in (or overlapping) the current one.
    GradedSeries restricted(const TruncationPolicy& pol) const;

    /// Multiply every key by t^dn * q^{de2/2}; out-of-window results are an
    /// error (shifting is construction, not arithmetic).
    GradedSeries shifted(int dn, int de2) const;

    GradedSeries operator-() const;
    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
    /// Cauchy product truncated to the merged window.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.pol_ == b.pol_ && a.terms_ == b.terms_;
    }

    /// Scalar multiple.
    friend GradedSeries operator*(const Int& s, const GradedSeries& a);

    /// Lowest stored e2 for t-degree n (or 0 when that slice is empty).
    int floor_e2(int n) const;

    std::string str() const;

private:
    void insert(int n, int e2, Int c); // drops zeros, clips nothing
    TruncationPolicy pol_;
    TermMap terms_;
    friend GradedSeries invert_geometric(const GradedSeries&);
    friend GradedSeries adams(const GradedSeries&, int);
    friend GradedSeries adams_truncating(const GradedSeries&, int);
};

/// Inverse of a series with constant block exactly 1: returns g with
/// f*g = 1 up to truncation (geometric expansion in the t-grading).
GradedSeries invert_geometric(const GradedSeries& f);

/// Adams operation: t -> t^n, q -> q^n on every term. Errors when a scaled
/// term of a nonzero coefficient would leave the window.
GradedSeries adams(const GradedSeries& f, int n);

/// Adams operation that drops scaled terms falling outside the window.
/// Internal building block for plethystic operations.
GradedSeries adams_truncating(const GradedSeries& f, int n);

/// Deterministic serialization: sorted [n, e2, coefficient-string] triples
/// plus the policy. Round-trips exactly through series_from_json.
std::string series_to_json(const GradedSeries& f, int indent = -1);
GradedSeries series_from_json(const std::string& text);

} // namespace bps
