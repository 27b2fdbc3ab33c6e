#include "bpscheck/numeric.hpp"

namespace bps {

int mobius(long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int multichoose(long n, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    return binomial(n + k - 1, k);
}

bool is_prime_power(long q, long* p_out, long* k_out) {
    if (q < 2) return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    if (p == 0) p = q; // q itself prime
    long k = 0;
    long m = q;
    while (m % p == 0) { m /= p; ++k; }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

Int partition_count(long n, long max_parts) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (max_parts <= 0) return 0;
    // dp[m] = partitions of m into parts <= current bound; parts <= max_parts
    // counts conjugate-equivalently: partitions into at most max_parts parts.
    std::vector<Int> dp(static_cast<size_t>(n) + 1, 0);
    dp[0] = 1;
    for (long part = 1; part <= max_parts; ++part)
        for (long m = part; m <= n; ++m)
            dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
    return dp[static_cast<size_t>(n)];
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace bps
