#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace bps {

using Int = mpz_class;
using Rat = mpq_class;

/// Moebius function; n >= 1.
int mobius(long n);

/// Binomial coefficient as an exact integer; returns 0 for k < 0 or k > n.
Int binomial(long n, long k);

/// Multiset coefficient ((n multichoose k)) = C(n+k-1, k).
Int multichoose(long n, long k);

/// True if q = p^k for a prime p and k >= 1; on success fills p and k.
bool is_prime_power(long q, long* p_out = nullptr, long* k_out = nullptr);

/// Number of partitions of n into at most max_parts parts (each part >= 1).
Int partition_count(long n, long max_parts);

/// Decimal rendering helpers (mpz/mpq already print, kept for symmetry).
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

} // namespace bps
