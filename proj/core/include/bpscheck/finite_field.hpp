#pragma once

#include "bpscheck/errors.hpp"

#include <vector>

namespace bps {

/// Table-based arithmetic for F_q, q = p^k. Elements are indices 0..q-1;
/// for k > 1 the index encodes base-p digits of a residue modulo a monic
/// irreducible polynomial found at construction time. 0 and 1 are the
/// additive and multiplicative identities under this encoding.
class Fq {
public:
    Fq() = default; // empty shell; use make()
    static Fq make(long q, long table_cap = 1024);

    long p() const { return p_; }
    long k() const { return k_; }
    long q() const { return q_; }

    int add(int a, int b) const { return add_t_[static_cast<size_t>(a) * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_t_[static_cast<size_t>(a) * q_ + b]; }
    int neg(int a) const { return neg_t_[static_cast<size_t>(a)]; }
    /// a must be nonzero.
    int inv(int a) const;
    int minus_one() const { return neg(1); }

    /// The image of an ordinary integer in the prime subfield.
    int from_int(long v) const;

private:
    long p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> add_t_, mul_t_, neg_t_, inv_t_;
};

} // namespace bps
