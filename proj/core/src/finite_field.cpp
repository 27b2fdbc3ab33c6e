#include "bpscheck/finite_field.hpp"

#include "bpscheck/numeric.hpp"

#include <string>

namespace bps {

namespace {

using Digits = std::vector<int>; // base-p digits, low first, length k

Digits decode(long idx, long p, long k) {
    Digits d(static_cast<size_t>(k), 0);
    for (long i = 0; i < k; ++i) {
        d[static_cast<size_t>(i)] = static_cast<int>(idx % p);
        idx /= p;
    }
    return d;
}

long encode(const Digits& d, long p) {
    long idx = 0;
    for (size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return idx;
}

// Multiplication of polynomials over F_p, reduced modulo the monic modulus
// (coefficients low first, modulus has degree k with leading 1 implicit).
Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& modulus, long p, long k) {
    std::vector<long> prod(static_cast<size_t>(2 * k - 1), 0);
    for (long i = 0; i < k; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < k; ++j)
            prod[static_cast<size_t>(i + j)] += static_cast<long>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
    }
    for (size_t i = 0; i < prod.size(); ++i) prod[i] %= p;
    // reduce: x^k = -modulus_low
    for (long deg = 2 * k - 2; deg >= k; --deg) {
        long c = prod[static_cast<size_t>(deg)] % p;
        if (c == 0) continue;
        prod[static_cast<size_t>(deg)] = 0;
        for (long j = 0; j < k; ++j) {
            long& slot = prod[static_cast<size_t>(deg - k + j)];
            slot = (slot - c * modulus[static_cast<size_t>(j)]) % p;
            if (slot < 0) slot += p;
        }
    }
    Digits r(static_cast<size_t>(k), 0);
    for (long i = 0; i < k; ++i) {
        long v = prod[static_cast<size_t>(i)] % p;
        if (v < 0) v += p;
        r[static_cast<size_t>(i)] = static_cast<int>(v);
    }
    return r;
}

// Irreducibility over F_p by trial division with all monic polynomials of
// degree 1..deg/2. Candidate is monic of degree deg, low-first with the
// leading 1 NOT stored (length deg).
bool divides(const Digits& divisor_low, long ddeg, const Digits& cand, long cdeg, long p) {
    // long division of x^cdeg + cand by x^ddeg + divisor_low
    std::vector<long> rem(static_cast<size_t>(cdeg) + 1, 0);
    for (long i = 0; i < cdeg; ++i) rem[static_cast<size_t>(i)] = cand[static_cast<size_t>(i)];
    rem[static_cast<size_t>(cdeg)] = 1;
    for (long deg = cdeg; deg >= ddeg; --deg) {
        long c = rem[static_cast<size_t>(deg)] % p;
        if (c == 0) continue;
        rem[static_cast<size_t>(deg)] = 0;
        for (long j = 0; j < ddeg; ++j) {
            long& slot = rem[static_cast<size_t>(deg - ddeg + j)];
            slot = (slot - c * divisor_low[static_cast<size_t>(j)]) % p;
            if (slot < 0) slot += p;
        }
    }
    for (long i = 0; i < ddeg; ++i)
        if (rem[static_cast<size_t>(i)] % p != 0) return false;
    return true;
}

Digits find_irreducible(long p, long k) {
    // monic x^k + (low part); try all p^k low parts
    long total = 1;
    for (long i = 0; i < k; ++i) total *= p;
    for (long idx = 0; idx < total; ++idx) {
        Digits low = decode(idx, p, k);
        if (low[0] == 0) continue; // divisible by x
        bool irreducible = true;
        for (long ddeg = 1; irreducible && 2 * ddeg <= k; ++ddeg) {
            long dtotal = 1;
            for (long i = 0; i < ddeg; ++i) dtotal *= p;
            for (long didx = 0; didx < dtotal; ++didx) {
                Digits dlow = decode(didx, p, ddeg);
                if (divides(dlow, ddeg, low, k, p)) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return low;
    }
    throw Error("find_irreducible: none found (unreachable for prime p)");
}

} // namespace

Fq Fq::make(long q, long table_cap) {
    long p = 0, k = 0;
    if (!is_prime_power(q, &p, &k))
        throw Error("F_q: " + std::to_string(q) + " is not a prime power");
    if (q > table_cap)
        throw BudgetError("F_q: field table budget exceeded for q = " + std::to_string(q));
    Fq F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = q;
    F.add_t_.assign(static_cast<size_t>(q) * q, 0);
    F.mul_t_.assign(static_cast<size_t>(q) * q, 0);
    F.neg_t_.assign(static_cast<size_t>(q), 0);
    F.inv_t_.assign(static_cast<size_t>(q), 0);

    Digits modulus;
    if (k > 1) modulus = find_irreducible(p, k);

    for (long a = 0; a < q; ++a) {
        Digits da = decode(a, p, k);
        Digits na(da);
        for (auto& v : na) v = static_cast<int>((p - v) % p);
        F.neg_t_[static_cast<size_t>(a)] = static_cast<int>(encode(na, p));
        for (long b = a; b < q; ++b) {
            Digits db = decode(b, p, k);
            Digits sum(static_cast<size_t>(k), 0);
            for (long i = 0; i < k; ++i)
                sum[static_cast<size_t>(i)] = static_cast<int>((da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p);
            int s = static_cast<int>(encode(sum, p));
            F.add_t_[static_cast<size_t>(a) * q + b] = s;
            F.add_t_[static_cast<size_t>(b) * q + a] = s;
            Digits prod = (k == 1)
                              ? Digits{static_cast<int>((static_cast<long>(da[0]) * db[0]) % p)}
                              : poly_mulmod(da, db, modulus, p, k);
            int m = static_cast<int>(encode(prod, p));
            F.mul_t_[static_cast<size_t>(a) * q + b] = m;
            F.mul_t_[static_cast<size_t>(b) * q + a] = m;
        }
    }
    for (long a = 1; a < q; ++a) {
        for (long b = 1; b < q; ++b) {
            if (F.mul_t_[static_cast<size_t>(a) * q + b] == 1) {
                F.inv_t_[static_cast<size_t>(a)] = static_cast<int>(b);
                break;
            }
        }
        if (F.inv_t_[static_cast<size_t>(a)] == 0)
            throw Error("F_q: element without inverse (irreducible search bug)");
    }
    return F;
}

int Fq::inv(int a) const {
    if (a == 0) throw Error("F_q: inverse of zero");
    return inv_t_[static_cast<size_t>(a)];
}

int Fq::from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

} // namespace bps
