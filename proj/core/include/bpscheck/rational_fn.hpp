#pragma once

#include "bpscheck/polynomial.hpp"

namespace bps {

/// Reduced ratio of integer polynomials in q. Carries symbolic point counts
/// until polynomiality (or an explicit Laurent form) is certified; silent
/// truncation is never performed here.
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(IntPoly::constant(1)) {}
    RationalFunctionQ(IntPoly num, IntPoly den);
    explicit RationalFunctionQ(const IntPoly& p) : num_(p), den_(IntPoly::constant(1)) {}

    static RationalFunctionQ from_int(long v) {
        return RationalFunctionQ(IntPoly::constant(Int(v)));
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True when the reduced form has denominator exactly 1.
    bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }

    /// The underlying polynomial; throws Error when not a polynomial.
    IntPoly as_polynomial(const char* context = "rational function") const;

    Rat eval(const Rat& x) const;

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void reduce();
    IntPoly num_;
    IntPoly den_; // nonzero, gcd-reduced against num_, positive leading coefficient
};

} // namespace bps
