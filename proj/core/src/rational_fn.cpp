#include "bpscheck/rational_fn.hpp"

namespace bps {

RationalFunctionQ::RationalFunctionQ(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    reduce();
}

void RationalFunctionQ::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        return;
    }
    QPoly g = poly_gcd(to_qpoly(num_), to_qpoly(den_));
    if (g.degree() > 0) {
        QPoly qn, qd, rem;
        divmod(to_qpoly(num_), g, &qn, &rem);
        divmod(to_qpoly(den_), g, &qd, &rem);
        // Clear the rational scale introduced by the monic gcd.
        Int scale = 1;
        for (const auto& c : qn.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& c : qd.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den().get_mpz_t());
        num_ = to_intpoly(Rat(scale) * qn, "rational function reduce");
        den_ = to_intpoly(Rat(scale) * qd, "rational function reduce");
    }
    Int g2;
    Int cn = content(num_), cd = content(den_);
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g2 > 1) {
        std::vector<Int> vn, vd;
        for (const auto& c : num_.coeffs()) vn.push_back(c / g2);
        for (const auto& c : den_.coeffs()) vd.push_back(c / g2);
        num_ = IntPoly(std::move(vn));
        den_ = IntPoly(std::move(vd));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

IntPoly RationalFunctionQ::as_polynomial(const char* context) const {
    if (!is_polynomial())
        throw Error(std::string(context) + ": not a polynomial: " + str());
    return num_;
}

Rat RationalFunctionQ::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw Error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) throw Error("rational function division by zero");
    return RationalFunctionQ(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunctionQ::str() const {
    if (is_polynomial()) return poly_to_string(num_);
    return "(" + poly_to_string(num_) + ") / (" + poly_to_string(den_) + ")";
}

} // namespace bps
