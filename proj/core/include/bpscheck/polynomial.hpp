#pragma once

#include "bpscheck/errors.hpp"
#include "bpscheck/numeric.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace bps {

/// Dense polynomial in the single variable q, low-degree coefficient first.
/// T is Int (exact integers) or Rat (exact rationals).
template <class T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }
    /// c * q^k
    static Poly monomial(const T& coeff, long k) {
        std::vector<T> v(static_cast<size_t>(k) + 1, T(0));
        v.back() = coeff;
        return Poly(std::move(v));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return T(0);
        return c_[static_cast<size_t>(i)];
    }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    /// q^deg * p(1/q); exact coefficient reversal.
    Poly reversed() const {
        std::vector<T> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }

    template <class S>
    S eval(const S& x) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> v(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        Poly r(a);
        for (auto& v : r.c_) v *= s;
        r.normalize();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(long e) const {
        Poly r = constant(T(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using QPoly = Poly<Rat>;

QPoly to_qpoly(const IntPoly& p);

/// Exact conversion; throws Error if any coefficient is non-integral.
IntPoly to_intpoly(const QPoly& p, const char* context = "polynomial");

/// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
Int content(const IntPoly& p);

/// Quotient and remainder over the rationals; divisor must be nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly* quot, QPoly* rem);

/// Monic gcd over the rationals (gcd(0,0) = 0).
QPoly poly_gcd(QPoly a, QPoly b);

/// Interpolating polynomial through (xs[i], ys[i]); xs must be distinct.
QPoly interpolate(const std::vector<long>& xs, const std::vector<Rat>& ys);

/// Fits an integer polynomial of degree <= degree_bound through the samples,
/// using the first degree_bound + 1 points and verifying the remainder.
/// Throws on inconsistency ("not polynomial at tested degree") or
/// non-integral coefficients.
IntPoly fit_integer_polynomial(const std::vector<long>& xs, const std::vector<Int>& ys,
                               long degree_bound, const char* context);

/// Render like "q^3 - 2*q + 1" with variable name var.
std::string poly_to_string(const IntPoly& p, const std::string& var = "q");
std::string poly_to_string(const QPoly& p, const std::string& var = "q");

} // namespace bps
