#include "bpscheck/polynomial.hpp"

#include <sstream>

namespace bps {

QPoly to_qpoly(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return QPoly(std::move(v));
}

IntPoly to_intpoly(const QPoly& p, const char* context) {
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1)
            throw Error(std::string(context) + ": non-integral coefficient " + c.get_str());
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

void divmod(const QPoly& a, const QPoly& b, QPoly* quot, QPoly* rem) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rat> r(a.coeffs());
    long db = b.degree();
    long da = static_cast<long>(r.size()) - 1;
    std::vector<Rat> q(da >= db ? static_cast<size_t>(da - db) + 1 : 0, Rat(0));
    Rat lead = b.coeff(db);
    for (long i = da; i >= db; --i) {
        Rat f = r[static_cast<size_t>(i)] / lead;
        if (f == 0) continue;
        q[static_cast<size_t>(i - db)] = f;
        for (long j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] -= f * b.coeff(j);
    }
    if (quot) *quot = QPoly(std::move(q));
    if (rem) *rem = QPoly(std::move(r));
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r;
        divmod(a, b, nullptr, &r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat inv_lead = Rat(1) / a.leading();
    return inv_lead * a;
}

QPoly interpolate(const std::vector<long>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size()) throw Error("interpolate: mismatched sample arrays");
    if (xs.empty()) throw Error("interpolate: no samples");
    // Newton divided differences.
    size_t n = xs.size();
    std::vector<Rat> dd(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i) {
            long dx = xs[i] - xs[i - level];
            if (dx == 0) throw Error("interpolate: repeated sample point");
            dd[i] = (dd[i] - dd[i - 1]) / Rat(dx);
            if (i == level) break;
        }
    QPoly result = QPoly::constant(dd[0]);
    QPoly basis = QPoly::constant(Rat(1));
    for (size_t i = 1; i < n; ++i) {
        basis = basis * (QPoly::variable() - QPoly::constant(Rat(xs[i - 1])));
        result = result + dd[i] * basis;
    }
    return result;
}

IntPoly fit_integer_polynomial(const std::vector<long>& xs, const std::vector<Int>& ys,
                               long degree_bound, const char* context) {
    if (degree_bound < 0) degree_bound = 0;
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (xs.size() != ys.size()) throw Error(std::string(context) + ": mismatched sample arrays");
    if (xs.size() < need)
        throw Error(std::string(context) + ": need at least " + std::to_string(need) +
                    " sample points for degree bound " + std::to_string(degree_bound));
    std::vector<long> fx(xs.begin(), xs.begin() + static_cast<long>(need));
    std::vector<Rat> fy;
    fy.reserve(need);
    for (size_t i = 0; i < need; ++i) fy.emplace_back(ys[i]);
    QPoly fit = interpolate(fx, fy);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (fit.eval(Rat(xs[i])) != Rat(ys[i]))
            throw Error(std::string(context) + ": not polynomial at tested degree (sample q=" +
                        std::to_string(xs[i]) + " disagrees with the degree-" +
                        std::to_string(degree_bound) + " fit)");
    }
    return to_intpoly(fit, context);
}

namespace {

template <class T>
std::string render(const Poly<T>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        T c = p.coeff(i);
        if (c == T(0)) continue;
        bool neg = c < T(0);
        T a = neg ? T(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::ostringstream term;
        if (i == 0) {
            term << a;
        } else {
            if (!(a == T(1))) term << a << "*";
            term << var;
            if (i > 1) term << "^" << i;
        }
        out << term.str();
    }
    return out.str();
}

} // namespace

std::string poly_to_string(const IntPoly& p, const std::string& var) { return render(p, var); }
std::string poly_to_string(const QPoly& p, const std::string& var) { return render(p, var); }

} // namespace bps
