#include "bpscheck/series.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace bps {

TruncationPolicy TruncationPolicy::merged(const TruncationPolicy& other) const {
    int tmax = std::min(t_max, other.t_max);
    int lo = std::max(e2_min, other.e2_min);
    int hi = std::min(e2_max, other.e2_max);
    if (lo > hi)
        throw WindowError("policy merge: q windows do not overlap");
    return TruncationPolicy(tmax, lo, hi);
}

GradedSeries GradedSeries::unit(const TruncationPolicy& pol) {
    return monomial(pol, 0, 0, 1);
}

GradedSeries GradedSeries::monomial(const TruncationPolicy& pol, int n, int e2, Int c) {
    GradedSeries f(pol);
    if (c == 0) return f;
    if (!pol.contains(n, e2)) {
        std::ostringstream msg;
        msg << "monomial (" << n << ", " << e2 << "/2) outside window";
        throw WindowError(msg.str());
    }
    f.terms_.emplace(Key{n, e2}, std::move(c));
    return f;
}

GradedSeries GradedSeries::make_series(const TruncationPolicy& pol, const std::vector<Term>& terms) {
    GradedSeries f(pol);
    for (const auto& t : terms) {
        if (!pol.contains(t.n, t.e2)) {
            std::ostringstream msg;
            msg << "term (n=" << t.n << ", e2=" << t.e2 << ", c=" << t.c.get_str()
                << ") outside window [t<=" << pol.t_max << ", e2 in [" << pol.e2_min
                << ", " << pol.e2_max << "]]";
            throw WindowError(msg.str());
        }
        f.insert(t.n, t.e2, t.c);
    }
    return f;
}

void GradedSeries::insert(int n, int e2, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(Key{n, e2}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int GradedSeries::coeff(int n, int e2) const {
    if (!pol_.contains(n, e2)) {
        std::ostringstream msg;
        msg << "coeff(" << n << ", " << e2 << "/2): truncated region";
        throw WindowError(msg.str());
    }
    auto it = terms_.find(Key{n, e2});
    return it == terms_.end() ? Int(0) : it->second;
}

GradedSeries GradedSeries::restricted(const TruncationPolicy& pol) const {
    GradedSeries f(pol);
    for (const auto& [k, c] : terms_)
        if (pol.contains(k.first, k.second)) f.terms_.emplace(k, c);
    return f;
}

GradedSeries GradedSeries::shifted(int dn, int de2) const {
    GradedSeries f(pol_);
    for (const auto& [k, c] : terms_) {
        int n = k.first + dn, e2 = k.second + de2;
        if (!pol_.contains(n, e2)) {
            std::ostringstream msg;
            msg << "shift lands (" << n << ", " << e2 << "/2) outside window";
            throw WindowError(msg.str());
        }
        f.terms_.emplace(Key{n, e2}, c);
    }
    return f;
}

GradedSeries GradedSeries::operator-() const {
    GradedSeries f(pol_);
    for (const auto& [k, c] : terms_) f.terms_.emplace(k, -c);
    return f;
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
    TruncationPolicy pol = a.pol_.merged(b.pol_);
    GradedSeries f(pol);
    for (const auto& [k, c] : a.terms_)
        if (pol.contains(k.first, k.second)) f.insert(k.first, k.second, c);
    for (const auto& [k, c] : b.terms_)
        if (pol.contains(k.first, k.second)) f.insert(k.first, k.second, c);
    return f;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) { return a + (-b); }

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    TruncationPolicy pol = a.pol_.merged(b.pol_);
    GradedSeries f(pol);
    for (const auto& [ka, ca] : a.terms_) {
        if (ka.first > pol.t_max) continue;
        for (const auto& [kb, cb] : b.terms_) {
            int n = ka.first + kb.first;
            if (n > pol.t_max) break; // map order: n grows within a run
            int e2 = ka.second + kb.second;
            if (e2 < pol.e2_min || e2 > pol.e2_max) continue;
            f.insert(n, e2, ca * cb);
        }
    }
    return f;
}

GradedSeries operator*(const Int& s, const GradedSeries& a) {
    GradedSeries f(a.pol_);
    if (s == 0) return f;
    for (const auto& [k, c] : a.terms_) f.terms_.emplace(k, s * c);
    return f;
}

int GradedSeries::floor_e2(int n) const {
    auto it = terms_.lower_bound(Key{n, pol_.e2_min});
    if (it == terms_.end() || it->first.first != n) return 0;
    return it->first.second;
}

GradedSeries invert_geometric(const GradedSeries& f) {
    const TruncationPolicy& pol = f.pol_;
    // Constant block must be exactly 1.
    for (const auto& [k, c] : f.terms_) {
        if (k.first != 0) break;
        if (k.second != 0 || c != 1)
            throw Error("invert_geometric: not a unit for geometric inversion "
                        "(constant block must be exactly 1)");
    }
    if (!pol.contains(0, 0) || f.terms_.find({0, 0}) == f.terms_.end() || f.terms_.at({0, 0}) != 1)
        throw Error("invert_geometric: not a unit for geometric inversion "
                    "(constant term must be 1)");
    // Pad the scratch window so partial powers that dip below (or spike
    // above) the caller's window and return are not lost; the result is then
    // window-exact for the given f.
    int fmin = 0;
    for (const auto& [k, c] : f.terms_)
        if (k.first > 0) fmin = std::min(fmin, k.second);
    int pad = pol.t_max * (-fmin);
    TruncationPolicy wide(pol.t_max, pol.e2_min - pad, pol.e2_max + pad);
    GradedSeries v(wide); // unit - f, zero t^0 block
    for (const auto& [k, c] : f.terms_)
        if (k.first > 0) v.insert(k.first, k.second, -c);
    GradedSeries g = GradedSeries::unit(wide);
    GradedSeries p = GradedSeries::unit(wide);
    for (int k = 1; k <= wide.t_max; ++k) {
        p = p * v;
        if (p.is_zero()) break;
        g = g + p;
    }
    return g.restricted(pol);
}

namespace {

GradedSeries adams_impl(const GradedSeries& f, int n, bool truncate) {
    if (n < 1) throw Error("adams: n must be >= 1");
    const TruncationPolicy& pol = f.policy();
    GradedSeries g(pol);
    std::vector<GradedSeries::Term> kept;
    for (const auto& [k, c] : f.terms()) {
        long nn = static_cast<long>(k.first) * n;
        long ee = static_cast<long>(k.second) * n;
        if (nn > pol.t_max || ee < pol.e2_min || ee > pol.e2_max) {
            if (truncate) continue;
            std::ostringstream msg;
            msg << "adams(" << n << "): term (" << k.first << ", " << k.second
                << "/2) scales outside window";
            throw WindowError(msg.str());
        }
        kept.push_back({static_cast<int>(nn), static_cast<int>(ee), c});
    }
    return GradedSeries::make_series(pol, kept);
}

} // namespace

GradedSeries adams(const GradedSeries& f, int n) { return adams_impl(f, n, false); }

GradedSeries adams_truncating(const GradedSeries& f, int n) { return adams_impl(f, n, true); }

std::string GradedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1) && (k.first != 0 || k.second != 0);
        if (!unit_coeff) out << a.get_str();
        if (k.second != 0) {
            if (!unit_coeff) out << "*";
            out << "q";
            if (k.second != 2) {
                if (k.second % 2 == 0)
                    out << "^" << (k.second / 2);
                else
                    out << "^(" << k.second << "/2)";
            }
        }
        if (k.first != 0) {
            if (!unit_coeff || k.second != 0) out << "*";
            out << "t";
            if (k.first != 1) out << "^" << k.first;
        }
    }
    return out.str();
}

std::string series_to_json(const GradedSeries& f, int indent) {
    nlohmann::json j;
    j["policy"] = {{"t_max", f.policy().t_max},
                   {"e2_min", f.policy().e2_min},
                   {"e2_max", f.policy().e2_max}};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back({k.first, k.second, c.get_str()});
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

GradedSeries series_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    TruncationPolicy pol(j.at("policy").at("t_max").get<int>(),
                         j.at("policy").at("e2_min").get<int>(),
                         j.at("policy").at("e2_max").get<int>());
    std::vector<GradedSeries::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({t.at(0).get<int>(), t.at(1).get<int>(), Int(t.at(2).get<std::string>())});
    return GradedSeries::make_series(pol, terms);
}

} // namespace bps
