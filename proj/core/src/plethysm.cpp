#include "bpscheck/plethysm.hpp"

#include <sstream>

namespace bps {

namespace {

// Rational-coefficient scratch series used inside pexp/plog. Same windowing
// rules as GradedSeries, with the policy carried alongside.
using Key = GradedSeries::Key;
using RatMap = std::map<Key, Rat>;

void rat_add(RatMap& dst, const Key& k, const Rat& v) {
    if (v == 0) return;
    auto [it, fresh] = dst.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) dst.erase(it);
    }
}

RatMap rat_from(const GradedSeries& f) {
    RatMap m;
    for (const auto& [k, c] : f.terms()) m.emplace(k, Rat(c));
    return m;
}

RatMap rat_mul(const RatMap& a, const RatMap& b, const TruncationPolicy& pol) {
    RatMap r;
    for (const auto& [ka, ca] : a) {
        if (ka.first > pol.t_max) continue;
        for (const auto& [kb, cb] : b) {
            int n = ka.first + kb.first;
            if (n > pol.t_max) break;
            int e2 = ka.second + kb.second;
            if (e2 < pol.e2_min || e2 > pol.e2_max) continue;
            rat_add(r, {n, e2}, ca * cb);
        }
    }
    return r;
}

RatMap rat_adams_trunc(const RatMap& a, int n, const TruncationPolicy& pol) {
    RatMap r;
    for (const auto& [k, c] : a) {
        long nn = static_cast<long>(k.first) * n;
        long ee = static_cast<long>(k.second) * n;
        if (nn > pol.t_max || ee < pol.e2_min || ee > pol.e2_max) continue;
        r.emplace(Key{static_cast<int>(nn), static_cast<int>(ee)}, c);
    }
    return r;
}

GradedSeries rat_to_series(const RatMap& m, const TruncationPolicy& pol, const char* op) {
    std::vector<GradedSeries::Term> terms;
    terms.reserve(m.size());
    for (const auto& [k, c] : m) {
        if (c.get_den() != 1) {
            std::ostringstream msg;
            msg << op << ": internal consistency failure, non-integral coefficient "
                << c.get_str() << " at (n=" << k.first << ", e2=" << k.second << ")";
            throw Error(msg.str());
        }
        terms.push_back({k.first, k.second, Int(c.get_num())});
    }
    return GradedSeries::make_series(pol, terms);
}

void require_no_constant_block(const GradedSeries& f, const char* op) {
    auto it = f.terms().begin();
    if (it != f.terms().end() && it->first.first == 0) {
        std::ostringstream msg;
        msg << op << ": nonzero t^0 part at e2=" << it->first.second;
        throw Error(msg.str());
    }
}

// Scratch window for iterated products. Partial products of terms with
// negative exponents can leave the caller's window and come back; padding by
// t_max times the deepest floor keeps every contributing chain alive, so the
// result is window-exact for the given argument.
TruncationPolicy scratch_window(const GradedSeries& f, bool skip_constant) {
    const TruncationPolicy& pol = f.policy();
    int fmin = 0;
    for (const auto& [k, c] : f.terms()) {
        if (skip_constant && k.first == 0) continue;
        fmin = std::min(fmin, k.second);
    }
    int pad = pol.t_max * (-fmin);
    return TruncationPolicy(pol.t_max, pol.e2_min - pad, pol.e2_max + pad);
}

GradedSeries on_window(const GradedSeries& f, const TruncationPolicy& pol) {
    std::vector<GradedSeries::Term> terms;
    for (const auto& [k, c] : f.terms()) terms.push_back({k.first, k.second, c});
    return GradedSeries::make_series(pol, terms);
}

// exp of a rational series with vanishing t^0 block.
RatMap rat_exp(const RatMap& arg, const TruncationPolicy& pol) {
    RatMap result;
    rat_add(result, {0, 0}, 1);
    RatMap power = result;
    for (int m = 1; m <= pol.t_max; ++m) {
        power = rat_mul(power, arg, pol);
        if (power.empty()) break;
        for (auto& [k, c] : power) c /= m;
        for (const auto& [k, c] : power) rat_add(result, k, c);
    }
    return result;
}

// log of a rational series with constant term 1 and no other t^0 terms.
RatMap rat_log(RatMap f, const TruncationPolicy& pol) {
    rat_add(f, {0, 0}, -1); // u = f - 1, zero t^0 block
    RatMap result;
    RatMap power;
    rat_add(power, {0, 0}, 1);
    int sign = 1;
    for (int k = 1; k <= pol.t_max; ++k) {
        power = rat_mul(power, f, pol);
        if (power.empty()) break;
        for (const auto& [key, c] : power) rat_add(result, key, Rat(sign) * c / k);
        sign = -sign;
    }
    return result;
}

} // namespace

GradedSeries pexp(const GradedSeries& f) {
    require_no_constant_block(f, "pexp");
    const TruncationPolicy& pol = f.policy();
    if (!pol.contains(0, 0))
        throw WindowError("pexp: window must contain the constant term");
    TruncationPolicy wide = scratch_window(f, false);
    GradedSeries fw = on_window(f, wide);
    RatMap arg;
    for (int n = 1; n <= wide.t_max; ++n) {
        GradedSeries psi = adams_truncating(fw, n);
        if (psi.is_zero()) continue;
        for (const auto& [k, c] : psi.terms()) rat_add(arg, k, Rat(c) / n);
    }
    RatMap wide_result = rat_exp(arg, wide);
    RatMap clipped;
    for (const auto& [k, c] : wide_result)
        if (pol.contains(k.first, k.second)) clipped.emplace(k, c);
    return rat_to_series(clipped, pol, "pexp");
}

GradedSeries plog(const GradedSeries& f) {
    const TruncationPolicy& pol = f.policy();
    if (!pol.contains(0, 0))
        throw WindowError("plog: window must contain the constant term");
    bool unit_seen = false;
    for (const auto& [k, c] : f.terms()) {
        if (k.first != 0) break;
        if (k.second != 0 || c != 1)
            throw Error("plog: constant block must be exactly 1");
        unit_seen = true;
    }
    if (!unit_seen) throw Error("plog: constant term must be 1");

    TruncationPolicy wide = scratch_window(f, true);
    RatMap lg = rat_log(rat_from(on_window(f, wide)), wide);
    RatMap result;
    for (int n = 1; n <= wide.t_max; ++n) {
        int mu = mobius(n);
        if (mu == 0) continue;
        RatMap psi = rat_adams_trunc(lg, n, wide);
        for (const auto& [k, c] : psi) {
            if (!pol.contains(k.first, k.second)) continue;
            rat_add(result, k, Rat(mu) * c / n);
        }
    }
    return rat_to_series(result, pol, "plog");
}

std::vector<Rat> elem_to_power(const SpectrumTuple& s) {
    return power_sums_extended(s, s.rank());
}

std::vector<Rat> power_sums_extended(const SpectrumTuple& s, long count) {
    long r = s.rank();
    std::vector<Rat> p(static_cast<size_t>(count), Rat(0));
    for (long k = 1; k <= count; ++k) {
        // p_k = sum_{i=1}^{min(k-1,r)} (-1)^{i-1} e_i p_{k-i}  [+ (-1)^{k-1} k e_k]
        Rat acc(0);
        int sign = 1;
        for (long i = 1; i < k && i <= r; ++i) {
            acc += Rat(sign) * s.s[static_cast<size_t>(i - 1)] * p[static_cast<size_t>(k - i - 1)];
            sign = -sign;
        }
        if (k <= r) acc += Rat(sign) * Rat(k) * s.s[static_cast<size_t>(k - 1)];
        p[static_cast<size_t>(k - 1)] = acc;
    }
    return p;
}

SpectrumTuple power_to_elem(const std::vector<Rat>& p, long r) {
    if (static_cast<long>(p.size()) < r)
        throw Error("power_to_elem: need at least r power sums");
    std::vector<Rat> e(static_cast<size_t>(r) + 1, Rat(0));
    e[0] = 1;
    for (long k = 1; k <= r; ++k) {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        Rat acc(0);
        int sign = 1;
        for (long i = 1; i <= k; ++i) {
            acc += Rat(sign) * e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i - 1)];
            sign = -sign;
        }
        e[static_cast<size_t>(k)] = acc / Rat(k);
    }
    return SpectrumTuple(std::vector<Rat>(e.begin() + 1, e.end()));
}

SpectrumTuple spectrum_cup(const SpectrumTuple& a, const SpectrumTuple& b) {
    long total = a.rank() + b.rank();
    if (total == 0) return SpectrumTuple();
    std::vector<Rat> pa = power_sums_extended(a, total);
    std::vector<Rat> pb = power_sums_extended(b, total);
    for (long i = 0; i < total; ++i) pa[static_cast<size_t>(i)] += pb[static_cast<size_t>(i)];
    return power_to_elem(pa, total);
}

} // namespace bps
