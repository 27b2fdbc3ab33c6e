#include "bpscheck/kac.hpp"

#include "bpscheck/group_model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace bps {

namespace {

// dim of {X in Mat_{dt x ds}(F_q) : gt X = X gs}, by Gaussian elimination on
// the dt*ds unknowns.
int fixed_hom_dim(const Fq& F, const Mat& gt, const Mat& gs) {
    int dt = gt.r, ds = gs.r;
    int vars = dt * ds;
    // rows: equation (i,j): sum_k gt[i,k] X[k,j] - sum_l X[i,l] gs[l,j] = 0
    std::vector<int> rows(static_cast<size_t>(vars) * vars, 0);
    for (int i = 0; i < dt; ++i)
        for (int j = 0; j < ds; ++j) {
            int* row = rows.data() + static_cast<size_t>(i * ds + j) * vars;
            for (int k = 0; k < dt; ++k) row[k * ds + j] = F.add(row[k * ds + j], gt.at(i, k));
            for (int l = 0; l < ds; ++l) row[i * ds + l] = F.sub(row[i * ds + l], gs.at(l, j));
        }
    // rank
    int rank = 0;
    for (int col = 0; col < vars && rank < vars; ++col) {
        int pivot = -1;
        for (int r2 = rank; r2 < vars; ++r2)
            if (rows[static_cast<size_t>(r2) * vars + col] != 0) { pivot = r2; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < vars; ++c)
                std::swap(rows[static_cast<size_t>(pivot) * vars + c], rows[static_cast<size_t>(rank) * vars + c]);
        int scale = F.inv(rows[static_cast<size_t>(rank) * vars + col]);
        for (int c = 0; c < vars; ++c)
            rows[static_cast<size_t>(rank) * vars + c] = F.mul(rows[static_cast<size_t>(rank) * vars + c], scale);
        for (int r2 = 0; r2 < vars; ++r2) {
            if (r2 == rank) continue;
            int f = rows[static_cast<size_t>(r2) * vars + col];
            if (f == 0) continue;
            for (int c = 0; c < vars; ++c)
                rows[static_cast<size_t>(r2) * vars + c] =
                    F.sub(rows[static_cast<size_t>(r2) * vars + c], F.mul(f, rows[static_cast<size_t>(rank) * vars + c]));
        }
        ++rank;
    }
    return vars - rank;
}

struct BurnsideSetup {
    std::vector<int> vertex_of_group;     // active vertices (d_i >= 1)
    std::vector<const GroupModel*> groups;
};

// Sum over group tuples of q^{sum_arrows fixdim}; the caller divides by the
// group order. Parallel over the first group's elements.
Int burnside_sum(const Quiver& Q, const DimVector& d, long q,
                 const std::vector<GroupModel>& models, const std::vector<int>& model_of_vertex,
                 int threads) {
    std::vector<int> active; // vertices with d_i >= 1
    for (int v = 0; v < Q.n_vertices; ++v)
        if (d[static_cast<size_t>(v)] >= 1) active.push_back(v);
    if (active.empty()) return 1; // the zero representation

    const Fq& F = models[static_cast<size_t>(model_of_vertex[static_cast<size_t>(active[0])])].field();

    // Arrows between active vertices; others contribute dimension zero.
    std::vector<std::pair<int, int>> arrows;
    for (const auto& [s, t] : Q.arrows)
        if (d[static_cast<size_t>(s)] >= 1 && d[static_cast<size_t>(t)] >= 1)
            arrows.emplace_back(s, t);

    // Positions of each arrow's endpoints inside the active-vertex list.
    std::vector<std::pair<size_t, size_t>> arrow_pos;
    for (const auto& [s, t] : arrows) {
        size_t si = 0, ti = 0;
        for (size_t i = 0; i < active.size(); ++i) {
            if (active[i] == s) si = i;
            if (active[i] == t) ti = i;
        }
        arrow_pos.emplace_back(si, ti);
    }
    auto group_at = [&](size_t i) -> const GroupModel& {
        return models[static_cast<size_t>(model_of_vertex[static_cast<size_t>(active[i])])];
    };

    long outer_n = group_at(0).size();
    long inner_total = 1;
    for (size_t i = 1; i < active.size(); ++i) inner_total *= group_at(i).size();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::vector<Int> partial(static_cast<size_t>(threads), 0);
    auto work = [&](int tid, long lo, long hi) {
        Int acc = 0;
        std::vector<int> pick(active.size(), 0);
        std::vector<Int> q_pow; // q^e cache, grown on demand
        for (long first = lo; first < hi; ++first) {
            pick[0] = static_cast<int>(first);
            for (long flat = 0; flat < inner_total; ++flat) {
                long rest = flat;
                for (size_t i = 1; i < active.size(); ++i) {
                    long sz = group_at(i).size();
                    pick[i] = static_cast<int>(rest % sz);
                    rest /= sz;
                }
                long exponent = 0;
                for (size_t a = 0; a < arrows.size(); ++a) {
                    const auto& [si, ti] = arrow_pos[a];
                    exponent += fixed_hom_dim(F, group_at(ti).mat(pick[ti]), group_at(si).mat(pick[si]));
                }
                while (static_cast<long>(q_pow.size()) <= exponent) {
                    Int p;
                    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                                  static_cast<unsigned long>(q_pow.size()));
                    q_pow.push_back(p);
                }
                acc += q_pow[static_cast<size_t>(exponent)];
            }
        }
        partial[static_cast<size_t>(tid)] = acc;
    };

    std::vector<std::thread> pool;
    long chunk = (outer_n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * chunk, hi = std::min(outer_n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, t, lo, hi);
    }
    for (auto& th : pool) th.join();
    Int total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

} // namespace

Int count_rep_classes(const Quiver& Q, const DimVector& d, long q, const KacOptions& opts) {
    if (static_cast<int>(d.size()) != Q.n_vertices)
        throw Error("count_rep_classes: dimension vector length mismatch");
    long total_dim = 0;
    for (long di : d) total_dim += di;
    if (total_dim == 0) return 1;

    // One model per distinct active dimension.
    std::map<long, int> model_index;
    std::vector<GroupModel> models;
    std::vector<int> model_of_vertex(static_cast<size_t>(Q.n_vertices), -1);
    Int group_order = 1;
    for (int v = 0; v < Q.n_vertices; ++v) {
        long dv = d[static_cast<size_t>(v)];
        if (dv < 1) continue;
        if (dv > 3) throw Error("count_rep_classes: per-vertex dimension capped at 3");
        auto it = model_index.find(dv);
        if (it == model_index.end()) {
            models.push_back(build_group(static_cast<int>(dv), q, opts.group_order_cap));
            it = model_index.emplace(dv, static_cast<int>(models.size()) - 1).first;
        }
        model_of_vertex[static_cast<size_t>(v)] = it->second;
        group_order *= models[static_cast<size_t>(it->second)].order();
    }
    if (group_order > opts.group_order_cap)
        throw BudgetError("count_rep_classes: |GL_d(F_q)| = " + group_order.get_str() +
                          " exceeds the enumeration budget");

    Int total = burnside_sum(Q, d, q, models, model_of_vertex, opts.threads);
    if (total % group_order != 0)
        throw Error("count_rep_classes: Burnside sum not divisible by the group order");
    return total / group_order;
}

namespace {

// All dimension vectors 0 < d' <= d componentwise, sorted by total dimension.
std::vector<DimVector> sub_dims(const DimVector& d) {
    std::vector<DimVector> result;
    DimVector cur(d.size(), 0);
    while (true) {
        size_t i = 0;
        while (i < d.size() && cur[i] == d[i]) cur[i++] = 0;
        if (i == d.size()) break;
        ++cur[i];
        result.push_back(cur);
    }
    std::sort(result.begin(), result.end(), [](const DimVector& a, const DimVector& b) {
        long ta = 0, tb = 0;
        for (long v : a) ta += v;
        for (long v : b) tb += v;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return result;
}

// Krull-Schmidt inversion at a fixed q: from iso-class counts m to
// indecomposable counts i over the sub-dimension lattice.
std::map<DimVector, Int> indecomposable_counts(const std::map<DimVector, Int>& m, const DimVector& d) {
    std::map<DimVector, Int> indec;
    // P = prod over processed d' of (1 - x^{d'})^{-i_{d'}}, truncated to the lattice.
    std::map<DimVector, Int> P;
    P.emplace(DimVector(d.size(), 0), 1);
    for (const DimVector& dv : sub_dims(d)) {
        Int below = 0;
        auto it = P.find(dv);
        if (it != P.end()) below = it->second;
        Int i_dv = m.at(dv) - below;
        if (i_dv < 0)
            throw Error("kac_polynomial: negative indecomposable count (oracle bug)");
        indec.emplace(dv, i_dv);
        if (i_dv == 0) continue;
        // P *= (1 - x^{dv})^{-i_dv}: convolve with multichoose weights.
        std::map<DimVector, Int> next;
        for (const auto& [key, val] : P) {
            DimVector shifted = key;
            for (long j = 0;; ++j) {
                if (j > 0) {
                    bool ok = true;
                    for (size_t c = 0; c < shifted.size(); ++c) {
                        shifted[c] += dv[c];
                        if (shifted[c] > d[c]) ok = false;
                    }
                    if (!ok) break;
                }
                Int w = (j == 0) ? Int(1) : multichoose(i_dv.get_si(), j);
                next[shifted] += val * w;
            }
        }
        P = std::move(next);
    }
    return indec;
}

DimVector divide(const DimVector& d, long s) {
    DimVector r(d.size());
    for (size_t i = 0; i < d.size(); ++i) r[i] = d[i] / s;
    return r;
}

long gcd_of(const DimVector& d) {
    long g = 0;
    for (long v : d) g = std::gcd(g, v);
    return g;
}

} // namespace

KacPolynomial kac_polynomial(const Quiver& Q, const DimVector& d,
                             const std::vector<long>& q_samples, const KacOptions& opts) {
    long total_dim = 0;
    for (long v : d) total_dim += v;
    if (total_dim == 0) throw Error("kac_polynomial: zero dimension vector");
    if (total_dim > opts.total_dim_cap)
        throw BudgetError("kac_polynomial: total dimension exceeds the configured cap");

    long chi = euler_form(Q, d, d);
    long degree_bound = std::max<long>(0, 1 - chi);
    if (static_cast<long>(q_samples.size()) < degree_bound + 2)
        throw Error("kac_polynomial: need at least " + std::to_string(degree_bound + 2) +
                    " sample points (degree bound plus a consistency check)");

    // Kac polynomials of proper fractional dimension vectors, recursively.
    std::map<long, IntPoly> smaller; // s -> a_{d/s}
    long g = gcd_of(d);
    for (long s = 2; s <= g; ++s) {
        if (g % s != 0) continue;
        smaller.emplace(s, kac_polynomial(Q, divide(d, s), q_samples, opts).poly);
    }

    std::vector<Int> values;
    values.reserve(q_samples.size());
    for (long q : q_samples) {
        std::map<DimVector, Int> m;
        for (const DimVector& dv : sub_dims(d)) m.emplace(dv, count_rep_classes(Q, dv, q, opts));
        std::map<DimVector, Int> indec = indecomposable_counts(m, d);

        // Galois descent: i_d(q) = sum_{s | gcd(d)} (1/s) sum_{e | s} mu(s/e) a_{d/s}(q^e);
        // the s = 1 term is a_d(q) itself.
        Rat a(indec.at(d));
        for (long s = 2; s <= g; ++s) {
            if (g % s != 0) continue;
            const IntPoly& as = smaller.at(s);
            Rat correction(0);
            for (long e = 1; e <= s; ++e) {
                if (s % e != 0) continue;
                Int qe;
                mpz_ui_pow_ui(qe.get_mpz_t(), static_cast<unsigned long>(q),
                              static_cast<unsigned long>(e));
                correction += Rat(mobius(s / e)) * Rat(as.eval(qe));
            }
            a -= correction / Rat(s);
        }
        if (a.get_den() != 1)
            throw Error("kac_polynomial: Galois descent produced a non-integer count");
        values.push_back(Int(a.get_num()));
    }

    IntPoly fitted = fit_integer_polynomial(q_samples, values, degree_bound, "kac_polynomial");
    for (const Int& c : fitted.coeffs())
        if (c < 0) throw Error("kac_polynomial: negative coefficient violates Kac positivity");
    return KacPolynomial{fitted};
}

} // namespace bps
