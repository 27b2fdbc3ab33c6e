#include "bpscheck/filtration.hpp"

#include "bpscheck/lie_functors.hpp"
#include "bpscheck/numeric.hpp"

#include <climits>
#include <set>
#include <sstream>

namespace bps {

std::string filtration_kind_name(FiltrationKind k) {
    switch (k) {
    case FiltrationKind::Weight: return "W";
    case FiltrationKind::Perverse: return "H";
    case FiltrationKind::LessPerverse: return "L";
    case FiltrationKind::Combined: return "F";
    }
    return "?";
}

void FiltrationTable::add(int rank, int deg, int idx, long long dim) {
    if (dim == 0) return;
    dims_[Key{rank, deg, idx}] += dim;
    if (dims_[Key{rank, deg, idx}] == 0) dims_.erase(Key{rank, deg, idx});
}

long long FiltrationTable::dim(int rank, int deg, int idx) const {
    auto it = dims_.find(Key{rank, deg, idx});
    return it == dims_.end() ? 0 : it->second;
}

long long FiltrationTable::total(int rank, int deg) const {
    long long acc = 0;
    for (auto it = dims_.lower_bound(Key{rank, deg, INT_MIN});
         it != dims_.end() && (*it).first[0] == rank && (*it).first[1] == deg; ++it)
        acc += it->second;
    return acc;
}

void FiltrationTable::validate() const {
    for (const auto& [k, v] : dims_) {
        if (v < 0) {
            std::ostringstream msg;
            msg << filtration_kind_name(kind_) << "-table: negative graded dimension at rank "
                << k[0] << ", degree " << k[1] << ", index " << k[2]
                << " (cumulative filtration not monotone)";
            throw Error(msg.str());
        }
        if (kind_ == FiltrationKind::LessPerverse && (k[2] < 0 || k[2] % 2 != 0)) {
            std::ostringstream msg;
            msg << "L-table: support at index " << k[2] << " (must be even and >= 0)";
            throw Error(msg.str());
        }
    }
}

FiltrationTable FiltrationTable::with_shifted_indices(int rank, int delta) const {
    FiltrationTable t(kind_);
    for (const auto& [k, v] : dims_)
        t.add(k[0], k[1], k[0] == rank ? k[2] + delta : k[2], v);
    return t;
}

namespace {

// Trigraded nonnegative expansion helper: keys (rank, degree, index).
using TriKey = std::array<int, 3>;
using TriPoly = std::map<TriKey, long long>;

TriPoly tri_mul(const TriPoly& a, const TriPoly& b, int rank_cap, int deg_cap) {
    TriPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            int rank = ka[0] + kb[0];
            int deg = ka[1] + kb[1];
            if (rank > rank_cap || deg > deg_cap) continue;
            r[TriKey{rank, deg, ka[2] + kb[2]}] += ca * cb;
        }
    return r;
}

// Multiplies P by the symmetric/exterior series of `dim` copies of the
// monomial m: geometric weights for even degrees, binomial for odd.
void apply_factor(TriPoly& P, const TriKey& m, long dim, bool odd, int rank_cap, int deg_cap) {
    TriPoly factor;
    factor[TriKey{0, 0, 0}] = 1;
    for (long j = 1;; ++j) {
        int rank = static_cast<int>(j) * m[0];
        int deg = static_cast<int>(j) * m[1];
        if (rank > rank_cap || deg > deg_cap) break;
        if (odd && j > dim) break;
        Int w = odd ? binomial(dim, j) : multichoose(dim, j);
        factor[TriKey{rank, deg, static_cast<int>(j) * m[2]}] = w.get_si();
    }
    P = tri_mul(P, factor, rank_cap, deg_cap);
}

// One (1,2,1)-package per rank rho tensored with the q-shift tower, indexed
// per filtration kind by the supplied profile. profile(d, k) is the
// filtration index of the degree-(d + 2k) basis piece.
template <class Profile>
FiltrationTable expand_sym_table(FiltrationKind kind, int rmax, int deg_cap, Profile profile) {
    static const long package_dims[3] = {1, 2, 1};
    TriPoly P;
    P[TriKey{0, 0, 0}] = 1;
    for (int rho = 1; rho <= rmax; ++rho)
        for (int k = 0; 2 * k <= deg_cap; ++k)
            for (int d = 0; d <= 2; ++d) {
                int deg = d + 2 * k;
                if (deg > deg_cap) continue;
                TriKey m{rho, deg, profile(d, k)};
                apply_factor(P, m, package_dims[d], d % 2 == 1, rmax, deg_cap);
            }
    FiltrationTable table(kind);
    for (const auto& [k, v] : P) {
        if (k[0] == 0) continue; // rank-0 unit
        table.add(k[0], k[1], k[2], v);
    }
    return table;
}

} // namespace

FiltrationTables genus0_tables(int rmax, int deg_cap) {
    FiltrationTable W(FiltrationKind::Weight);
    // Counting route: coefficients of the reflected stack count of pt/GL_r.
    // Purity puts weight = cohomological degree on the diagonal.
    TruncationPolicy pol(0, 0, deg_cap);
    for (int r = 1; r <= rmax; ++r) {
        GradedSeries s = pt_mod_glr_bm_vir_series(r, 0, pol);
        for (const auto& [key, c] : s.terms()) {
            if (c < 0) throw Error("genus0 weight table: negative series coefficient");
            W.add(r, key.second, key.second, c.get_si());
        }
    }
    // Plethystic route: rank-r piece is Sym^r of one even generator tensored
    // with the q-shift tower. Partition counting, no series arithmetic.
    FiltrationTable H(FiltrationKind::Perverse);
    FiltrationTable L(FiltrationKind::LessPerverse);
    FiltrationTable F(FiltrationKind::Combined);
    for (int r = 1; r <= rmax; ++r)
        for (int K = 0; 2 * K <= deg_cap; ++K) {
            long long dim = partition_count(K, r).get_si();
            if (dim == 0) continue;
            H.add(r, 2 * K, 0, dim);
            L.add(r, 2 * K, 2 * K, dim);
            F.add(r, 2 * K, K, dim);
        }
    return FiltrationTables{std::move(W), std::move(H), std::move(L), std::move(F)};
}

FiltrationTables genus1_tables(int rmax, int deg_cap) {
    // Torus weights (0,2,4) on the Betti side.
    FiltrationTable W = expand_sym_table(FiltrationKind::Weight, rmax, deg_cap,
                                         [](int d, int k) { return 2 * d + 2 * k; });
    // Elliptic-fiber perverse residuals (0,1,2) along the coarse Hitchin map,
    // shifted by the q-tower.
    FiltrationTable H = expand_sym_table(FiltrationKind::Perverse, rmax, deg_cap,
                                         [](int d, int k) { return d + 2 * k; });
    // The q-shift tower carries the whole less perverse degree.
    FiltrationTable L = expand_sym_table(FiltrationKind::LessPerverse, rmax, deg_cap,
                                         [](int, int k) { return 2 * k; });
    // Combined index of a split summand: perverse residual plus half the
    // less perverse degree.
    FiltrationTable F = expand_sym_table(FiltrationKind::Combined, rmax, deg_cap,
                                         [](int d, int k) { return d + k; });
    return FiltrationTables{std::move(W), std::move(H), std::move(L), std::move(F)};
}

std::optional<TableWitness> compare_weight_vs_combined(const FiltrationTable& weight,
                                                       const FiltrationTable& combined) {
    // Collect every (rank, degree) slot appearing on either side.
    std::set<std::pair<int, int>> slots;
    int max_widx = 0, max_fidx = 0;
    for (const auto& [k, v] : weight.entries()) {
        slots.emplace(k[0], k[1]);
        max_widx = std::max(max_widx, k[2]);
    }
    for (const auto& [k, v] : combined.entries()) {
        slots.emplace(k[0], k[1]);
        max_fidx = std::max(max_fidx, k[2]);
    }
    int imax = std::max(max_fidx, (max_widx + 1) / 2);
    for (const auto& [rank, deg] : slots) {
        // Odd weights have no combined counterpart; they must vanish.
        for (int w = 0; w <= max_widx; ++w) {
            if (w % 2 == 0) continue;
            long long lhs = weight.dim(rank, deg, w);
            if (lhs != 0) return TableWitness{rank, deg, w, lhs, 0};
        }
        for (int i = 0; i <= imax; ++i) {
            long long lhs = weight.dim(rank, deg, 2 * i);
            long long rhs = combined.dim(rank, deg, i);
            if (lhs != rhs) return TableWitness{rank, deg, i, lhs, rhs};
        }
    }
    return std::nullopt;
}

} // namespace bps
