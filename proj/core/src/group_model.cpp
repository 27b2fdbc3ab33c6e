#include "bpscheck/group_model.hpp"

#include "bpscheck/errors.hpp"

#include <sstream>
#include <thread>

namespace bps {

Mat mat_identity(const Fq& F, int r) { return mat_scalar(F, r, 1); }

Mat mat_scalar(const Fq& F, int r, int lambda) {
    (void)F;
    Mat m;
    m.r = r;
    for (int i = 0; i < r; ++i) m.at(i, i) = lambda;
    return m;
}

Mat mat_mul(const Fq& F, const Mat& x, const Mat& y) {
    Mat z;
    z.r = x.r;
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.r; ++j) {
            int acc = 0;
            for (int k = 0; k < x.r; ++k) acc = F.add(acc, F.mul(x.at(i, k), y.at(k, j)));
            z.at(i, j) = acc;
        }
    return z;
}

std::optional<Mat> mat_inverse(const Fq& F, const Mat& x) {
    int r = x.r;
    Mat a = x;
    Mat inv = mat_identity(F, r);
    for (int col = 0; col < r; ++col) {
        int pivot = -1;
        for (int row = col; row < r; ++row)
            if (a.at(row, col) != 0) { pivot = row; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < r; ++j) {
                std::swap(a.a[static_cast<size_t>(pivot * r + j)], a.a[static_cast<size_t>(col * r + j)]);
                std::swap(inv.a[static_cast<size_t>(pivot * r + j)], inv.a[static_cast<size_t>(col * r + j)]);
            }
        int scale = F.inv(a.at(col, col));
        for (int j = 0; j < r; ++j) {
            a.at(col, j) = F.mul(a.at(col, j), scale);
            inv.at(col, j) = F.mul(inv.at(col, j), scale);
        }
        for (int row = 0; row < r; ++row) {
            if (row == col) continue;
            int f = a.at(row, col);
            if (f == 0) continue;
            for (int j = 0; j < r; ++j) {
                a.at(row, j) = F.sub(a.at(row, j), F.mul(f, a.at(col, j)));
                inv.at(row, j) = F.sub(inv.at(row, j), F.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

bool mat_is_scalar(const Mat& x) {
    int d = x.at(0, 0);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.r; ++j)
            if (x.at(i, j) != (i == j ? d : 0)) return false;
    return true;
}

std::uint64_t mat_encode(const Mat& x, long q) {
    std::uint64_t code = 0;
    for (int i = x.r * x.r - 1; i >= 0; --i)
        code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(x.a[static_cast<size_t>(i)]);
    return code;
}

int GroupModel::index(const Mat& m) const {
    auto it = index_.find(mat_encode(m, F_.q()));
    if (it == index_.end()) throw Error("group model: matrix not in group (singular?)");
    return it->second;
}

int GroupModel::scalar(int lambda) const {
    return index(mat_scalar(F_, r_, lambda));
}

GroupModel build_group(int r, long q, long order_cap) {
    if (r < 1 || r > 3) throw Error("build_group: rank must be in [1,3]");
    GroupModel G;
    G.r_ = r;
    G.F_ = Fq::make(q);

    Int expected = 1;
    Int qr;
    mpz_ui_pow_ui(qr.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(r));
    for (int i = 0; i < r; ++i) {
        Int qi;
        mpz_ui_pow_ui(qi.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(i));
        expected *= qr - qi;
    }
    if (expected > order_cap) {
        std::ostringstream msg;
        msg << "build_group: |GL_" << r << "(F_" << q << ")| = " << expected.get_str()
            << " exceeds enumeration budget " << order_cap;
        throw BudgetError(msg.str());
    }

    long cells = r * r;
    long total = 1;
    for (long i = 0; i < cells; ++i) total *= q;
    G.elems_.reserve(expected.get_ui());
    for (long code = 0; code < total; ++code) {
        Mat m;
        m.r = r;
        long rest = code;
        for (long i = 0; i < cells; ++i) {
            m.a[static_cast<size_t>(i)] = static_cast<int>(rest % q);
            rest /= q;
        }
        if (mat_inverse(G.F_, m).has_value()) {
            int idx = static_cast<int>(G.elems_.size());
            G.index_.emplace(mat_encode(m, q), idx);
            G.elems_.push_back(m);
        }
    }
    G.order_ = static_cast<long>(G.elems_.size());
    if (G.order_ != expected)
        throw Error("build_group: enumerated order disagrees with the order formula");

    G.inv_t_.resize(G.elems_.size());
    for (size_t i = 0; i < G.elems_.size(); ++i) {
        auto inv = mat_inverse(G.F_, G.elems_[i]);
        G.inv_t_[i] = G.index(*inv);
    }
    G.id_ = G.index(mat_identity(G.F_, r));
    return G;
}

Int class_count(const GroupModel& G) {
    long n = G.size();
    std::vector<char> visited(static_cast<size_t>(n), 0);
    long classes = 0;
    for (long i = 0; i < n; ++i) {
        if (visited[static_cast<size_t>(i)]) continue;
        ++classes;
        for (long h = 0; h < n; ++h) {
            Mat conj = mat_mul(G.field(), mat_mul(G.field(), G.mat(static_cast<int>(h)), G.mat(static_cast<int>(i))),
                               G.mat(G.inv(static_cast<int>(h))));
            visited[static_cast<size_t>(G.index(conj))] = 1;
        }
    }
    return classes;
}

namespace {

// Counts tuples for `remaining` commutator slots whose product equals
// `required`, walking every pair explicitly.
std::uint64_t relation_rec(const GroupModel& G, const std::vector<int>& comm, long n, int remaining,
                           int required) {
    if (remaining == 1) {
        std::uint64_t c = 0;
        for (long idx = 0; idx < n * n; ++idx)
            if (comm[static_cast<size_t>(idx)] == required) ++c;
        return c;
    }
    std::uint64_t c = 0;
    for (long idx = 0; idx < n * n; ++idx) {
        int rest = G.mul(G.inv(comm[static_cast<size_t>(idx)]), required);
        c += relation_rec(G, comm, n, remaining - 1, rest);
    }
    return c;
}

} // namespace

Int brute_relation_count(const GroupModel& G, int genus, int central, long tuple_budget, int threads) {
    if (genus < 0) throw Error("brute_relation_count: negative genus");
    if (!G.is_scalar(central))
        throw Error("brute_relation_count: central element must be scalar");
    if (genus == 0) return central == G.identity() ? 1 : 0;

    long n = G.size();
    Int tuples;
    mpz_ui_pow_ui(tuples.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(2 * genus));
    if (tuples > tuple_budget) {
        std::ostringstream msg;
        msg << "brute_relation_count: |G|^{2g} = " << tuples.get_str() << " exceeds tuple budget "
            << tuple_budget;
        throw BudgetError(msg.str());
    }

    // Commutator table [a,b] = a b a^{-1} b^{-1}, indexed a*n + b.
    std::vector<int> comm(static_cast<size_t>(n) * static_cast<size_t>(n));
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    {
        auto fill = [&](long lo, long hi) {
            for (long a = lo; a < hi; ++a) {
                const Mat& A = G.mat(static_cast<int>(a));
                const Mat& Ai = G.mat(G.inv(static_cast<int>(a)));
                for (long b = 0; b < n; ++b) {
                    Mat m = mat_mul(G.field(), mat_mul(G.field(), A, G.mat(static_cast<int>(b))), Ai);
                    m = mat_mul(G.field(), m, G.mat(G.inv(static_cast<int>(b))));
                    comm[static_cast<size_t>(a * n + b)] = G.index(m);
                }
            }
        };
        std::vector<std::thread> pool;
        long chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            long lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(fill, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    if (genus == 1) {
        std::uint64_t c = 0;
        for (long idx = 0; idx < n * n; ++idx)
            if (comm[static_cast<size_t>(idx)] == central) ++c;
        return Int(static_cast<unsigned long>(c));
    }

    // Partition the outermost pair (A_1, B_1) across workers.
    std::vector<std::uint64_t> partial(static_cast<size_t>(threads), 0);
    auto work = [&](int tid, long lo, long hi) {
        std::uint64_t c = 0;
        for (long a = lo; a < hi; ++a)
            for (long b = 0; b < n; ++b) {
                int rest = G.mul(G.inv(comm[static_cast<size_t>(a * n + b)]), central);
                c += relation_rec(G, comm, n, genus - 1, rest);
            }
        partial[static_cast<size_t>(tid)] = c;
    };
    std::vector<std::thread> pool;
    long chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, t, lo, hi);
    }
    for (auto& th : pool) th.join();
    Int total = 0;
    for (std::uint64_t c : partial) total += Int(static_cast<unsigned long>(c));
    return total;
}

} // namespace bps
