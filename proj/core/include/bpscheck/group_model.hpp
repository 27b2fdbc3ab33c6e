#pragma once

#include "bpscheck/finite_field.hpp"
#include "bpscheck/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bps {

/// Square matrix over a table-based finite field, rank r <= 3.
struct Mat {
    int r = 0;
    std::array<int, 9> a{}; // row-major, entries are field indices

    int& at(int i, int j) { return a[static_cast<size_t>(i * r + j)]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i * r + j)]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_identity(const Fq& F, int r);
Mat mat_scalar(const Fq& F, int r, int lambda);
Mat mat_mul(const Fq& F, const Mat& x, const Mat& y);
/// Inverse by Gauss-Jordan elimination; empty when singular.
std::optional<Mat> mat_inverse(const Fq& F, const Mat& x);
bool mat_is_scalar(const Mat& x);
std::uint64_t mat_encode(const Mat& x, long q);

/// Explicit GL_r(F_q): the full element list, an index lookup, and inverse
/// tables. The order is verified against prod_{i<r}(q^r - q^i) at build time.
/// The brute-force oracle substrate for every counting identity.
class GroupModel {
public:
    int r() const { return r_; }
    const Fq& field() const { return F_; }
    long size() const { return static_cast<long>(elems_.size()); }
    const Int& order() const { return order_; }

    const Mat& mat(int idx) const { return elems_[static_cast<size_t>(idx)]; }
    int index(const Mat& m) const;
    int identity() const { return id_; }
    int scalar(int lambda) const; // index of lambda * Id, lambda nonzero
    int minus_identity() const { return scalar(F_.minus_one()); }

    int mul(int x, int y) const { return index(mat_mul(F_, mat(x), mat(y))); }
    int inv(int x) const { return inv_t_[static_cast<size_t>(x)]; }
    bool is_scalar(int x) const { return mat_is_scalar(mat(x)); }

    friend GroupModel build_group(int r, long q, long order_cap);

private:
    int r_ = 0;
    Fq F_;
    std::vector<Mat> elems_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<int> inv_t_;
    Int order_;
    int id_ = 0;
};

/// Enumerates GL_r(F_q), r in [1,3]. Errors when q is not a prime power or
/// the order formula exceeds order_cap.
GroupModel build_group(int r, long q, long order_cap = 200000);

/// Number of conjugacy classes, by sweeping conjugation orbits.
Int class_count(const GroupModel& G);

/// Exact number of 2g-tuples (A_1, B_1, ..., A_g, B_g) with
/// prod_i [A_i, B_i] = central. The central element must be an invertible
/// scalar. The full tuple space is enumerated (|G|^{2g} must stay within
/// tuple_budget), partitioned across threads over the outer pair.
Int brute_relation_count(const GroupModel& G, int genus, int central,
                         long tuple_budget = 100000000, int threads = 0);

} // namespace bps
