#pragma once

#include "bpscheck/series.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace bps {

enum class FiltrationKind { Weight, Perverse, LessPerverse, Combined };

std::string filtration_kind_name(FiltrationKind k);

/// Graded dimensions of a filtration: (rank, cohomological degree,
/// filtration index) -> dim of the associated graded piece. Cumulative dims
/// are the partial sums over the index, so monotonicity is equivalent to
/// nonnegativity of the stored entries, and the cumulative dims stabilize to
/// the total dimension in that (rank, degree) slot.
class FiltrationTable {
public:
    using Key = std::array<int, 3>; // rank, degree, index

    explicit FiltrationTable(FiltrationKind kind) : kind_(kind) {}

    FiltrationKind kind() const { return kind_; }
    const std::map<Key, long long>& entries() const { return dims_; }

    void add(int rank, int deg, int idx, long long dim);
    long long dim(int rank, int deg, int idx) const;
    long long total(int rank, int deg) const;

    /// Structural invariants: nonnegative graded dims (monotone cumulative
    /// filtration), and for the less perverse kind support on even
    /// nonnegative indices only. Throws on violation.
    void validate() const;

    /// Self-test corruption: bump the filtration index of every entry of the
    /// given rank by delta.
    FiltrationTable with_shifted_indices(int rank, int delta) const;

private:
    FiltrationKind kind_;
    std::map<Key, long long> dims_;
};

struct FiltrationTables {
    FiltrationTable weight;
    FiltrationTable perverse;
    FiltrationTable less_perverse;
    FiltrationTable combined;
};

/// Genus-0 tables for pt/GL_r, r <= rmax. The weight table is read off the
/// reflected stack-count series (purity: weight = cohomological degree); the
/// perverse-side tables come from partition combinatorics of the symmetric
/// algebra on one generator per rank tensored with the q-shift tower.
FiltrationTables genus0_tables(int rmax, int deg_cap);

/// Genus-1 tables, ranks <= rmax, assembled by expanding the symmetric
/// algebra on one (1,2,1) package per rank tensored with the q-shift tower.
/// The weight side uses the torus profile (weights 0,2,4); the perverse side
/// uses the elliptic-fiber profile (perverse residuals 0,1,2) together with
/// the less perverse bookkeeping. Koszul signs enter as exterior powers on
/// the odd-degree part.
FiltrationTables genus1_tables(int rmax, int deg_cap);

struct TableWitness {
    int rank;
    int deg;
    int idx;
    long long lhs;
    long long rhs;
};

/// Checks dim Gr^W_{2i} = dim Gr^F_i for every rank, degree and index, plus
/// agreement of the per-(rank, degree) totals. Returns the first mismatch.
std::optional<TableWitness> compare_weight_vs_combined(const FiltrationTable& weight,
                                                       const FiltrationTable& combined);

} // namespace bps
