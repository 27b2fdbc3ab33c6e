#pragma once

#include "bpscheck/group_model.hpp"
#include "bpscheck/lie_functors.hpp"
#include "bpscheck/rational_fn.hpp"

#include <vector>

namespace bps {

/// One family of irreducible GL_r(F_q) characters sharing a degree
/// polynomial: its multiplicity (number of characters, possibly with
/// rational constants like (q-1)(q-3)/4 from parameter-parity splits) and
/// the constant value of the central character at the chosen twist.
struct CharacterFamily {
    RationalFunctionQ degree;
    RationalFunctionQ multiplicity;
    int central_sign; // lambda_chi(z) on this (sub-)family, +1 or -1
};

/// Symbolic character-degree data for GL_r(F_q) at a central twist z.
/// twist_d = 0 means z = Id; twist_d = 1 (r = 2 only) means z = -Id, with
/// the parity-split sub-families valid for odd q.
struct CharacterDegreeData {
    int r = 1;
    int twist_d = 0;
    std::vector<CharacterFamily> families;

    static CharacterDegreeData gl1();
    static CharacterDegreeData gl2(int twist_d);

    /// For the acceptance self-tests: flip the central sign of one family.
    CharacterDegreeData with_flipped_sign(size_t family_index) const;
};

/// Validates the data against independently computed group invariants:
/// sum mult*deg^2 = |GL_r|, sum mult = class-count polynomial, and for the
/// -Id twist the column orthogonality sum sign*mult*deg^2 = 0.
void validate_character_data(const CharacterDegreeData& data);

/// Frobenius character-sum count of solutions of prod_i [A_i, B_i] = z in
/// GL_r(F_q)^{2g}: |G|^{2g-1} * sum_chi lambda_chi(z) chi(1)^{2-2g},
/// evaluated symbolically. The result must reduce to an integer polynomial
/// in q; anything else is a hard failure (wrong character data).
RationalFunctionQ frobenius_count(int r, int g, int d, const CharacterDegreeData& data);
RationalFunctionQ frobenius_count(int r, int g, int d);

/// Number of conjugacy classes of GL_r(F_q) by enumerating rational
/// canonical forms: assignments of partitions to monic irreducibles != x,
/// weighted by degree. No group enumeration; exact integers.
Int class_count_via_rcf(int r, long q);

/// Class-count polynomial fitted from per-q class counts. The group route
/// enumerates GL_r(F_q) models (r <= 2 at desk scale); the rcf route scales
/// to r = 3. Extra samples beyond degree r + 1 are consistency-checked.
IntPoly class_count_poly_from_groups(int r, const std::vector<long>& qs, long order_cap = 200000);
IntPoly class_count_poly_via_rcf(int r, const std::vector<long>& qs);

/// Point-count polynomial of the smooth twisted variety M^Betti_{g,r,d}
/// (gcd(r,d) = 1): relation count divided by |GL_r|/(q-1).
RationalFunctionQ smooth_twisted_count(int g, int r, int d);

/// Virtual BM series of the smooth twisted moduli, i.e. the dictionary
/// applied to its count with vdim = 2r^2(g-1)+2. Rank grading 0.
GradedSeries smooth_twisted_series(int g, int r, int d, const TruncationPolicy& pol);

/// Which counting oracle produced a stack count.
enum class CountOracle { Auto, Frobenius, ClassPolynomial };

/// Virtual BM series of the stack M^Betti_{g,r,d}: (relation count)/|GL_r|
/// through the dictionary at the supplied vdim. Frobenius handles r <= 2;
/// the class-polynomial route covers g = 1 (any r <= 3, rcf-backed).
GradedSeries stack_count_series(int g, int r, int d, VirtualDimension vdim,
                                const TruncationPolicy& pol,
                                CountOracle oracle = CountOracle::Auto);

} // namespace bps
