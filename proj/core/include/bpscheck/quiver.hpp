#pragma once

#include "bpscheck/lie_functors.hpp"

#include <string>
#include <vector>

namespace bps {

/// Finite quiver: vertices 0..n_vertices-1, arrows as (source, target) pairs.
struct Quiver {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> arrows;

    Quiver() = default;
    Quiver(int n, std::vector<std::pair<int, int>> a);

    /// One vertex, no arrows.
    static Quiver point() { return Quiver(1, {}); }
    /// One vertex, one loop.
    static Quiver jordan() { return Quiver(1, {{0, 0}}); }
    /// One vertex, g loops.
    static Quiver loops(int g);
    /// Two vertices, one arrow 0 -> 1.
    static Quiver a2() { return Quiver(2, {{0, 1}}); }
};

/// Dimension vector: one nonnegative entry per vertex.
using DimVector = std::vector<long>;

/// chi_Q(d, e) = sum_i d_i e_i - sum_{a} d_{s(a)} e_{t(a)}.
long euler_form(const Quiver& Q, const DimVector& d, const DimVector& e);

/// (d, e)_Q = chi_Q(d, e) + chi_Q(e, d); symmetric.
long sym_euler(const Quiver& Q, const DimVector& d, const DimVector& e);

/// Exponent 1 - (d1, d2)_Q of the generalised Serre relation. Requires
/// (d1, d2)_Q <= 0 and is then strictly positive.
long serre_exponent(const Quiver& Q, const DimVector& d1, const DimVector& d2);

/// Tripled quiver: a and a* (reversed) for every arrow, plus one loop per
/// vertex; arrow count 2|Q_1| + |Q_0|, vertex set preserved.
Quiver triple_quiver(const Quiver& Q);

/// Virtual dimension -2*chi_Q(d, d) of the preprojective stage at d.
VirtualDimension preproj_vdim(const Quiver& Q, const DimVector& d);

/// Plain text format: one line "vertices: n", then "arrow: i j" lines.
/// Blank lines and lines starting with '#' are ignored. Parse errors carry
/// the 1-based line number.
Quiver parse_quiver(const std::string& text);
Quiver load_quiver(const std::string& path);

} // namespace bps
