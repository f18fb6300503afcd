#pragma once

#include <array>
#include <span>
#include <vector>

#include "spherebraid/projective.hpp"

namespace spherebraid {

/// Cross-ratio of four pairwise-distinct points, normalized so that
/// cr(inf, 0, 1, u) = u.  Throws DegenerateConfiguration when two inputs
/// coincide within kEpsPoint (chordal).
Cx cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3, const ProjPoint& x4);

/// Moduli projection pi_c: an n-tuple (n >= 4) maps to the (n-3)-tuple
/// (cr(x1,x2,x3,x4), ..., cr(x1,x2,x3,xn)) in X_{n-3}(C \ {0,1}).
std::vector<Cx> moduli_projection(std::span<const ProjPoint> x);

/// Complex partial derivatives of the affine cross-ratio
/// F(z1,z2,z3,z4) = (z1-z3)(z2-z4) / ((z2-z3)(z1-z4)) in chart 0.
std::array<Cx, 4> cross_ratio_partials_chart0(Cx z1, Cx z2, Cx z3, Cx z4);

}  // namespace spherebraid
