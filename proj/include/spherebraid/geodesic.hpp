#pragma once

#include <vector>

#include "spherebraid/projective.hpp"

namespace spherebraid {

/// Point at parameter t in [0,1] of the minimal great-circle arc from a
/// to b.  Throws AntipodalPair when b is within kEpsAntipodal (chordal) of
/// the antipode of a; a == b gives the constant path.
ProjPoint geodesic_eval(const ProjPoint& a, const ProjPoint& b, double t);

/// The minimal arc sampled at `samples` >= 2 equally spaced parameters
/// (endpoints included).
std::vector<ProjPoint> geodesic_path(const ProjPoint& a, const ProjPoint& b, int samples);

}  // namespace spherebraid
