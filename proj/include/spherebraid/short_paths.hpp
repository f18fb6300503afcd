#pragma once

#include <vector>

#include "spherebraid/configuration.hpp"

namespace spherebraid {

enum class PathSystem { Geodesic, Affine };

/// Point at parameter t in [0,1] of the short path from q to x:
/// coordinate-wise minimal geodesics, or straight chart-0 segments.
Configuration short_path_eval(PathSystem system, const Configuration& q, const Configuration& x,
                              double t);

/// Throws NegligibleSetHit when the short path from q to x is degenerate:
/// an antipodal coordinate pair (geodesic), a point without chart-0
/// coordinates (affine), or two coordinate paths meeting at equal time.
void check_short_path(PathSystem system, const Configuration& q, const Configuration& x);

bool short_path_ok(PathSystem system, const Configuration& q, const Configuration& x);

/// The short path sampled at `samples` >= 2 uniform parameters.
std::vector<Configuration> short_path(PathSystem system, const Configuration& q,
                                      const Configuration& x, int samples);

}  // namespace spherebraid
