#pragma once

#include <Eigen/Dense>
#include <complex>

#include "spherebraid/conventions.hpp"
#include "spherebraid/rng.hpp"

namespace spherebraid {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// A point of CP^1 in canonical homogeneous coordinates: |z|^2 + |w|^2 = 1
/// and the first nonzero coordinate is real and nonnegative, so equal points
/// have equal representatives up to roundoff.
struct ProjPoint {
  Cx z{0.0, 0.0};
  Cx w{1.0, 0.0};

  static ProjPoint from_homogeneous(Cx z, Cx w);
  static ProjPoint from_chart0(Cx zeta) { return from_homogeneous(zeta, 1.0); }
  static ProjPoint from_chart_inf(Cx eta) { return from_homogeneous(1.0, eta); }
  static ProjPoint infinity() { return from_homogeneous(1.0, 0.0); }
  static ProjPoint zero() { return from_homogeneous(0.0, 1.0); }

  bool has_chart0() const { return std::abs(w) > 0.0; }
  bool has_chart_inf() const { return std::abs(z) > 0.0; }
  Cx chart0() const { return z / w; }
  Cx chart_inf() const { return w / z; }
};

/// z_i w_j - z_j w_i; its modulus is half the chordal distance for
/// unit-norm representatives.
inline Cx bracket(const ProjPoint& a, const ProjPoint& b) { return a.z * b.w - b.z * a.w; }

/// Euclidean distance between the images on the radius-1 round sphere,
/// in [0, 2].
inline double chordal(const ProjPoint& a, const ProjPoint& b) { return 2.0 * std::abs(bracket(a, b)); }

inline ProjPoint antipode(const ProjPoint& p) {
  return ProjPoint::from_homogeneous(-std::conj(p.w), std::conj(p.z));
}

/// Great-circle distance on the unit-curvature sphere, in [0, pi].
double great_circle_distance(const ProjPoint& a, const ProjPoint& b);

/// Unit vector in R^3 under the standard identification (chart-0 origin at
/// the south pole (0,0,-1), the point at infinity at the north pole).
Eigen::Vector3d to_sphere3(const ProjPoint& p);
ProjPoint from_sphere3(const Eigen::Vector3d& v);

/// Uniform point with respect to the normalized round measure.
ProjPoint random_point(Rng& rng);

/// A tangent vector expressed in one of the two affine charts.
/// sph_norm() is the half-scale comparison norm |v| / (1 + |zeta|^2); the
/// unit-curvature round speed is kMetricChartFactor times it.
struct TangentVector {
  ProjPoint base;
  Cx v{0.0, 0.0};
  int chart = 0;  // 0 or the infinity chart (any nonzero value)

  double sph_norm() const {
    Cx zeta = (chart == 0) ? base.chart0() : base.chart_inf();
    return std::abs(v) / (1.0 + std::norm(zeta));
  }
};

inline double round_speed(const TangentVector& t) { return conv::kMetricChartFactor * t.sph_norm(); }

/// Fractional-linear map acting on homogeneous coordinates.
struct Mobius {
  Cx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  ProjPoint apply(const ProjPoint& p) const {
    return ProjPoint::from_homogeneous(a * p.z + b * p.w, c * p.z + d * p.w);
  }
  Cx det() const { return a * d - b * c; }
  Mobius inverse() const { return Mobius{d, -b, -c, a}; }

  /// Derivative in chart 0 at zeta (both source and target in chart 0).
  Cx deriv_chart0(Cx zeta) const {
    Cx den = c * zeta + d;
    return det() / (den * den);
  }
};

/// Haar-ish random element of PSL(2, C): independent complex Gaussian
/// entries, renormalized; redrawn while the determinant is tiny.
Mobius random_mobius(Rng& rng);

/// Random rotation of the round sphere (unitary Mobius map).
Mobius random_rotation(Rng& rng);

}  // namespace spherebraid
