#include "spherebraid/projective.hpp"

#include <cmath>

namespace spherebraid {

ProjPoint ProjPoint::from_homogeneous(Cx z, Cx w) {
  double n = std::sqrt(std::norm(z) + std::norm(w));
  z /= n;
  w /= n;
  Cx lead = (std::abs(z) > 0.0) ? z : w;
  Cx phase = std::conj(lead) / std::abs(lead);
  ProjPoint p;
  p.z = z * phase;
  p.w = w * phase;
  return p;
}

double great_circle_distance(const ProjPoint& a, const ProjPoint& b) {
  double half_chord = std::min(1.0, std::abs(bracket(a, b)));
  return 2.0 * std::asin(half_chord) * conv::kSphereRadius;
}

Eigen::Vector3d to_sphere3(const ProjPoint& p) {
  // n = (2 Re(z conj(w)), 2 Im(z conj(w)), |z|^2 - |w|^2) for unit-norm reps.
  Cx zw = p.z * std::conj(p.w);
  return {2.0 * zw.real(), 2.0 * zw.imag(), std::norm(p.z) - std::norm(p.w)};
}

ProjPoint from_sphere3(const Eigen::Vector3d& v) {
  Eigen::Vector3d n = v.normalized();
  Cx xy{n.x(), n.y()};
  if (n.z() <= 0.0) {
    return ProjPoint::from_homogeneous(xy, Cx{1.0 - n.z(), 0.0});
  }
  return ProjPoint::from_homogeneous(Cx{1.0 + n.z(), 0.0}, std::conj(xy));
}

ProjPoint random_point(Rng& rng) {
  double h = rng.uniform(-1.0, 1.0);
  double phi = rng.uniform(0.0, 2.0 * kPi);
  double r = std::sqrt(std::max(0.0, 1.0 - h * h));
  return from_sphere3({r * std::cos(phi), r * std::sin(phi), h});
}

namespace {

Cx gaussian_cx(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng.engine()), g(rng.engine())};
}

}  // namespace

Mobius random_mobius(Rng& rng) {
  for (;;) {
    Mobius m{gaussian_cx(rng), gaussian_cx(rng), gaussian_cx(rng), gaussian_cx(rng)};
    double d = std::abs(m.det());
    if (d < 1e-3) continue;
    double s = 1.0 / std::sqrt(d);
    m.a *= s;
    m.b *= s;
    m.c *= s;
    m.d *= s;
    return m;
  }
}

Mobius random_rotation(Rng& rng) {
  Cx a = gaussian_cx(rng);
  Cx b = gaussian_cx(rng);
  double n = std::sqrt(std::norm(a) + std::norm(b));
  if (n < 1e-12) return Mobius{};
  a /= n;
  b /= n;
  return Mobius{a, b, -std::conj(b), std::conj(a)};
}

}  // namespace spherebraid
