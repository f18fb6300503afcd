#include "spherebraid/geodesic.hpp"

#include <cmath>

#include "spherebraid/errors.hpp"

namespace spherebraid {

ProjPoint geodesic_eval(const ProjPoint& a, const ProjPoint& b, double t) {
  if (chordal(antipode(a), b) < conv::kEpsAntipodal) {
    throw AntipodalPair("no unique minimal geodesic between antipodal points");
  }
  Eigen::Vector3d va = to_sphere3(a);
  Eigen::Vector3d vb = to_sphere3(b);
  double ang = std::atan2(va.cross(vb).norm(), va.dot(vb));
  if (ang < 1e-15) return a;
  double s = std::sin(ang);
  Eigen::Vector3d p = (std::sin((1.0 - t) * ang) * va + std::sin(t * ang) * vb) / s;
  return from_sphere3(p);
}

std::vector<ProjPoint> geodesic_path(const ProjPoint& a, const ProjPoint& b, int samples) {
  if (samples < 2) throw DomainError("geodesic_path needs at least 2 samples");
  std::vector<ProjPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double t = static_cast<double>(i) / (samples - 1);
    out.push_back(geodesic_eval(a, b, t));
  }
  return out;
}

}  // namespace spherebraid
