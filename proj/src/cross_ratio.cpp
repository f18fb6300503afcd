#include "spherebraid/cross_ratio.hpp"

#include "spherebraid/errors.hpp"

namespace spherebraid {

namespace {

void require_distinct(std::span<const ProjPoint> pts) {
  for (size_t i = 0; i < pts.size(); ++i) {
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (chordal(pts[i], pts[j]) < conv::kEpsPoint) {
        throw DegenerateConfiguration("coincident points in cross-ratio input");
      }
    }
  }
}

}  // namespace

Cx cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3, const ProjPoint& x4) {
  const ProjPoint pts[4] = {x1, x2, x3, x4};
  require_distinct(pts);
  return (bracket(x1, x3) * bracket(x2, x4)) / (bracket(x2, x3) * bracket(x1, x4));
}

std::vector<Cx> moduli_projection(std::span<const ProjPoint> x) {
  if (x.size() < 4) throw DomainError("moduli projection needs at least 4 points");
  require_distinct(x);
  std::vector<Cx> out;
  out.reserve(x.size() - 3);
  for (size_t k = 3; k < x.size(); ++k) {
    out.push_back((bracket(x[0], x[2]) * bracket(x[1], x[k])) /
                  (bracket(x[1], x[2]) * bracket(x[0], x[k])));
  }
  return out;
}

std::array<Cx, 4> cross_ratio_partials_chart0(Cx z1, Cx z2, Cx z3, Cx z4) {
  Cx d = (z2 - z3) * (z1 - z4);
  Cx d2 = d * d;
  return {
      (z2 - z4) * (z2 - z3) * (z3 - z4) / d2,
      (z1 - z3) * (z1 - z4) * (z4 - z3) / d2,
      (z1 - z4) * (z2 - z4) * (z1 - z2) / d2,
      (z1 - z3) * (z2 - z3) * (z2 - z1) / d2,
  };
}

}  // namespace spherebraid
