#include "spherebraid/short_paths.hpp"

#include <cmath>

#include "spherebraid/errors.hpp"
#include "spherebraid/geodesic.hpp"

namespace spherebraid {

namespace {

constexpr double kChartWMin = 1e-12;

Cx affine_coord(const ProjPoint& p) {
  if (std::abs(p.w) < kChartWMin) {
    throw NegligibleSetHit("affine short path needs all points in chart 0");
  }
  return p.chart0();
}

// Minimal |A + t (B - A)| over t in [0, 1] and its argmin.
std::pair<double, double> segment_min(Cx A, Cx B) {
  Cx d = B - A;
  double dd = std::norm(d);
  if (dd == 0.0) return {std::abs(A), 0.0};
  double t = std::clamp(-(A.real() * d.real() + A.imag() * d.imag()) / dd, 0.0, 1.0);
  return {std::abs(A + t * d), t};
}

void check_geodesic(const Configuration& q, const Configuration& x) {
  int n = q.n();
  for (int i = 0; i < n; ++i) {
    if (chordal(antipode(q.points[i]), x.points[i]) < conv::kEpsAntipodal) {
      throw NegligibleSetHit("antipodal coordinate pair in geodesic short path");
    }
  }
  // coarse scan of pairwise distances along the path, with local refinement
  const int kGrid = 64;
  std::vector<std::vector<ProjPoint>> track(n);
  for (int i = 0; i < n; ++i) {
    track[i].reserve(kGrid + 1);
    for (int k = 0; k <= kGrid; ++k) {
      track[i].push_back(geodesic_eval(q.points[i], x.points[i], double(k) / kGrid));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double coarse = 2.0;
      int best = 0;
      for (int k = 0; k <= kGrid; ++k) {
        double d = chordal(track[i][k], track[j][k]);
        if (d < coarse) {
          coarse = d;
          best = k;
        }
      }
      if (coarse > 50.0 * conv::kLoopMinSep) continue;
      double lo = std::max(0.0, (best - 1.0) / kGrid), hi = std::min(1.0, (best + 1.0) / kGrid);
      for (int it = 0; it < 60; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        double d1 = chordal(geodesic_eval(q.points[i], x.points[i], m1),
                            geodesic_eval(q.points[j], x.points[j], m1));
        double d2 = chordal(geodesic_eval(q.points[i], x.points[i], m2),
                            geodesic_eval(q.points[j], x.points[j], m2));
        if (d1 < d2) {
          hi = m2;
        } else {
          lo = m1;
        }
      }
      double m = 0.5 * (lo + hi);
      double dmin = chordal(geodesic_eval(q.points[i], x.points[i], m),
                            geodesic_eval(q.points[j], x.points[j], m));
      if (std::min(dmin, coarse) < conv::kLoopMinSep) {
        throw NegligibleSetHit("geodesic short paths collide");
      }
    }
  }
}

void check_affine(const Configuration& q, const Configuration& x) {
  int n = q.n();
  std::vector<Cx> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = affine_coord(q.points[i]);
    b[i] = affine_coord(x.points[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto [dmin, t] = segment_min(a[i] - a[j], b[i] - b[j]);
      (void)dmin;
      Cx zi = (1.0 - t) * a[i] + t * b[i];
      Cx zj = (1.0 - t) * a[j] + t * b[j];
      double ch = chordal(ProjPoint::from_chart0(zi), ProjPoint::from_chart0(zj));
      if (ch < conv::kLoopMinSep) {
        throw NegligibleSetHit("affine segments collide at equal time");
      }
    }
  }
}

}  // namespace

Configuration short_path_eval(PathSystem system, const Configuration& q, const Configuration& x,
                              double t) {
  if (q.n() != x.n()) throw DomainError("short path endpoints differ in size");
  Configuration out;
  out.points.reserve(q.n());
  if (system == PathSystem::Geodesic) {
    for (int i = 0; i < q.n(); ++i) out.points.push_back(geodesic_eval(q.points[i], x.points[i], t));
  } else {
    for (int i = 0; i < q.n(); ++i) {
      Cx zi = (1.0 - t) * affine_coord(q.points[i]) + t * affine_coord(x.points[i]);
      out.points.push_back(ProjPoint::from_chart0(zi));
    }
  }
  return out;
}

void check_short_path(PathSystem system, const Configuration& q, const Configuration& x) {
  if (q.n() != x.n()) throw DomainError("short path endpoints differ in size");
  if (system == PathSystem::Geodesic) {
    check_geodesic(q, x);
  } else {
    check_affine(q, x);
  }
}

bool short_path_ok(PathSystem system, const Configuration& q, const Configuration& x) {
  try {
    check_short_path(system, q, x);
    return true;
  } catch (const NegligibleSetHit&) {
    return false;
  }
}

std::vector<Configuration> short_path(PathSystem system, const Configuration& q,
                                      const Configuration& x, int samples) {
  if (samples < 2) throw DomainError("short_path needs at least 2 samples");
  check_short_path(system, q, x);
  std::vector<Configuration> out;
  out.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    out.push_back(short_path_eval(system, q, x, double(k) / (samples - 1)));
  }
  return out;
}

}  // namespace spherebraid
