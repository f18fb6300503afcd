#include "spherebraid/radial_profile.hpp"

#include <algorithm>
#include <cmath>

#include "spherebraid/errors.hpp"

namespace spherebraid {

double RadialProfile::operator()(double r) const {
  if (breakpoints.empty()) return 0.0;
  if (r <= breakpoints.front()) return values.front();
  if (r >= breakpoints.back()) return values.back();
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), r);
  size_t hi = static_cast<size_t>(it - breakpoints.begin());
  size_t lo = hi - 1;
  switch (interp) {
    case ProfileInterp::PiecewiseConstant:
      return values[lo];
    case ProfileInterp::PiecewiseLinear: {
      double t = (r - breakpoints[lo]) / (breakpoints[hi] - breakpoints[lo]);
      return values[lo] + t * (values[hi] - values[lo]);
    }
    case ProfileInterp::SmoothBump: {
      double t = (r - breakpoints[lo]) / (breakpoints[hi] - breakpoints[lo]);
      double s = t * t * (3.0 - 2.0 * t);
      return values[lo] + s * (values[hi] - values[lo]);
    }
  }
  return values[lo];
}

double RadialProfile::tilde(double u) const {
  if (u < -1.0 || u > 1.0) throw DomainError("omega~ is defined on [-1, 1]");
  if (u >= 1.0) return breakpoints.empty() ? 0.0 : values.front();
  if (u <= -1.0) return breakpoints.empty() ? 0.0 : values.back();
  return (*this)(r_of_u(u));
}

std::pair<double, double> RadialProfile::extent() const {
  if (breakpoints.empty()) return {0.0, 0.0};
  return {breakpoints.front(), breakpoints.back()};
}

bool RadialProfile::supported_in(double lo, double hi) const {
  if (breakpoints.empty()) return true;
  if (values.front() != 0.0 || values.back() != 0.0) return false;
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    if (values[i] != 0.0 && (breakpoints[i] < lo || breakpoints[i] > hi)) return false;
  }
  return true;
}

RadialProfile RadialProfile::constant(double value) {
  return RadialProfile{{1.0}, {value}, ProfileInterp::PiecewiseConstant};
}

RadialProfile RadialProfile::bump(double r0, double r1, double height) {
  double w = r1 - r0;
  return RadialProfile{{r0, r0 + 0.25 * w, r1 - 0.25 * w, r1},
                       {0.0, height, height, 0.0},
                       ProfileInterp::SmoothBump};
}

RadialProfile RadialProfile::tabulate(const std::function<double(double)>& omega, double r_lo,
                                      double r_hi, int knots) {
  RadialProfile p;
  p.interp = ProfileInterp::PiecewiseLinear;
  double llo = std::log(r_lo), lhi = std::log(r_hi);
  p.breakpoints.reserve(knots);
  p.values.reserve(knots);
  for (int i = 0; i < knots; ++i) {
    double r = std::exp(llo + (lhi - llo) * i / (knots - 1));
    p.breakpoints.push_back(r);
    p.values.push_back(omega(r));
  }
  return p;
}

}  // namespace spherebraid
