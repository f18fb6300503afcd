#pragma once

#include <functional>
#include <vector>

#include "spherebraid/measure.hpp"

namespace spherebraid {

enum class ProfileInterp { PiecewiseConstant, PiecewiseLinear, SmoothBump };

/// Radial speed profile omega(r) (in turns) of the rotational family:
/// constant on [0, r_min] and on [r_max, infinity), interpolated between
/// breakpoints.  SmoothBump uses C^1 cubic blending with flat knots.
struct RadialProfile {
  std::vector<double> breakpoints;  // strictly increasing, > 0
  std::vector<double> values;       // one per breakpoint, turns
  ProfileInterp interp = ProfileInterp::PiecewiseLinear;

  double operator()(double r) const;

  /// omega~(u) = omega(r(u)) on [-1, 1]; throws DomainError outside.
  double tilde(double u) const;

  /// [r_lo, r_hi] outside of which omega is constant.
  std::pair<double, double> extent() const;

  /// True when omega vanishes outside [lo, hi] and the constant tails are 0.
  bool supported_in(double lo, double hi) const;

  static RadialProfile constant(double value);

  /// Smooth bump of the given height supported in the annulus [r0, r1].
  static RadialProfile bump(double r0, double r1, double height);

  /// Dense piecewise-linear approximation of an arbitrary omega(r),
  /// sampled log-uniformly on [r_lo, r_hi] with constant tails.
  static RadialProfile tabulate(const std::function<double(double)>& omega, double r_lo,
                                double r_hi, int knots);
};

}  // namespace spherebraid
