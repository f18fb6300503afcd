#pragma once

#include <cmath>
#include <complex>

namespace spherebraid {

/// Density of the mass-1 round measure pulled back to chart 0:
/// d mu = chart_measure_density(zeta) dm(zeta), integrating to 1 over C.
inline double chart_measure_density(std::complex<double> zeta) {
  double s = 1.0 + std::norm(zeta);
  return 1.0 / (3.14159265358979323846 * s * s);
}

/// Measure of the chart-0 disk of radius r: a(r) = r^2 / (1 + r^2).
inline double cap_area(double r) {
  if (std::isinf(r)) return 1.0;
  return r * r / (1.0 + r * r);
}

/// u = 1 - 2 a(r), decreasing from 1 at r = 0 to -1 as r -> infinity.
inline double u_of_r(double r) {
  if (std::isinf(r)) return -1.0;
  return (1.0 - r * r) / (1.0 + r * r);
}

/// Inverse change of variables, r(u) = sqrt((1-u)/(1+u)) on (-1, 1].
inline double r_of_u(double u) {
  if (u <= -1.0) return std::numeric_limits<double>::infinity();
  return std::sqrt((1.0 - u) / (1.0 + u));
}

}  // namespace spherebraid
