#pragma once

#include <cmath>
#include <functional>

namespace spherebraid {

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double fa, double b,
                      double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                            double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(f, a, fa, m, fm, lm, flm);
  double right = simpson(f, m, fm, b, fb, rm, frm);
  double err = left + right - whole;
  if (depth <= 0 || std::abs(err) < 15.0 * tol) return left + right + err / 15.0;
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature with absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-11, int max_depth = 40) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = detail::simpson(f, a, fa, b, fb, m, fm);
  return detail::adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace spherebraid
