#pragma once

#include <array>
#include <cmath>
#include <utility>

namespace discretion {

namespace detail {

template <class F>
double simpson_recurse(const F& f, double a, double m, double b, double fa,
                       double fm, double fb, double whole, double tol,
                       int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with absolute tolerance. Degenerate intervals integrate
// to zero.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol,
                        int max_depth = 52) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

// Integral over the unit interval, pre-split at fixed knots so that mass
// concentrated near either endpoint (quantile-transformed integrands) is
// never skipped by the first coarse samples.
template <class F>
double integrate_unit(const F& f, double tol) {
  static constexpr std::array<double, 21> knots = {
      0.0,    1e-12,  1e-9,   1e-6,   1e-4,      1e-3,      0.01,
      0.05,   0.1,    0.25,   0.5,    0.75,      0.9,       0.95,
      0.99,   0.999,  0.9999, 1e-6,   1e-9,      1e-12,     1.0};
  // mirrored upper knots are expressed as distances from 1
  double total = 0.0;
  const double seg_tol = tol / 20.0;
  double prev = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    double next = (i >= 17 && i < 20) ? 1.0 - knots[i] : knots[i];
    if (next <= prev) continue;
    total += adaptive_simpson(f, prev, next, seg_tol);
    prev = next;
  }
  return total;
}

}  // namespace discretion
