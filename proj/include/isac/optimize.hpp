#pragma once

#include <cmath>
#include <stdexcept>

namespace isac::opt {

/**
 * @brief Golden-section maximization of a unimodal/concave f on [lo, hi].
 *
 * Returns the bracket midpoint once the bracket width drops below tol.
 * Boundary maxima are fine: the bracket collapses onto the endpoint.
 */
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_max: requires lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("golden_section_max: requires tol > 0");
  constexpr double inv_phi = 0.6180339887498949;  // 1/phi
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace isac::opt
