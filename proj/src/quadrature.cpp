#include "ktrack/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ktrack {

namespace {

struct SimpsonState {
  const std::function<double(double)>& f;
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth, double* worst) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth <= 0) {
    if (depth <= 0 && std::abs(err) > *worst) *worst = std::abs(err);
    return left + right + err;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, worst) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, worst);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  double worst = 0.0;
  const double value = adaptive_step(f, a, b, fa, fm, fb, whole, tol, 48, &worst);
  if (worst > tol) {
    throw std::runtime_error("adaptive_simpson: tolerance " + std::to_string(tol) +
                             " not met, achieved error estimate " +
                             std::to_string(worst));
  }
  return value;
}

double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > rel_tol * (1.0 + std::abs(a) + std::abs(b));
       ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace ktrack
