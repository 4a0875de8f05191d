#include "robarma/quadrature.hpp"

#include <cmath>

namespace robarma {

double normal_pdf(double x) {
  static const double inv_sqrt_2pi = 0.3989422804014326779399461;
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double b,
                double fb, double fm, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, flm);
  const double right = simpson(f, m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(f, a, fa, b, fb, fm);
  return adaptive(f, a, fa, b, fb, fm, whole, tol, 48);
}

double expect_normal(const std::function<double(double)>& f, double tol, double cutoff) {
  auto integrand = [&f](double z) { return f(z) * normal_pdf(z); };
  // Split at zero; the integrands of interest often have a kink there.
  return integrate(integrand, -cutoff, 0.0, 0.5 * tol) +
         integrate(integrand, 0.0, cutoff, 0.5 * tol);
}

}  // namespace robarma
