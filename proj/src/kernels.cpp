#include "robarma/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "robarma/quadrature.hpp"

namespace robarma {

namespace {

double expected_rho1(double s) {
  return expect_normal([s](double z) { return rho1(z / s); }, 1e-13);
}

// Root of E[rho1(Z/s)] = b. The expectation is strictly decreasing in s.
double solve_s0(double b) {
  double lo = 0.25, hi = 4.0;
  double flo = expected_rho1(lo) - b;
  double fhi = expected_rho1(hi) - b;
  for (int i = 0; i < 60 && !(flo > 0.0 && fhi < 0.0); ++i) {
    if (flo <= 0.0) { lo *= 0.5; flo = expected_rho1(lo) - b; }
    if (fhi >= 0.0) { hi *= 2.0; fhi = expected_rho1(hi) - b; }
  }
  if (!(flo > 0.0 && fhi < 0.0)) throw std::runtime_error("calibrate: no bracket for s0");
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = expected_rho1(mid) - b;
    if (fm > 0.0) lo = mid; else hi = mid;
    if (hi - lo < 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

const Calibration& calibrate() {
  static const Calibration cached = [] {
    Calibration c;
    c.b = kMScaleTarget;
    // eta is odd, so var(eta(Z)) = E[eta(Z)^2]; the integrand vanishes
    // beyond |z| = 3.
    c.kappa_sq = expect_normal([](double z) { double e = eta(z); return e * e; }, 1e-13, 4.0);
    c.s0 = solve_s0(c.b);
    c.eff = efficiency_at_normal(efficient_kernel(), c);
    return c;
  }();
  return cached;
}

double efficiency_at_normal(const RhoKernel& kernel2, const Calibration& calib) {
  const double s0 = calib.s0;
  const double e_psi_sq =
      expect_normal([&](double z) { double p = kernel2.psi(z / s0); return p * p; }, 1e-13);
  const double e_dpsi = expect_normal([&](double z) { return kernel2.dpsi(z / s0); }, 1e-13);
  if (e_psi_sq <= 0.0) throw std::runtime_error("efficiency_at_normal: degenerate score");
  return (e_dpsi * e_dpsi) / (s0 * s0 * e_psi_sq);
}

}  // namespace robarma
