#pragma once

#include <cmath>
#include <limits>

namespace robarma {

// Bounded loss used by the efficient M-step: quadratic up to |x| = 2, a
// smooth even polynomial blend on 2 < |x| <= 3, constant 3.25 beyond. Its
// derivative psi2 redescends to zero at |x| = 3, so gross outliers drop out
// of the scores entirely.
inline double rho2(double x) {
  const double ax = std::fabs(x);
  if (ax <= 2.0) return 0.5 * x * x;
  if (ax <= 3.0) {
    const double x2 = ax * ax;
    return ((((0.002 * x2 - 0.052) * x2 + 0.432) * x2 - 0.972) * x2) + 1.792;
  }
  return 3.25;
}

// psi2 = rho2', odd.
inline double psi2(double x) {
  const double ax = std::fabs(x);
  if (ax <= 2.0) return x;
  if (ax <= 3.0) {
    const double x2 = ax * ax;
    const double v = (((0.016 * x2 - 0.312) * x2 + 1.728) * x2 - 1.944) * ax;
    return x >= 0.0 ? v : -v;
  }
  return 0.0;
}

// psi2' = rho2'', even.
inline double dpsi2(double x) {
  const double ax = std::fabs(x);
  if (ax <= 2.0) return 1.0;
  if (ax <= 3.0) {
    const double x2 = ax * ax;
    return ((0.112 * x2 - 1.56) * x2 + 5.184) * x2 - 1.944;
  }
  return 0.0;
}

inline constexpr double kRhoMax = 3.25;

// Stretch factor relating the scale loss to the efficient loss:
// rho1(x) = rho2(x / 0.405). The wider identity zone makes the M-scale based
// on rho1 consistent for the standard deviation under normal samples with
// target b = max(rho1) / 2.
inline constexpr double kRho1Stretch = 0.405;

inline double rho1(double x) { return rho2(x / kRho1Stretch); }
inline double psi1(double x) { return psi2(x / kRho1Stretch) / kRho1Stretch; }

// The shrinkage function of the bounded-propagation residual recursion.
inline double eta(double x) { return psi2(x); }

// M-scale target: b / max(rho1) = 0.5 gives 50% breakdown.
inline constexpr double kMScaleTarget = 0.5 * kRhoMax;

// Polymorphic view of a bounded loss, for code that is generic over the
// tuning (scale solver, efficiency functional).
class RhoKernel {
 public:
  virtual ~RhoKernel() = default;
  virtual double rho(double x) const = 0;
  virtual double psi(double x) const = 0;
  virtual double dpsi(double x) const = 0;
  virtual double max_value() const = 0;
};

// rho2 with an optional stretch: evaluates rho2(x * lambda). Stretch 1 is the
// efficient M-step loss; stretch 0.405 recovers the scale loss rho1.
class BoundedRho final : public RhoKernel {
 public:
  explicit BoundedRho(double lambda = 1.0) : lambda_(lambda) {}
  double rho(double x) const override { return rho2(x * lambda_); }
  double psi(double x) const override { return lambda_ * psi2(x * lambda_); }
  double dpsi(double x) const override { return lambda_ * lambda_ * dpsi2(x * lambda_); }
  double max_value() const override { return kRhoMax; }

 private:
  double lambda_;
};

inline const RhoKernel& scale_kernel() {
  static const BoundedRho k(1.0 / kRho1Stretch);
  return k;
}

inline const RhoKernel& efficient_kernel() {
  static const BoundedRho k(1.0);
  return k;
}

// Unbounded quadratic loss; turns the M-step into conditional least squares.
// Not usable as a scale kernel (max_value is infinite).
class QuadraticRho final : public RhoKernel {
 public:
  double rho(double x) const override { return 0.5 * x * x; }
  double psi(double x) const override { return x; }
  double dpsi(double) const override { return 1.0; }
  double max_value() const override { return std::numeric_limits<double>::infinity(); }
};

// Population constants of the kernel pair under the standard normal.
struct Calibration {
  double b;         // M-scale target, max(rho1)/2
  double kappa_sq;  // var of eta(Z), Z ~ N(0,1)
  double s0;        // solves E[rho1(Z/s0)] = b
  double eff;       // asymptotic efficiency of the efficient loss at the normal
};

// Computed once by quadrature and cached.
const Calibration& calibrate();

// Efficiency of an M-step loss at the normal, against the conditional
// maximum likelihood benchmark, with the residual scale set by rho1.
double efficiency_at_normal(const RhoKernel& kernel2, const Calibration& calib);

}  // namespace robarma
