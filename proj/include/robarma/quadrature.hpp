#pragma once

#include <functional>

namespace robarma {

// Standard normal density and upper tail probability.
double normal_pdf(double x);
double normal_cdf(double x);

// Adaptive Simpson integration of f over [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// E[f(Z)] for Z ~ N(0,1). Integrates over [-cutoff, cutoff]; the default
// cutoff leaves a tail mass below 1e-15 for polynomially growing f.
double expect_normal(const std::function<double(double)>& f, double tol = 1e-12,
                     double cutoff = 10.0);

}  // namespace robarma
