#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace robarma {

// ARMA(p,q) parameter vector. The operator convention is
//   phi(B) = 1 - sum_i phi[i] B^(i+1),  theta(B) = 1 - sum_i theta[i] B^(i+1),
// and the model is phi(B)(x_t - mu) = theta(B) a_t. Note the minus sign on
// the MA side: fits compared against software using theta(B) = 1 + sum theta_i B^i
// must negate the MA coefficients.
struct ArmaParams {
  int p = 0;
  int q = 0;
  std::vector<double> phi;
  std::vector<double> theta;
  double mu = 0.0;

  ArmaParams() = default;
  ArmaParams(std::vector<double> phi_in, std::vector<double> theta_in, double mu_in)
      : p(static_cast<int>(phi_in.size())),
        q(static_cast<int>(theta_in.size())),
        phi(std::move(phi_in)),
        theta(std::move(theta_in)),
        mu(mu_in) {}
};

constexpr double kDefaultZeta = 0.02;

// Smallest root modulus of 1 - sum_i coeffs[i] B^(i+1); +infinity when the
// polynomial is constant (empty or all-zero coefficients). Roots come from
// the eigenvalues of the companion matrix.
double min_root_modulus(std::span<const double> coeffs);

// True iff every root of the AR and MA polynomials has modulus >= 1 + zeta.
bool region_check(std::span<const double> phi, std::span<const double> theta, double zeta);
bool region_check(const ArmaParams& params, double zeta = kDefaultZeta);

// Truncated expansion of numer(B)/denom(B) = 1 + sum_i coeffs[i] B^(i+1),
// both polynomials in the 1 - sum c_i B^i convention. The implicit leading 1
// is not stored.
struct SeriesExpansion {
  std::vector<double> coeffs;
  int truncation_len = 0;
  double tail_bound = 0.0;
  bool converged = true;

  // sum of squared coefficients including the implicit leading 1
  double sum_sq_with_leading_one() const;
};

// Long division of the two power series. Stops once the geometric tail bound
// (rate 1/min-root-modulus of denom) falls below tol, capped at max_len.
// Caller must have verified denom via region_check.
SeriesExpansion expand_ratio(std::span<const double> numer, std::span<const double> denom,
                             double tol = 1e-12, int max_len = 10000);

// A simulated ARMA path together with the innovations that generated it.
struct SimulatedSeries {
  std::vector<double> values;
  std::vector<double> innovations;
  std::uint64_t seed = 0;
  int burn_in = 0;
};

// Gaussian ARMA simulation: i.i.d. N(0, sigma_a^2) innovations, recursion
// started from a zero state, first burn_in values discarded. Deterministic
// given seed. Throws std::invalid_argument outside the stationarity region.
SimulatedSeries simulate_arma(const ArmaParams& params, double sigma_a, int n,
                              std::uint64_t seed, int burn_in = 500);

}  // namespace robarma
