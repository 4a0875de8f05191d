#include "robarma/arma.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "robarma/rng.hpp"

namespace robarma {

double min_root_modulus(std::span<const double> coeffs) {
  // Trim trailing zeros; they only add roots at infinity.
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == 0.0) --degree;
  if (degree == 0) return std::numeric_limits<double>::infinity();
  if (degree == 1) return 1.0 / std::fabs(coeffs[0]);

  // Companion matrix of z^d - c_1 z^(d-1) - ... - c_d, whose eigenvalues are
  // the reciprocals of the roots of 1 - sum c_i B^i.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(degree),
                                                    static_cast<Eigen::Index>(degree));
  for (std::size_t i = 0; i < degree; ++i) {
    companion(0, static_cast<Eigen::Index>(i)) = coeffs[i];
  }
  for (std::size_t i = 1; i < degree; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  const Eigen::VectorXcd eigs = companion.eigenvalues();
  double max_recip = 0.0;
  for (Eigen::Index i = 0; i < eigs.size(); ++i) {
    max_recip = std::max(max_recip, std::abs(eigs[i]));
  }
  if (max_recip == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / max_recip;
}

bool region_check(std::span<const double> phi, std::span<const double> theta, double zeta) {
  if (zeta <= 0.0) throw std::invalid_argument("region_check: zeta must be positive");
  const double bound = 1.0 + zeta;
  return min_root_modulus(phi) >= bound && min_root_modulus(theta) >= bound;
}

bool region_check(const ArmaParams& params, double zeta) {
  return region_check(params.phi, params.theta, zeta);
}

double SeriesExpansion::sum_sq_with_leading_one() const {
  double s = 1.0;
  for (double c : coeffs) s += c * c;
  return s;
}

SeriesExpansion expand_ratio(std::span<const double> numer, std::span<const double> denom,
                             double tol, int max_len) {
  SeriesExpansion out;
  const std::size_t dn = numer.size();
  std::size_t dd = denom.size();
  while (dd > 0 && denom[dd - 1] == 0.0) --dd;

  // Decay rate of the coefficients: reciprocal of the smallest root modulus
  // of denom. An empty denominator makes the ratio a polynomial.
  const double rate = dd == 0 ? 0.0 : 1.0 / min_root_modulus(denom.subspan(0, dd));

  // ratio_k = numer_k + sum_j denom_j ratio_{k-j}, coefficients taken in the
  // 1 - sum c B^i convention on both sides.
  std::vector<double>& c = out.coeffs;
  const std::size_t window = std::max<std::size_t>(dd + 1, 4);
  for (int k = 1; k <= max_len; ++k) {
    double value = (static_cast<std::size_t>(k) <= dn) ? -numer[k - 1] : 0.0;
    for (std::size_t j = 1; j <= dd && j <= static_cast<std::size_t>(k); ++j) {
      const double prev = (j == static_cast<std::size_t>(k)) ? 1.0 : c[k - 1 - j];
      value += denom[j - 1] * prev;
    }
    c.push_back(value);

    if (static_cast<std::size_t>(k) < dn || static_cast<std::size_t>(k) < window) continue;
    double recent = 0.0;
    for (std::size_t j = 0; j < window; ++j) recent = std::max(recent, std::fabs(c[k - 1 - j]));
    const double tail = rate >= 1.0 ? std::numeric_limits<double>::infinity()
                                    : recent * rate / (1.0 - rate);
    if (tail < tol) {
      out.tail_bound = tail;
      out.truncation_len = k;
      out.converged = true;
      return out;
    }
  }
  out.truncation_len = static_cast<int>(c.size());
  double recent = 0.0;
  for (std::size_t j = 0; j < window && j < c.size(); ++j) {
    recent = std::max(recent, std::fabs(c[c.size() - 1 - j]));
  }
  out.tail_bound = rate >= 1.0 ? std::numeric_limits<double>::infinity()
                               : recent * rate / (1.0 - rate);
  out.converged = out.tail_bound <= tol;
  return out;
}

SimulatedSeries simulate_arma(const ArmaParams& params, double sigma_a, int n,
                              std::uint64_t seed, int burn_in) {
  if (sigma_a <= 0.0) throw std::invalid_argument("simulate_arma: sigma_a must be positive");
  if (n <= params.p) throw std::invalid_argument("simulate_arma: n must exceed p");
  if (burn_in < 0) throw std::invalid_argument("simulate_arma: negative burn_in");
  if (!region_check(params)) {
    throw std::invalid_argument("simulate_arma: parameters outside the admissible region");
  }

  const int p = params.p, q = params.q;
  const int total = burn_in + n;
  std::vector<double> centered(total, 0.0), innov(total, 0.0);
  Rng rng(seed);
  for (int t = 0; t < total; ++t) innov[t] = sigma_a * rng.normal();

  // x_t - mu = sum_i phi_i (x_{t-i} - mu) + a_t - sum_j theta_j a_{t-j},
  // zero state before t = 0.
  for (int t = 0; t < total; ++t) {
    double v = innov[t];
    for (int i = 1; i <= p; ++i) {
      if (t - i >= 0) v += params.phi[i - 1] * centered[t - i];
    }
    for (int j = 1; j <= q; ++j) {
      if (t - j >= 0) v -= params.theta[j - 1] * innov[t - j];
    }
    centered[t] = v;
  }

  SimulatedSeries out;
  out.seed = seed;
  out.burn_in = burn_in;
  out.values.resize(n);
  out.innovations.resize(n);
  for (int t = 0; t < n; ++t) {
    out.values[t] = params.mu + centered[burn_in + t];
    out.innovations[t] = innov[burn_in + t];
  }
  return out;
}

}  // namespace robarma
