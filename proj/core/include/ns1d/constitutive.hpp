#pragma once

#include <string>
#include <vector>

namespace ns1d {

/// Gas and transport constants: pressure law K theta/tau with specific heat
/// c_v, and power-law transport coefficients mu = mu_bar theta^alpha,
/// kappa = kappa_bar theta^beta.
struct PhysicalParams {
  double K = 1.0;
  double c_v = 1.0;
  double mu_bar = 1.0;
  double kappa_bar = 1.0;
  double alpha = 0.0;
  double beta = 0.0;

  /// Throws std::invalid_argument unless K, c_v, mu_bar, kappa_bar > 0 and
  /// alpha, beta >= 0.
  void validate() const;

  /// True when beta >= 3/2 or alpha > 0: pointwise lower bounds on tau and
  /// theta are no longer guaranteed to be resolution-independent.
  bool outside_pointwise_regime() const { return beta >= 1.5 || alpha > 0.0; }
  /// True when beta >= 2: mesh-refinement limits are not guaranteed.
  bool outside_convergence_regime() const { return beta >= 2.0; }

  /// Human-readable warnings for regimes accepted but not guaranteed; runs
  /// still execute.
  std::vector<std::string> regime_warnings() const;
};

/// p = K theta / tau.
double pressure(double theta, double tau, const PhysicalParams& p);

/// mu_bar theta^alpha; returns mu_bar exactly when alpha == 0.
double viscosity(double theta, const PhysicalParams& p);

/// kappa_bar theta^beta; returns kappa_bar exactly when beta == 0.
double conductivity(double theta, const PhysicalParams& p);

/// Kirchhoff potential of the conductivity (second antiderivative of kappa,
/// closed form for the power law): kappa_bar theta^(beta+2)/((beta+1)(beta+2)).
/// Total for theta >= 0.
double kirchhoff_value(double theta, const PhysicalParams& p);

/// Derivative of the Kirchhoff potential: kappa_bar theta^(beta+1)/(beta+1).
/// Diffusive fluxes in the scheme are interface jumps of this quantity.
double kirchhoff_prime(double theta, const PhysicalParams& p);

/// Harmonic interface weight 2/(tau_left + tau_right); equals 1/tau on
/// constants.
double g_weight(double tau_left, double tau_right);

/// Entropy density c_v(theta - log theta) + K(tau - log tau) + u^2/2,
/// minimized at (tau, u, theta) = (1, 0, 1) with value c_v + K.
double entropy_density(double tau, double u, double theta, const PhysicalParams& p);

}  // namespace ns1d
