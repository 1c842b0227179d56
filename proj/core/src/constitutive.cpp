#include "ns1d/constitutive.hpp"

#include <cmath>
#include <stdexcept>

#include "ns1d/errors.hpp"

namespace ns1d {
namespace {

void require_positive_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw PositivityViolation(PositivityViolation::Field::theta, theta);
  }
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(K > 0.0)) throw std::invalid_argument("params: K must be positive");
  if (!(c_v > 0.0)) throw std::invalid_argument("params: c_v must be positive");
  if (!(mu_bar > 0.0)) throw std::invalid_argument("params: mu_bar must be positive");
  if (!(kappa_bar > 0.0)) throw std::invalid_argument("params: kappa_bar must be positive");
  if (!(alpha >= 0.0)) throw std::invalid_argument("params: alpha must be nonnegative");
  if (!(beta >= 0.0)) throw std::invalid_argument("params: beta must be nonnegative");
}

std::vector<std::string> PhysicalParams::regime_warnings() const {
  std::vector<std::string> warnings;
  if (beta >= 1.5) {
    warnings.push_back(
        "beta >= 1.5: resolution-independent lower bounds on tau and theta "
        "are not guaranteed; run is exploratory");
  }
  if (alpha > 0.0) {
    warnings.push_back(
        "alpha > 0: temperature-dependent viscosity; pointwise bounds are "
        "not guaranteed; run is exploratory");
  }
  if (beta >= 2.0) {
    warnings.push_back(
        "beta >= 2: mesh-refinement limit behavior is not guaranteed");
  }
  if (c_v != 1.0) {
    warnings.push_back(
        "c_v != 1: temperature equation is scaled by 1/c_v; run is "
        "experimental");
  }
  return warnings;
}

double pressure(double theta, double tau, const PhysicalParams& p) {
  require_positive_theta(theta);
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw PositivityViolation(PositivityViolation::Field::tau, tau);
  }
  return p.K * theta / tau;
}

double viscosity(double theta, const PhysicalParams& p) {
  require_positive_theta(theta);
  if (p.alpha == 0.0) return p.mu_bar;
  return p.mu_bar * std::pow(theta, p.alpha);
}

double conductivity(double theta, const PhysicalParams& p) {
  require_positive_theta(theta);
  if (p.beta == 0.0) return p.kappa_bar;
  return p.kappa_bar * std::pow(theta, p.beta);
}

double kirchhoff_value(double theta, const PhysicalParams& p) {
  return p.kappa_bar * std::pow(theta, p.beta + 2.0) / ((p.beta + 1.0) * (p.beta + 2.0));
}

double kirchhoff_prime(double theta, const PhysicalParams& p) {
  return p.kappa_bar * std::pow(theta, p.beta + 1.0) / (p.beta + 1.0);
}

double g_weight(double tau_left, double tau_right) {
  if (!(tau_left > 0.0) || !std::isfinite(tau_left)) {
    throw PositivityViolation(PositivityViolation::Field::tau, tau_left);
  }
  if (!(tau_right > 0.0) || !std::isfinite(tau_right)) {
    throw PositivityViolation(PositivityViolation::Field::tau, tau_right);
  }
  return 2.0 / (tau_left + tau_right);
}

double entropy_density(double tau, double u, double theta, const PhysicalParams& p) {
  require_positive_theta(theta);
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw PositivityViolation(PositivityViolation::Field::tau, tau);
  }
  return 0.5 * u * u + p.c_v * (theta - std::log(theta)) + p.K * (tau - std::log(tau));
}

}  // namespace ns1d
