#include "ns1d/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ns1d/errors.hpp"

namespace ns1d {

void validate_positive(const DiscreteState& state) {
  for (std::size_t j = 0; j < state.tau.size(); ++j) {
    const double v = state.tau[j];
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PositivityViolation(PositivityViolation::Field::tau, v, j, state.t);
    }
  }
  for (std::size_t j = 0; j < state.theta.size(); ++j) {
    const double v = state.theta[j];
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw PositivityViolation(PositivityViolation::Field::theta, v, j, state.t);
    }
  }
}

InitialCondition make_constant_ic(double tau, double u, double theta) {
  InitialCondition ic;
  ic.tau0 = [tau](double) { return tau; };
  ic.u0 = [u](double) { return u; };
  ic.theta0 = [theta](double) { return theta; };
  ic.u0_antiderivative = [u](double x) { return u * x; };
  return ic;
}

void apply_gaussian_theta(InitialCondition& ic, double base, double amplitude,
                          double center, double width) {
  ic.theta0 = [=](double x) {
    const double s = (x - center) / width;
    return base + amplitude * std::exp(-s * s);
  };
}

void apply_shear_u(InitialCondition& ic, double amplitude, double length) {
  ic.u0 = [=](double x) { return amplitude * std::sin(M_PI * x / length); };
  ic.u0_antiderivative = [=](double x) {
    return amplitude * length / M_PI * (1.0 - std::cos(M_PI * x / length));
  };
}

namespace {

// Piecewise-linear interpolant through (x[k], y[k]).
double pwl_eval(const std::vector<double>& x, const std::vector<double>& y, double s) {
  if (s <= x.front()) return y.front();
  if (s >= x.back()) return y.back();
  const auto it = std::upper_bound(x.begin(), x.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - x.begin());
  const double w = (s - x[k - 1]) / (x[k] - x[k - 1]);
  return (1.0 - w) * y[k - 1] + w * y[k];
}

}  // namespace

InitialCondition make_tabulated_ic(std::vector<double> x, std::vector<double> tau,
                                   std::vector<double> u, std::vector<double> theta) {
  const std::size_t n = x.size();
  if (n < 2 || tau.size() != n || u.size() != n || theta.size() != n) {
    throw std::invalid_argument("tabulated ic: need >= 2 samples of equal length");
  }
  if (!std::is_sorted(x.begin(), x.end()) ||
      std::adjacent_find(x.begin(), x.end()) != x.end()) {
    throw std::invalid_argument("tabulated ic: x must be strictly increasing");
  }

  // Exact antiderivative of the piecewise-linear u: cumulative trapezoid up
  // to the enclosing sample, then the quadratic remainder.
  std::vector<double> cum(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    cum[k] = cum[k - 1] + 0.5 * (u[k - 1] + u[k]) * (x[k] - x[k - 1]);
  }
  auto u_anti = [x, u, cum](double s) {
    if (s <= x.front()) return 0.0;
    if (s >= x.back()) return cum.back();
    const auto it = std::upper_bound(x.begin(), x.end(), s);
    const std::size_t k = static_cast<std::size_t>(it - x.begin());
    const double dx = s - x[k - 1];
    const double slope = (u[k] - u[k - 1]) / (x[k] - x[k - 1]);
    return cum[k - 1] + u[k - 1] * dx + 0.5 * slope * dx * dx;
  };

  InitialCondition ic;
  ic.tau0 = [x, tau](double s) { return pwl_eval(x, tau, s); };
  ic.u0 = [x, u](double s) { return pwl_eval(x, u, s); };
  ic.theta0 = [x, theta](double s) { return pwl_eval(x, theta, s); };
  ic.u0_antiderivative = std::move(u_anti);
  return ic;
}

std::pair<DiscreteState, InvariantRegionRecord> init_state(
    const InitialCondition& ic, const Mesh& mesh, const PhysicalParams& params) {
  DiscreteState state;
  state.tau = project_q(ic.tau0, mesh);
  state.theta = project_q(ic.theta0, mesh);
  state.u = l2_project_v(ic.u0, mesh, /*zero_boundary=*/true);
  state.t = 0.0;
  validate_positive(state);

  InvariantRegionRecord record;
  record.mass0 = total_mass(state, mesh);
  // Kinetic part through the Gram quadratic form, consistent with the
  // momentum pairing; agrees with the Simpson route used by total_energy.
  record.energy0 = 0.5 * vfield_l2_sq_gram(state.u, mesh) +
                   params.c_v * qfield_integral(state.theta, mesh);
  record.logmoment0 = log_moment(state, mesh, params);
  return {std::move(state), record};
}

double total_mass(const DiscreteState& state, const Mesh& mesh) {
  return qfield_integral(state.tau, mesh);
}

double total_energy(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params) {
  return 0.5 * vfield_l2_sq(state.u, mesh) +
         params.c_v * qfield_integral(state.theta, mesh);
}

double entropy_integral(const DiscreteState& state, const Mesh& mesh,
                        const PhysicalParams& params) {
  double sum = 0.0;
  for (std::size_t j = 0; j < state.tau.size(); ++j) {
    sum += params.c_v * (state.theta[j] - std::log(state.theta[j])) +
           params.K * (state.tau[j] - std::log(state.tau[j]));
  }
  return mesh.h * sum + 0.5 * vfield_l2_sq(state.u, mesh);
}

double log_moment(const DiscreteState& state, const Mesh& mesh,
                  const PhysicalParams& params) {
  double sum = 0.0;
  for (std::size_t j = 0; j < state.tau.size(); ++j) {
    sum += params.c_v * std::log(state.theta[j]) + params.K * std::log(state.tau[j]);
  }
  return mesh.h * sum;
}

InvariantRegionReport check_invariant_region(const DiscreteState& state,
                                             const InvariantRegionRecord& record,
                                             const Mesh& mesh,
                                             const PhysicalParams& params,
                                             double tol) {
  InvariantRegionReport report;

  const double mass = total_mass(state, mesh);
  const double energy = total_energy(state, mesh, params);
  const double logmoment = log_moment(state, mesh, params);

  const double mass_scale = std::max(std::abs(record.mass0), 1e-300);
  const double energy_scale = std::max(std::abs(record.energy0), 1e-300);
  const double log_scale = std::max({std::abs(record.logmoment0),
                                     std::abs(record.energy0), 1.0});

  report.mass_slack = (mass - record.mass0) / mass_scale;
  report.energy_slack = (energy - record.energy0) / energy_scale;
  report.logmoment_slack = (logmoment - record.logmoment0) / log_scale;

  report.mass_ok = std::abs(report.mass_slack) <= tol;
  report.energy_ok = std::abs(report.energy_slack) <= tol;
  report.logmoment_ok = report.logmoment_slack >= -tol;
  return report;
}

}  // namespace ns1d
