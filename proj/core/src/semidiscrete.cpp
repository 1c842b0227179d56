#include "ns1d/semidiscrete.hpp"

#include <cmath>
#include <vector>

#include "ns1d/errors.hpp"

namespace ns1d {

TridiagonalSystem::TridiagonalSystem(const Mesh& mesh) : h_(mesh.h) {
  const std::size_t n = mesh.n_nodes();
  std::vector<double> sub(n, h_ / 6.0);
  std::vector<double> diag(n, 4.0 * h_ / 6.0);
  std::vector<double> super(n, h_ / 6.0);
  diag.front() = diag.back() = 1.0;
  super.front() = sub.back() = 0.0;
  matrix_ = Tridiagonal(std::move(sub), std::move(diag), std::move(super));
}

VField TridiagonalSystem::solve(const VField& load) const {
  VField x(load.size());
  std::vector<double> b = load.values;
  b.front() = b.back() = 0.0;
  matrix_.solve(b, x.values);
  x.values.front() = x.values.back() = 0.0;
  return x;
}

double TridiagonalSystem::gram_inner(const VField& a, const VField& b) const {
  const std::size_t n = a.size();
  const double h6 = h_ / 6.0;
  double sum = 0.0;
  // The stored boundary rows are identity; the pairing below uses the true
  // hat-basis rows. For zero-trace fields the difference is immaterial.
  for (std::size_t i = 0; i < n; ++i) {
    double row = (i == 0 || i + 1 == n) ? 2.0 * h6 * a[i] : 4.0 * h6 * a[i];
    if (i > 0) row += h6 * a[i - 1];
    if (i + 1 < n) row += h6 * a[i + 1];
    sum += row * b[i];
  }
  return sum;
}

namespace {

// Kernels assume a validated state (tau, theta positive and finite).

QField continuity_kernel(const DiscreteState& state, const Mesh& mesh) {
  QField dtau(mesh.n_elements);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    dtau[j] = state.u.slope(j, mesh.h);
  }
  return dtau;
}

QField flux_kernel(const DiscreteState& state, const Mesh& mesh,
                   const PhysicalParams& params) {
  QField flux(mesh.n_elements);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double slope = state.u.slope(j, mesh.h);
    flux[j] = (viscosity(state.theta[j], params) * slope -
               params.K * state.theta[j]) /
              state.tau[j];
  }
  return flux;
}

VField load_kernel(const QField& flux, const Mesh& mesh) {
  VField load(mesh.n_nodes());
  for (std::size_t i = 1; i + 1 < mesh.n_nodes(); ++i) {
    load[i] = flux[i] - flux[i - 1];
  }
  return load;
}

QField temperature_kernel(const DiscreteState& state, const Mesh& mesh,
                          const PhysicalParams& params) {
  const std::size_t n = mesh.n_elements;
  const double h2 = mesh.h * mesh.h;

  // Interface fluxes Phi_i = G_i(tau) [[L'(theta)]]_i at interior nodes;
  // Phi_0 = Phi_N = 0 closes the homogeneous Neumann boundary.
  std::vector<double> phi(n + 1, 0.0);
  double lp_left = kirchhoff_prime(state.theta[0], params);
  for (std::size_t i = 1; i < n; ++i) {
    const double lp_right = kirchhoff_prime(state.theta[i], params);
    phi[i] = g_weight(state.tau[i - 1], state.tau[i]) * (lp_right - lp_left);
    lp_left = lp_right;
  }

  QField dtheta(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double slope = state.u.slope(j, mesh.h);
    const double source = (viscosity(state.theta[j], params) * slope -
                           params.K * state.theta[j]) *
                          slope / state.tau[j];
    dtheta[j] = ((phi[j + 1] - phi[j]) / h2 + source) / params.c_v;
  }
  return dtheta;
}

}  // namespace

QField continuity_rhs(const DiscreteState& state, const Mesh& mesh) {
  return continuity_kernel(state, mesh);
}

QField effective_flux(const DiscreteState& state, const Mesh& mesh,
                      const PhysicalParams& params) {
  validate_positive(state);
  return flux_kernel(state, mesh, params);
}

VField momentum_load(const DiscreteState& state, const Mesh& mesh,
                     const PhysicalParams& params) {
  validate_positive(state);
  return load_kernel(flux_kernel(state, mesh, params), mesh);
}

VField momentum_rhs(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params, const TridiagonalSystem& system) {
  validate_positive(state);
  return system.solve(load_kernel(flux_kernel(state, mesh, params), mesh));
}

QField temperature_rhs(const DiscreteState& state, const Mesh& mesh,
                       const PhysicalParams& params) {
  validate_positive(state);
  return temperature_kernel(state, mesh, params);
}

StateDerivative rhs(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params, const TridiagonalSystem& system) {
  validate_positive(state);
  StateDerivative d;
  d.dtau = continuity_kernel(state, mesh);
  d.du = system.solve(load_kernel(flux_kernel(state, mesh, params), mesh));
  d.dtheta = temperature_kernel(state, mesh, params);
  return d;
}

double entropy_production(const DiscreteState& state, const Mesh& mesh,
                          const PhysicalParams& params) {
  validate_positive(state);
  double viscous = 0.0;
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double slope = state.u.slope(j, mesh.h);
    viscous += viscosity(state.theta[j], params) * slope * slope /
               (state.tau[j] * state.theta[j]);
  }
  viscous *= mesh.h;

  double jumps = 0.0;
  for (std::size_t i = 1; i < mesh.n_elements; ++i) {
    const double dlp = kirchhoff_prime(state.theta[i], params) -
                       kirchhoff_prime(state.theta[i - 1], params);
    const double dinv = 1.0 / state.theta[i] - 1.0 / state.theta[i - 1];
    jumps += g_weight(state.tau[i - 1], state.tau[i]) * (-dlp * dinv);
  }
  jumps /= mesh.h;

  return viscous + jumps;
}

}  // namespace ns1d
