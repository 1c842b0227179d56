#pragma once

#include <utility>

#include "ns1d/constitutive.hpp"
#include "ns1d/mesh_fem.hpp"

namespace ns1d {

/// The discrete unknown triple: specific volume and temperature as
/// piecewise constants, velocity as a zero-trace piecewise linear.
struct DiscreteState {
  QField tau;
  VField u;
  QField theta;
  double t = 0.0;
};

/// Throws PositivityViolation (with element index and time) when tau or
/// theta has a nonpositive or non-finite entry.
void validate_positive(const DiscreteState& state);

/// Conserved quantities of the initial data; the discrete flow stays in the
/// region {mass = mass0, energy = energy0, log-moment >= logmoment0}.
struct InvariantRegionRecord {
  double mass0 = 0.0;       // int tau_0
  double energy0 = 0.0;     // int (|u_0|^2/2 + c_v theta_0)
  double logmoment0 = 0.0;  // int (c_v log theta_0 + K log tau_0)
};

/// Initial data as scalar profiles on (0, L). u0_antiderivative must equal
/// x -> int_0^x u0; it seeds the effective-flux antiderivative monitor.
struct InitialCondition {
  ScalarFunction tau0;
  ScalarFunction u0;
  ScalarFunction theta0;
  ScalarFunction u0_antiderivative;
};

/// Constant profiles (tau, u, theta).
InitialCondition make_constant_ic(double tau, double u, double theta);
/// Replace theta with base + amplitude * exp(-((x-center)/width)^2).
void apply_gaussian_theta(InitialCondition& ic, double base, double amplitude,
                          double center, double width);
/// Replace u with amplitude * sin(pi x / L).
void apply_shear_u(InitialCondition& ic, double amplitude, double length);
/// Piecewise-linear profiles through the sample points (x must be strictly
/// increasing and span [0, L]); the u antiderivative is the exact piecewise
/// quadratic.
InitialCondition make_tabulated_ic(std::vector<double> x, std::vector<double> tau,
                                   std::vector<double> u, std::vector<double> theta);

/// Project the initial data onto the discrete spaces (elementwise means for
/// tau and theta, constrained L2-projection for u) and record the invariant
/// region. Throws PositivityViolation if a projected tau or theta entry is
/// nonpositive.
std::pair<DiscreteState, InvariantRegionRecord> init_state(
    const InitialCondition& ic, const Mesh& mesh, const PhysicalParams& params);

double total_mass(const DiscreteState& state, const Mesh& mesh);
double total_energy(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params);
double entropy_integral(const DiscreteState& state, const Mesh& mesh,
                        const PhysicalParams& params);
double log_moment(const DiscreteState& state, const Mesh& mesh,
                  const PhysicalParams& params);

struct InvariantRegionReport {
  bool mass_ok = false;
  bool energy_ok = false;
  bool logmoment_ok = false;
  // Signed relative slacks: mass/energy are deviations from the initial
  // values; the log-moment slack is (current - initial)/scale and must not
  // fall below -tol.
  double mass_slack = 0.0;
  double energy_slack = 0.0;
  double logmoment_slack = 0.0;

  bool all_ok() const { return mass_ok && energy_ok && logmoment_ok; }
};

InvariantRegionReport check_invariant_region(const DiscreteState& state,
                                             const InvariantRegionRecord& record,
                                             const Mesh& mesh,
                                             const PhysicalParams& params,
                                             double tol);

}  // namespace ns1d
