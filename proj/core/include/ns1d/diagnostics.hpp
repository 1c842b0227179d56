#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ns1d/constitutive.hpp"
#include "ns1d/mesh_fem.hpp"
#include "ns1d/semidiscrete.hpp"
#include "ns1d/state.hpp"
#include "ns1d/timestepper.hpp"

namespace ns1d {

/// int |u_x|^2 = sum_j h slope_j^2.
double grad_u_norm(const DiscreteState& state, const Mesh& mesh);

/// (1/h) sum_i G_i(tau) [[L'(theta)]]_i^2 over interior nodes; the shared
/// jump term of the B and D functionals.
double jump_energy(const DiscreteState& state, const Mesh& mesh,
                   const PhysicalParams& params);

/// Same quantity evaluated as the dual-mesh quadrature of the lifted
/// L'(theta) gradient weighted by the dual projection of 1/tau; exported for
/// plotting, equals jump_energy to rounding.
double jump_energy_dual_form(const DiscreteState& state, const Mesh& mesh,
                             const DualMesh& dual, const PhysicalParams& params);

/// Running suprema and time integrals of the energy functionals A, B, D.
/// Every field is nonnegative and nondecreasing along a run.
struct FunctionalAccumulators {
  double A_sup_grad = 0.0;   // sup_t int |u_x|^2
  double A_int_ut = 0.0;     // int_0^t int |u_t|^2
  double B_sup_L = 0.0;      // sup_t int L(theta)
  double B_int_jump = 0.0;   // int_0^t (1/h) sum G [[L']]^2
  double D_sup_jump = 0.0;   // sup_t (1/2h) sum G [[L']]^2
  double D_int_kth = 0.0;    // int_0^t int kappa(theta) |theta_t|^2

  double a() const { return A_sup_grad + A_int_ut; }
  double b() const { return B_sup_L + B_int_jump; }
  double d() const { return D_sup_jump + D_int_kth; }
};

/// Pointwise extrema over the run plus the time integral of ||theta||_inf
/// and the range of the effective-flux antiderivative.
struct BoundsMonitor {
  double tau_min = 0.0;
  double tau_max = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  double theta_linf_time_integral = 0.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
};

/// One timeseries sample at an accepted step; extrema columns are
/// instantaneous (over elements at that time), A/B/D are the running
/// functional values.
struct TimeseriesRow {
  double t = 0.0;
  double dt = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
  double entropy_production = 0.0;
  double tau_min = 0.0;
  double tau_max = 0.0;
  double theta_min = 0.0;
  double theta_max = 0.0;
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
};

struct FieldSnapshot {
  std::size_t step = 0;
  double t = 0.0;
  DiscreteState state;
  QField omega;
};

/// Everything a completed run exposes for acceptance checks and reports.
struct RunSummary {
  FunctionalAccumulators functionals;
  BoundsMonitor bounds;
  double theta_l2_sup = 0.0;            // sup_t ||theta||_L2
  double theta_jump_time_integral = 0.0;  // int_0^t sum [[theta]]^2 / h
  double u_l2_sup = 0.0;                // sup_t ||u||_L2
  double grad_u_time_integral = 0.0;    // int_0^t int |u_x|^2
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double energy_initial = 0.0;
  double energy_final = 0.0;
  double entropy_initial = 0.0;
  double entropy_final = 0.0;
  double cumulative_dissipation = 0.0;  // int_0^t D(s) ds
  double t_final = 0.0;
  std::size_t steps = 0;
};

/// Step observer that accumulates every monitored quantity along a run.
/// Time integrals use the trapezoid rule over accepted steps, with
/// integrands taken from the same derivatives used for stepping.
class RunDiagnostics : public StepObserver {
 public:
  struct Options {
    std::size_t row_stride = 1;    // sample the timeseries every k-th step
    std::size_t field_stride = 0;  // 0: snapshot only the initial/final fields
  };

  RunDiagnostics(const Mesh& mesh, const PhysicalParams& params, QField omega0);
  RunDiagnostics(const Mesh& mesh, const PhysicalParams& params, QField omega0,
                 Options options);

  void on_start(const DiscreteState& state, const StateDerivative& d) override;
  void on_step(const DiscreteState& state, const StateDerivative& d, double dt,
               int retries) override;
  /// Append the final row/field snapshot when the stride did not land on the
  /// last step; call once after the run.
  void finalize();

  const std::vector<TimeseriesRow>& rows() const { return rows_; }
  const std::vector<FieldSnapshot>& snapshots() const { return snapshots_; }
  const QField& omega() const { return omega_; }
  const FunctionalAccumulators& functionals() const { return acc_; }
  const BoundsMonitor& bounds() const { return bounds_; }
  RunSummary summary() const;

 private:
  struct Integrands {
    double ut_l2 = 0.0;      // int |u_t|^2 (Gram pairing)
    double kth = 0.0;        // int kappa |theta_t|^2
    double jump = 0.0;       // (1/h) sum G [[L']]^2
    double theta_jump = 0.0; // sum [[theta]]^2 / h
    double grad_u = 0.0;     // int |u_x|^2
    double theta_linf = 0.0;
    double dissipation = 0.0;
  };

  Integrands integrands(const DiscreteState& state, const StateDerivative& d) const;
  TimeseriesRow make_row(const DiscreteState& state, double dt) const;

  const Mesh& mesh_;
  const PhysicalParams& params_;
  TridiagonalSystem system_;
  Options options_;

  FunctionalAccumulators acc_;
  BoundsMonitor bounds_;
  QField omega_;
  QField prev_flux_;
  Integrands prev_;
  RunSummary summary_;
  std::size_t step_ = 0;
  DiscreteState last_state_;
  double last_dt_ = 0.0;
  bool row_current_ = false;
  bool snapshot_current_ = false;
  std::vector<TimeseriesRow> rows_;
  std::vector<FieldSnapshot> snapshots_;
};

/// Realized constants of the convergence conditions, observed on a run:
/// C1 = max(1/tau_min, 1/theta_min, max mu(theta)),
/// C2 = sup_t ||theta||_L2 + int sum [[theta]]^2/h,
/// C3 = sup_t ||u||_L2 + int ||u_x||^2.
/// Observations only; nothing here fails a run.
struct CConditionReport {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double inv_tau_min = 0.0;
  double inv_theta_min = 0.0;
  double mu_max = 0.0;
  double theta_l2_sup = 0.0;
  double theta_jump_integral = 0.0;
  double u_l2_sup = 0.0;
  double grad_u_integral = 0.0;
  bool degenerate = false;  // a constant diverged (vanishing tau or theta)

  std::string describe() const;
};

CConditionReport check_C_conditions(const RunSummary& summary,
                                    const PhysicalParams& params);

}  // namespace ns1d
