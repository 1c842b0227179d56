#include "ns1d/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ns1d {

double grad_u_norm(const DiscreteState& state, const Mesh& mesh) {
  double sum = 0.0;
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double slope = state.u.slope(j, mesh.h);
    sum += slope * slope;
  }
  return mesh.h * sum;
}

double jump_energy(const DiscreteState& state, const Mesh& mesh,
                   const PhysicalParams& params) {
  double sum = 0.0;
  for (std::size_t i = 1; i < mesh.n_elements; ++i) {
    const double dlp = kirchhoff_prime(state.theta[i], params) -
                       kirchhoff_prime(state.theta[i - 1], params);
    sum += g_weight(state.tau[i - 1], state.tau[i]) * dlp * dlp;
  }
  return sum / mesh.h;
}

double jump_energy_dual_form(const DiscreteState& state, const Mesh& mesh,
                             const DualMesh& dual, const PhysicalParams& params) {
  QField lp(mesh.n_elements);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    lp[j] = kirchhoff_prime(state.theta[j], params);
  }
  const DualField lift = lift_to_dual(lp, mesh, dual);

  // Interior dual cell i straddles primal node i; the dual projection of tau
  // there is the two-element mean, i.e. the reciprocal of the harmonic
  // weight. The boundary half-cells carry zero slope.
  double sum = 0.0;
  for (std::size_t i = 1; i < mesh.n_elements; ++i) {
    const double slope = lift.slope(i, dual);
    const double tau_dual = 0.5 * (state.tau[i - 1] + state.tau[i]);
    const double width = dual.vertices[i + 1] - dual.vertices[i];
    sum += slope * slope / tau_dual * width;
  }
  return sum;
}

RunDiagnostics::RunDiagnostics(const Mesh& mesh, const PhysicalParams& params,
                               QField omega0)
    : RunDiagnostics(mesh, params, std::move(omega0), Options()) {}

RunDiagnostics::RunDiagnostics(const Mesh& mesh, const PhysicalParams& params,
                               QField omega0, Options options)
    : mesh_(mesh),
      params_(params),
      system_(mesh),
      options_(options),
      omega_(std::move(omega0)) {}

RunDiagnostics::Integrands RunDiagnostics::integrands(
    const DiscreteState& state, const StateDerivative& d) const {
  Integrands out;
  out.ut_l2 = system_.gram_inner(d.du, d.du);
  double kth = 0.0;
  for (std::size_t j = 0; j < mesh_.n_elements; ++j) {
    kth += conductivity(state.theta[j], params_) * d.dtheta[j] * d.dtheta[j];
  }
  out.kth = mesh_.h * kth;
  out.jump = jump_energy(state, mesh_, params_);
  double theta_jump = 0.0;
  for (std::size_t i = 1; i < mesh_.n_elements; ++i) {
    const double dj = state.theta[i] - state.theta[i - 1];
    theta_jump += dj * dj;
  }
  out.theta_jump = theta_jump / mesh_.h;
  out.grad_u = grad_u_norm(state, mesh_);
  out.theta_linf = state.theta.max();
  out.dissipation = entropy_production(state, mesh_, params_);
  return out;
}

TimeseriesRow RunDiagnostics::make_row(const DiscreteState& state, double dt) const {
  TimeseriesRow row;
  row.t = state.t;
  row.dt = dt;
  row.mass = total_mass(state, mesh_);
  row.energy = total_energy(state, mesh_, params_);
  row.entropy = entropy_integral(state, mesh_, params_);
  row.entropy_production = entropy_production(state, mesh_, params_);
  row.tau_min = state.tau.min();
  row.tau_max = state.tau.max();
  row.theta_min = state.theta.min();
  row.theta_max = state.theta.max();
  row.A = acc_.a();
  row.B = acc_.b();
  row.D = acc_.d();
  row.omega_min = omega_.min();
  row.omega_max = omega_.max();
  return row;
}

void RunDiagnostics::on_start(const DiscreteState& state, const StateDerivative& d) {
  prev_ = integrands(state, d);
  prev_flux_ = effective_flux(state, mesh_, params_);

  acc_.A_sup_grad = prev_.grad_u;
  acc_.B_sup_L = [&] {
    double sum = 0.0;
    for (std::size_t j = 0; j < mesh_.n_elements; ++j) {
      sum += kirchhoff_value(state.theta[j], params_);
    }
    return mesh_.h * sum;
  }();
  acc_.D_sup_jump = 0.5 * prev_.jump;

  bounds_.tau_min = state.tau.min();
  bounds_.tau_max = state.tau.max();
  bounds_.theta_min = state.theta.min();
  bounds_.theta_max = state.theta.max();
  bounds_.omega_min = omega_.min();
  bounds_.omega_max = omega_.max();

  summary_.mass_initial = total_mass(state, mesh_);
  summary_.energy_initial = total_energy(state, mesh_, params_);
  summary_.entropy_initial = entropy_integral(state, mesh_, params_);
  summary_.mass_final = summary_.mass_initial;
  summary_.energy_final = summary_.energy_initial;
  summary_.entropy_final = summary_.entropy_initial;
  summary_.theta_l2_sup = std::sqrt(qfield_l2_sq(state.theta, mesh_));
  summary_.u_l2_sup = std::sqrt(vfield_l2_sq(state.u, mesh_));
  summary_.t_final = state.t;

  rows_.push_back(make_row(state, 0.0));
  snapshots_.push_back({0, state.t, state, omega_});
  last_state_ = state;
  last_dt_ = 0.0;
  row_current_ = true;
  snapshot_current_ = true;
}

void RunDiagnostics::on_step(const DiscreteState& state, const StateDerivative& d,
                             double dt, int /*retries*/) {
  ++step_;
  const Integrands cur = integrands(state, d);

  // Suprema.
  acc_.A_sup_grad = std::max(acc_.A_sup_grad, cur.grad_u);
  double l_int = 0.0;
  for (std::size_t j = 0; j < mesh_.n_elements; ++j) {
    l_int += kirchhoff_value(state.theta[j], params_);
  }
  l_int *= mesh_.h;
  acc_.B_sup_L = std::max(acc_.B_sup_L, l_int);
  acc_.D_sup_jump = std::max(acc_.D_sup_jump, 0.5 * cur.jump);

  // Trapezoid updates of the time integrals.
  const double half_dt = 0.5 * dt;
  acc_.A_int_ut += half_dt * (prev_.ut_l2 + cur.ut_l2);
  acc_.B_int_jump += half_dt * (prev_.jump + cur.jump);
  acc_.D_int_kth += half_dt * (prev_.kth + cur.kth);
  summary_.theta_jump_time_integral += half_dt * (prev_.theta_jump + cur.theta_jump);
  summary_.grad_u_time_integral += half_dt * (prev_.grad_u + cur.grad_u);
  summary_.cumulative_dissipation += half_dt * (prev_.dissipation + cur.dissipation);
  bounds_.theta_linf_time_integral += half_dt * (prev_.theta_linf + cur.theta_linf);

  // Effective-flux antiderivative, also by trapezoid.
  const QField flux = effective_flux(state, mesh_, params_);
  for (std::size_t j = 0; j < mesh_.n_elements; ++j) {
    omega_[j] += half_dt * (prev_flux_[j] + flux[j]);
  }

  // Pointwise extrema.
  bounds_.tau_min = std::min(bounds_.tau_min, state.tau.min());
  bounds_.tau_max = std::max(bounds_.tau_max, state.tau.max());
  bounds_.theta_min = std::min(bounds_.theta_min, state.theta.min());
  bounds_.theta_max = std::max(bounds_.theta_max, state.theta.max());
  bounds_.omega_min = std::min(bounds_.omega_min, omega_.min());
  bounds_.omega_max = std::max(bounds_.omega_max, omega_.max());

  summary_.theta_l2_sup =
      std::max(summary_.theta_l2_sup, std::sqrt(qfield_l2_sq(state.theta, mesh_)));
  summary_.u_l2_sup =
      std::max(summary_.u_l2_sup, std::sqrt(vfield_l2_sq(state.u, mesh_)));

  summary_.mass_final = total_mass(state, mesh_);
  summary_.energy_final = total_energy(state, mesh_, params_);
  summary_.entropy_final = entropy_integral(state, mesh_, params_);
  summary_.t_final = state.t;
  summary_.steps = step_;

  prev_ = cur;
  prev_flux_ = flux;
  last_state_ = state;
  last_dt_ = dt;

  row_current_ = options_.row_stride > 0 && step_ % options_.row_stride == 0;
  if (row_current_) {
    rows_.push_back(make_row(state, dt));
  }
  snapshot_current_ = options_.field_stride > 0 && step_ % options_.field_stride == 0;
  if (snapshot_current_) {
    snapshots_.push_back({step_, state.t, state, omega_});
  }
}

void RunDiagnostics::finalize() {
  if (step_ == 0) return;
  if (!row_current_) {
    rows_.push_back(make_row(last_state_, last_dt_));
    row_current_ = true;
  }
  if (!snapshot_current_) {
    snapshots_.push_back({step_, last_state_.t, last_state_, omega_});
    snapshot_current_ = true;
  }
}

RunSummary RunDiagnostics::summary() const {
  RunSummary s = summary_;
  s.functionals = acc_;
  s.bounds = bounds_;
  return s;
}

CConditionReport check_C_conditions(const RunSummary& summary,
                                    const PhysicalParams& params) {
  CConditionReport report;
  report.inv_tau_min = summary.bounds.tau_min > 0.0
                           ? 1.0 / summary.bounds.tau_min
                           : std::numeric_limits<double>::infinity();
  report.inv_theta_min = summary.bounds.theta_min > 0.0
                             ? 1.0 / summary.bounds.theta_min
                             : std::numeric_limits<double>::infinity();
  report.mu_max = summary.bounds.theta_max > 0.0
                      ? viscosity(summary.bounds.theta_max, params)
                      : params.mu_bar;
  report.c1 = std::max({report.inv_tau_min, report.inv_theta_min, report.mu_max});
  report.theta_l2_sup = summary.theta_l2_sup;
  report.theta_jump_integral = summary.theta_jump_time_integral;
  report.c2 = report.theta_l2_sup + report.theta_jump_integral;
  report.u_l2_sup = summary.u_l2_sup;
  report.grad_u_integral = summary.grad_u_time_integral;
  report.c3 = report.u_l2_sup + report.grad_u_integral;
  report.degenerate = !std::isfinite(report.c1) || !std::isfinite(report.c2) ||
                      !std::isfinite(report.c3) || report.c1 > 1e12;
  return report;
}

std::string CConditionReport::describe() const {
  std::ostringstream os;
  os << "C1 = " << c1 << " (1/tau_min = " << inv_tau_min
     << ", 1/theta_min = " << inv_theta_min << ", max mu = " << mu_max << ")\n"
     << "C2 = " << c2 << " (sup ||theta||_L2 = " << theta_l2_sup
     << ", jump integral = " << theta_jump_integral << ")\n"
     << "C3 = " << c3 << " (sup ||u||_L2 = " << u_l2_sup
     << ", int ||u_x||^2 = " << grad_u_integral << ")";
  if (degenerate) {
    os << "\nWARNING: a condition constant diverged; the run left the "
          "positivity regime";
  }
  return os.str();
}

}  // namespace ns1d
