#include "ns1d/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ns1d/errors.hpp"

namespace ns1d {

void StepControl::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) {
    throw std::invalid_argument("control: cfl must lie in (0, 1]");
  }
  if (!(safety > 0.0 && safety <= 1.0)) {
    throw std::invalid_argument("control: safety must lie in (0, 1]");
  }
  if (!(cfl * safety <= 1.0)) {
    throw std::invalid_argument("control: cfl * safety must not exceed 1");
  }
  if (!(t_end > 0.0)) {
    throw std::invalid_argument("control: t_end must be positive");
  }
  if (dt_min < 0.0) {
    throw std::invalid_argument("control: dt_min must be nonnegative");
  }
  if (max_retries < 0) {
    throw std::invalid_argument("control: max_retries must be nonnegative");
  }
}

double select_dt(const DiscreteState& state, const Mesh& mesh,
                 const PhysicalParams& params, const StepControl& ctrl) {
  validate_positive(state);

  double max_coeff = 0.0;   // max over elements of max(kappa, mu)
  double min_tau = state.tau[0];
  double max_acoustic = 0.0;  // max of sqrt(K (1 + K/c_v) theta) / tau
  const double gamma_factor = params.K * (1.0 + params.K / params.c_v);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double theta = state.theta[j];
    const double tau = state.tau[j];
    max_coeff = std::max(max_coeff, std::max(conductivity(theta, params),
                                             viscosity(theta, params)));
    min_tau = std::min(min_tau, tau);
    max_acoustic = std::max(max_acoustic, std::sqrt(gamma_factor * theta) / tau);
  }

  const double dt_diff = mesh.h * mesh.h * min_tau / (4.0 * max_coeff);
  const double dt_ac = mesh.h / max_acoustic;
  double dt = ctrl.safety * ctrl.cfl * std::min(dt_diff, dt_ac);
  dt = std::max(dt, ctrl.effective_dt_min());
  dt = std::min(dt, ctrl.t_end - state.t);
  return dt;
}

DiscreteState step_ssprk3(const DiscreteState& state, double dt, const Mesh& mesh,
                          const PhysicalParams& params,
                          const TridiagonalSystem& system,
                          const StateDerivative* stage1) {
  auto f = [&](const DiscreteState& z) { return rhs(z, mesh, params, system); };
  if (stage1 != nullptr) {
    return detail::ssprk3_stages(state, dt, *stage1, f);
  }
  return step_ssprk3_with(state, dt, f);
}

RunTrajectory advance(DiscreteState state, const Mesh& mesh,
                      const PhysicalParams& params, const StepControl& ctrl,
                      std::span<StepObserver* const> observers) {
  ctrl.validate();
  const TridiagonalSystem system(mesh);
  auto f = [&](const DiscreteState& z) { return rhs(z, mesh, params, system); };

  RunTrajectory trajectory;
  StateDerivative derivative = f(state);
  for (StepObserver* obs : observers) obs->on_start(state, derivative);

  const double t_end = ctrl.t_end;
  const double dt_min = ctrl.effective_dt_min();
  const double t_guard = t_end * (1.0 - 1e-14);

  while (state.t < t_guard) {
    double dt = select_dt(state, mesh, params, ctrl);
    const double remaining = t_end - state.t;
    if (dt >= remaining * (1.0 - 1e-12)) dt = remaining;

    int retries = 0;
    DiscreteState next;
    for (;;) {
      try {
        next = detail::ssprk3_stages(state, dt, derivative, f);
        break;
      } catch (const PositivityViolation& violation) {
        ++retries;
        if (retries > ctrl.max_retries) {
          throw StepFailure(
              "step failed after " + std::to_string(retries - 1) +
                  " retries at t = " + std::to_string(state.t) +
                  ", dt = " + std::to_string(dt) + ": " + violation.what(),
              state.t, dt, retries - 1);
        }
        dt = std::max(0.5 * dt, dt_min);
      }
    }

    // A retried (halved) step no longer reaches t_end; pin only exact hits.
    if (dt >= remaining * (1.0 - 1e-12)) next.t = t_end;
    state = std::move(next);
    derivative = f(state);

    trajectory.total_steps += 1;
    trajectory.total_retries += retries;
    trajectory.records.push_back({state.t, dt, retries});
    for (StepObserver* obs : observers) obs->on_step(state, derivative, dt, retries);
  }

  trajectory.final_state = std::move(state);
  return trajectory;
}

}  // namespace ns1d
