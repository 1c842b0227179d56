#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ns1d/semidiscrete.hpp"
#include "ns1d/state.hpp"

namespace ns1d {

/// Explicit time integration controls. The step size is
/// safety * cfl * min(dt_diff, dt_ac), clamped below by dt_min and above by
/// the time remaining to t_end.
struct StepControl {
  double cfl = 0.25;
  double safety = 0.9;
  double dt_min = 0.0;  // 0 selects the default 1e-12 * t_end
  int max_retries = 30;
  double t_end = 0.0;

  double effective_dt_min() const { return dt_min > 0.0 ? dt_min : 1e-12 * t_end; }
  /// Throws std::invalid_argument on out-of-range controls.
  void validate() const;
};

struct StepRecord {
  double t = 0.0;   // time after the step
  double dt = 0.0;
  int retries = 0;
};

struct RunTrajectory {
  std::vector<StepRecord> records;
  DiscreteState final_state;
  std::size_t total_steps = 0;
  int total_retries = 0;
};

/// Notified once with the initial state and after every accepted step. The
/// derivative passed alongside a state is F evaluated at that state; the
/// stepper reuses it as the first stage of the next step, so observing costs
/// no extra right-hand-side evaluations.
class StepObserver {
 public:
  virtual ~StepObserver() = default;
  virtual void on_start(const DiscreteState& /*state*/,
                        const StateDerivative& /*derivative*/) {}
  virtual void on_step(const DiscreteState& /*state*/,
                       const StateDerivative& /*derivative*/, double /*dt*/,
                       int /*retries*/) {}
};

/// Stable step size: diffusive bound h^2 min(tau) / (4 max(kappa, mu)) and
/// acoustic bound h / max(sqrt(K (1 + K/c_v) theta) / tau), combined as
/// safety * cfl * min of the two.
double select_dt(const DiscreteState& state, const Mesh& mesh,
                 const PhysicalParams& params, const StepControl& ctrl);

/// One Shu-Osher SSP-RK3 step. Every stage state is positivity-checked;
/// PositivityViolation escapes to the caller. When the derivative at the
/// input state is already known it can be passed as stage1.
DiscreteState step_ssprk3(const DiscreteState& state, double dt, const Mesh& mesh,
                          const PhysicalParams& params,
                          const TridiagonalSystem& system,
                          const StateDerivative* stage1 = nullptr);

namespace detail {

// Convex combination z + b ((y - z) + w d) in incremental form, so fixed
// points of the flow are reproduced bit-exactly.
inline DiscreteState ssp_stage(const DiscreteState& z, const DiscreteState& y,
                               double b, const StateDerivative& d, double w,
                               double t_new) {
  DiscreteState out;
  const std::size_t n = z.tau.size();
  out.tau = QField(n);
  out.theta = QField(n);
  out.u = VField(z.u.size());
  for (std::size_t j = 0; j < n; ++j) {
    out.tau[j] = z.tau[j] + b * ((y.tau[j] - z.tau[j]) + w * d.dtau[j]);
    out.theta[j] = z.theta[j] + b * ((y.theta[j] - z.theta[j]) + w * d.dtheta[j]);
  }
  for (std::size_t i = 0; i < z.u.size(); ++i) {
    out.u[i] = z.u[i] + b * ((y.u[i] - z.u[i]) + w * d.du[i]);
  }
  out.t = t_new;
  validate_positive(out);
  return out;
}

template <class Rhs>
DiscreteState ssprk3_stages(const DiscreteState& state, double dt,
                            const StateDerivative& d1, Rhs&& f) {
  const double t = state.t;
  const DiscreteState s1 = ssp_stage(state, state, 1.0, d1, dt, t + dt);
  const StateDerivative d2 = f(s1);
  const DiscreteState s2 = ssp_stage(state, s1, 0.25, d2, dt, t + 0.5 * dt);
  const StateDerivative d3 = f(s2);
  return ssp_stage(state, s2, 2.0 / 3.0, d3, dt, t + dt);
}

}  // namespace detail

/// SSP-RK3 with a caller-supplied right-hand side; used by the public
/// overload and by tests that integrate manufactured derivatives.
template <class Rhs>
DiscreteState step_ssprk3_with(const DiscreteState& state, double dt, Rhs&& f) {
  const StateDerivative d1 = f(state);
  return detail::ssprk3_stages(state, dt, d1, f);
}

/// Integrate to ctrl.t_end: select a step, attempt it, halve and retry on
/// positivity loss (up to ctrl.max_retries, then StepFailure), and notify
/// observers after every accepted step.
RunTrajectory advance(DiscreteState state, const Mesh& mesh,
                      const PhysicalParams& params, const StepControl& ctrl,
                      std::span<StepObserver* const> observers = {});

}  // namespace ns1d
