#include "ns1d/driver.hpp"

#include <array>
#include <cstdio>

namespace ns1d {
namespace {

class ProgressReporter : public StepObserver {
 public:
  explicit ProgressReporter(std::size_t stride) : stride_(stride) {}

  void on_step(const DiscreteState& state, const StateDerivative&, double dt,
               int retries) override {
    ++step_;
    if (step_ % stride_ != 0) return;
    std::fprintf(stderr, "step %zu  t = %.9g  dt = %.3g  retries = %d\n", step_,
                 state.t, dt, retries);
  }

 private:
  std::size_t stride_;
  std::size_t step_ = 0;
};

}  // namespace

RunResult execute_run(const RunConfig& config) {
  const Mesh mesh = build_mesh(config.mesh.L, config.mesh.N);
  config.params.validate();

  const InitialCondition ic = build_initial_condition(config.ic, config.mesh.L);
  auto [state, record] = init_state(ic, mesh, config.params);

  RunDiagnostics::Options diag_options;
  diag_options.row_stride = config.output.timeseries_stride;
  diag_options.field_stride = config.output.field_stride;
  RunDiagnostics diagnostics(mesh, config.params,
                             project_q(ic.u0_antiderivative, mesh), diag_options);

  ProgressReporter progress(config.output.progress_stride == 0
                                ? 1
                                : config.output.progress_stride);
  std::array<StepObserver*, 2> observers = {&diagnostics, &progress};
  const std::size_t n_observers = config.output.progress_stride > 0 ? 2 : 1;

  RunResult result;
  result.record = record;
  result.trajectory =
      advance(std::move(state), mesh, config.params, config.control,
              std::span<StepObserver* const>(observers.data(), n_observers));
  diagnostics.finalize();

  result.rows = diagnostics.rows();
  result.snapshots = diagnostics.snapshots();
  result.summary = diagnostics.summary();
  result.c_report = check_C_conditions(result.summary, config.params);
  result.final_omega = diagnostics.omega();
  result.warnings = config_warnings(config);
  return result;
}

}  // namespace ns1d
