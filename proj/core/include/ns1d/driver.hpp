#pragma once

#include <string>
#include <vector>

#include "ns1d/config.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/state.hpp"
#include "ns1d/timestepper.hpp"

namespace ns1d {

/// Everything produced by one simulation run; pure compute, no file I/O.
struct RunResult {
  RunTrajectory trajectory;
  InvariantRegionRecord record;
  std::vector<TimeseriesRow> rows;
  std::vector<FieldSnapshot> snapshots;
  RunSummary summary;
  CConditionReport c_report;
  QField final_omega;
  std::vector<std::string> warnings;

  const DiscreteState& final_state() const { return trajectory.final_state; }
};

/// Initialize from the configuration, advance to t_end with the diagnostics
/// observer attached, and collect the results. Progress lines go to stderr
/// when output.progress_stride > 0.
RunResult execute_run(const RunConfig& config);

}  // namespace ns1d
