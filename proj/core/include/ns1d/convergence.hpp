#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ns1d/config.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/driver.hpp"
#include "ns1d/mesh_fem.hpp"
#include "ns1d/state.hpp"

namespace ns1d {

/// Exact L2 restriction of a piecewise-constant field to a nested coarser
/// mesh: each coarse value is the mean of the covered fine values. Rejects
/// non-nested meshes.
QField restrict_q(const QField& fine, const Mesh& fine_mesh, const Mesh& coarse_mesh);

/// Nodal restriction of a piecewise-linear field: coarse nodes are fine
/// nodes, so this is exact subsampling.
VField restrict_v(const VField& fine, const Mesh& fine_mesh, const Mesh& coarse_mesh);

/// sqrt(sum_j h (a_j - b_j)^2).
double l2_distance_q(const QField& a, const QField& b, const Mesh& mesh);

/// Exact piecewise-linear L2 norm of the difference.
double l2_distance_v(const VField& a, const VField& b, const Mesh& mesh);

struct LevelResult {
  std::size_t n_elements = 0;
  RunResult result;

  const DiscreteState& final_state() const { return result.trajectory.final_state; }
  const RunSummary& summary() const { return result.summary; }
  const CConditionReport& c_report() const { return result.c_report; }
};

struct LevelError {
  double e_tau = 0.0;
  double e_u = 0.0;
  double e_theta = 0.0;
};

struct LevelRate {
  std::optional<double> r_tau;
  std::optional<double> r_u;
  std::optional<double> r_theta;
};

/// Levels run at N0 * 2^k for k = 0..levels-1 with identical physics;
/// errors compare consecutive final states after restriction to the coarser
/// grid, rates are log2 ratios of consecutive errors (absent when an error
/// vanishes).
struct RefinementStudy {
  std::size_t base_n = 0;
  std::vector<LevelResult> levels;
  std::vector<LevelError> errors;  // size levels-1
  std::vector<LevelRate> rates;    // size levels-2
};

/// Execute all refinement levels (concurrently) and assemble the error and
/// rate tables. Requires levels >= 3; a StepFailure on any level is
/// propagated with the level identified.
RefinementStudy run_refinement_study(const RunConfig& config, std::size_t levels);

}  // namespace ns1d
