#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ns1d/constitutive.hpp"
#include "ns1d/state.hpp"
#include "ns1d/timestepper.hpp"

namespace ns1d {

struct MeshConfig {
  double L = 1.0;
  std::size_t N = 0;

  bool operator==(const MeshConfig&) const = default;
};

/// Initial-condition selection: a '+'-separated composition of presets, each
/// contributing the fields it defines. Unused parameters keep their
/// defaults. Supported presets: constant, gaussian_theta, shear_u,
/// tabulated.
struct IcConfig {
  std::string preset;
  double tau0 = 1.0;
  double u0 = 0.0;
  double theta0 = 1.0;
  double theta_amplitude = 0.5;
  double theta_center = -1.0;  // negative: resolved to L/2
  double theta_width = -1.0;   // negative: resolved to L/10
  double u_amplitude = 0.1;
  std::vector<double> x;
  std::vector<double> tau;
  std::vector<double> u;
  std::vector<double> theta;

  bool operator==(const IcConfig&) const = default;
};

struct OutputConfig {
  std::string directory = "out";
  std::size_t field_stride = 0;
  std::size_t timeseries_stride = 1;
  std::size_t progress_stride = 0;

  bool operator==(const OutputConfig&) const = default;
};

/// Validated, fully resolved run configuration (all defaults applied).
struct RunConfig {
  MeshConfig mesh;
  PhysicalParams params;
  StepControl control;
  IcConfig ic;
  OutputConfig output;

  bool operator==(const RunConfig& other) const;
};

/// Parse and validate a JSON configuration. Unknown keys are rejected;
/// errors name the offending key path and constraint. Defaults: c_v = 1,
/// alpha = beta = 0, cfl = 0.25, safety = 0.9, dt_min = 1e-12 * t_end.
RunConfig parse_config(const std::string& text);

/// Load and parse a configuration file.
RunConfig load_config(const std::string& path);

/// Serialize the resolved configuration; parse_config(serialize_config(c))
/// reproduces c exactly.
std::string serialize_config(const RunConfig& config);

/// Regime and scaling warnings for the resolved configuration (recorded in
/// the run manifest).
std::vector<std::string> config_warnings(const RunConfig& config);

/// Preset registry entry for the CLI listing.
struct PresetInfo {
  std::string name;
  std::string fields;      // which profiles the preset defines
  std::string parameters;  // accepted keys with defaults
};
const std::vector<PresetInfo>& ic_presets();

/// Build the scalar initial-data profiles for a validated configuration.
InitialCondition build_initial_condition(const IcConfig& ic, double length);

}  // namespace ns1d
