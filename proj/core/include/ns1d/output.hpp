#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "ns1d/config.hpp"
#include "ns1d/convergence.hpp"
#include "ns1d/diagnostics.hpp"
#include "ns1d/driver.hpp"

namespace ns1d {

/// Shortest decimal representation that round-trips to the same double;
/// locale-independent.
std::string format_number(double v);

/// timeseries.csv with the fixed 15-column header.
void write_timeseries(const std::filesystem::path& path,
                      std::span<const TimeseriesRow> rows);

/// elements_<step>.csv (j,x_left,x_right,tau,theta,F,omega) and
/// nodes_<step>.csv (i,x,u) for one field snapshot.
void write_fields(const std::filesystem::path& directory, const FieldSnapshot& snap,
                  const Mesh& mesh, const PhysicalParams& params);

/// rates.csv: one row per level with N and the condition constants; error
/// and rate columns are filled where defined and left empty otherwise.
void write_rates(const std::filesystem::path& path, const RefinementStudy& study);

/// manifest.json echoing the resolved configuration, code version, regime
/// warnings, and measurement conventions.
void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    std::span<const std::string> warnings);

/// Standard layout of a completed run: manifest, timeseries, field files.
void write_run_outputs(const std::filesystem::path& directory,
                       const RunConfig& config, const RunResult& result);

}  // namespace ns1d
