#pragma once

namespace ns1d {

/// Command-line entry point (subcommands: run, converge, sweep, presets).
/// Returns 0 on success, 2 on configuration errors, 3 when a run aborts in
/// the stepper, 1 otherwise.
int cli(int argc, const char* const* argv);

}  // namespace ns1d
