#include "ns1d/cli.hpp"

#include <exception>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ns1d/convergence.hpp"
#include "ns1d/driver.hpp"
#include "ns1d/errors.hpp"
#include "ns1d/output.hpp"
#include "ns1d/version.hpp"

namespace ns1d {
namespace {

std::vector<double> parse_beta_list(const std::string& list) {
  std::vector<double> betas;
  std::istringstream is(list);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t pos = 0;
      const double beta = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      betas.push_back(beta);
    } catch (const std::exception&) {
      throw ConfigError("config: --beta: '" + item + "' is not a number");
    }
  }
  if (betas.empty()) throw ConfigError("config: --beta: list is empty");
  for (double beta : betas) {
    if (beta < 0.0) throw ConfigError("config: --beta: values must be nonnegative");
  }
  return betas;
}

int run_command(const std::string& config_path, const std::string& out_override) {
  RunConfig config = load_config(config_path);
  if (!out_override.empty()) config.output.directory = out_override;
  const RunResult result = execute_run(config);
  write_run_outputs(config.output.directory, config, result);
  return 0;
}

int converge_command(const std::string& config_path, std::size_t levels,
                     const std::string& out_override) {
  RunConfig config = load_config(config_path);
  if (!out_override.empty()) config.output.directory = out_override;
  if (levels < 3) {
    throw ConfigError("config: --levels: need at least 3 refinement levels");
  }

  const std::filesystem::path base = config.output.directory;
  const RefinementStudy study = run_refinement_study(config, levels);

  std::filesystem::create_directories(base);
  for (const LevelResult& level : study.levels) {
    RunConfig level_config = config;
    level_config.mesh.N = level.n_elements;
    level_config.output.directory =
        (base / ("N" + std::to_string(level.n_elements))).string();
    write_run_outputs(level_config.output.directory, level_config, level.result);
  }
  write_rates(base / "rates.csv", study);
  write_manifest(base / "manifest.json", config, config_warnings(config));
  return 0;
}

int sweep_command(const std::string& config_path, const std::string& beta_list,
                  const std::string& out_override) {
  RunConfig config = load_config(config_path);
  if (!out_override.empty()) config.output.directory = out_override;
  const std::vector<double> betas = parse_beta_list(beta_list);

  const std::filesystem::path base = config.output.directory;
  std::filesystem::create_directories(base);

  std::vector<RunConfig> configs;
  configs.reserve(betas.size());
  for (double beta : betas) {
    RunConfig run_config = config;
    run_config.params.beta = beta;
    run_config.output.directory =
        (base / ("beta_" + format_number(beta))).string();
    configs.push_back(std::move(run_config));
  }

  std::vector<RunResult> results(configs.size());
  std::vector<std::exception_ptr> failures(configs.size());
  std::vector<std::thread> workers;
  workers.reserve(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    workers.emplace_back([&, i] {
      try {
        results[i] = execute_run(configs[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t i = 0; i < configs.size(); ++i) {
    write_run_outputs(configs[i].output.directory, configs[i], results[i]);
  }
  return 0;
}

int presets_command() {
  for (const PresetInfo& preset : ic_presets()) {
    std::cout << preset.name << "\n  fields: " << preset.fields
              << "\n  parameters: " << preset.parameters << "\n";
  }
  std::cout << "Presets compose with '+', e.g. gaussian_theta+shear_u.\n";
  return 0;
}

}  // namespace

int cli(int argc, const char* const* argv) {
  CLI::App app{"1D compressible Navier-Stokes (Lagrangian, semi-discrete FEM)"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::size_t levels = 0;
  std::string beta_list;

  CLI::App* run = app.add_subcommand("run", "Integrate one configuration");
  run->add_option("--config", config_path, "JSON configuration file")->required();
  run->add_option("--out", out_override, "Output directory override");

  CLI::App* converge =
      app.add_subcommand("converge", "Nested mesh-refinement study");
  converge->add_option("--config", config_path, "JSON configuration file")->required();
  converge->add_option("--levels", levels, "Number of refinement levels (>= 3)")
      ->required();
  converge->add_option("--out", out_override, "Output directory override");

  CLI::App* sweep =
      app.add_subcommand("sweep", "Independent runs over conductivity exponents");
  sweep->add_option("--config", config_path, "JSON configuration file")->required();
  sweep->add_option("--beta", beta_list, "Comma-separated beta values")->required();
  sweep->add_option("--out", out_override, "Output directory override");

  CLI::App* presets =
      app.add_subcommand("presets", "List initial-condition presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return run_command(config_path, out_override);
    if (converge->parsed()) return converge_command(config_path, levels, out_override);
    if (sweep->parsed()) return sweep_command(config_path, beta_list, out_override);
    if (presets->parsed()) return presets_command();
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const StepFailure& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace ns1d
