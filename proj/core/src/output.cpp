#include "ns1d/output.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "ns1d/semidiscrete.hpp"
#include "ns1d/version.hpp"

namespace ns1d {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("output: cannot write '" + path.string() + "'");
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
  return std::string(buffer.data(), result.ptr);
}

void write_timeseries(const std::filesystem::path& path,
                      std::span<const TimeseriesRow> rows) {
  std::ofstream out = open_for_write(path);
  out << "t,dt,mass,energy,entropy,entropy_production,tau_min,tau_max,"
         "theta_min,theta_max,A,B,D,omega_min,omega_max\n";
  for (const TimeseriesRow& r : rows) {
    out << format_number(r.t) << ',' << format_number(r.dt) << ','
        << format_number(r.mass) << ',' << format_number(r.energy) << ','
        << format_number(r.entropy) << ',' << format_number(r.entropy_production)
        << ',' << format_number(r.tau_min) << ',' << format_number(r.tau_max) << ','
        << format_number(r.theta_min) << ',' << format_number(r.theta_max) << ','
        << format_number(r.A) << ',' << format_number(r.B) << ','
        << format_number(r.D) << ',' << format_number(r.omega_min) << ','
        << format_number(r.omega_max) << '\n';
  }
}

void write_fields(const std::filesystem::path& directory, const FieldSnapshot& snap,
                  const Mesh& mesh, const PhysicalParams& params) {
  const std::string label = std::to_string(snap.step);
  const QField flux = effective_flux(snap.state, mesh, params);

  {
    std::ofstream out = open_for_write(directory / ("elements_" + label + ".csv"));
    out << "j,x_left,x_right,tau,theta,F,omega\n";
    for (std::size_t j = 0; j < mesh.n_elements; ++j) {
      out << (j + 1) << ',' << format_number(mesh.element_left(j)) << ','
          << format_number(mesh.element_right(j)) << ','
          << format_number(snap.state.tau[j]) << ','
          << format_number(snap.state.theta[j]) << ',' << format_number(flux[j])
          << ',' << format_number(snap.omega[j]) << '\n';
    }
  }
  {
    std::ofstream out = open_for_write(directory / ("nodes_" + label + ".csv"));
    out << "i,x,u\n";
    for (std::size_t i = 0; i < mesh.n_nodes(); ++i) {
      out << i << ',' << format_number(mesh.node(i)) << ','
          << format_number(snap.state.u[i]) << '\n';
    }
  }
}

void write_rates(const std::filesystem::path& path, const RefinementStudy& study) {
  std::ofstream out = open_for_write(path);
  out << "level,N,e_tau,e_u,e_theta,r_tau,r_u,r_theta,C1,C2,C3\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  for (std::size_t k = 0; k < study.levels.size(); ++k) {
    const LevelResult& level = study.levels[k];
    out << k << ',' << level.n_elements << ',';
    if (k < study.errors.size()) {
      out << format_number(study.errors[k].e_tau) << ','
          << format_number(study.errors[k].e_u) << ','
          << format_number(study.errors[k].e_theta) << ',';
    } else {
      out << ",,,";
    }
    if (k < study.rates.size()) {
      out << cell(study.rates[k].r_tau) << ',' << cell(study.rates[k].r_u) << ','
          << cell(study.rates[k].r_theta) << ',';
    } else {
      out << ",,,";
    }
    out << format_number(level.c_report().c1) << ','
        << format_number(level.c_report().c2) << ','
        << format_number(level.c_report().c3) << '\n';
  }
}

void write_manifest(const std::filesystem::path& path, const RunConfig& config,
                    std::span<const std::string> warnings) {
  nlohmann::json manifest;
  manifest["version"] = std::string(kVersion);
  manifest["config"] = nlohmann::json::parse(serialize_config(config));
  manifest["warnings"] = std::vector<std::string>(warnings.begin(), warnings.end());
  manifest["conventions"] = {
      {"ut_l2_norm", "consistent Gram pairing (exact P1 L2 norm)"},
      {"time_integrals", "trapezoid over accepted steps"},
      {"element_indexing", "1-based in files, matching the element numbering"},
  };
  std::ofstream out = open_for_write(path);
  out << manifest.dump(2) << '\n';
}

void write_run_outputs(const std::filesystem::path& directory,
                       const RunConfig& config, const RunResult& result) {
  std::filesystem::create_directories(directory);
  const Mesh mesh = build_mesh(config.mesh.L, config.mesh.N);
  write_manifest(directory / "manifest.json", config, result.warnings);
  write_timeseries(directory / "timeseries.csv", result.rows);
  for (const FieldSnapshot& snap : result.snapshots) {
    write_fields(directory, snap, mesh, config.params);
  }
}

}  // namespace ns1d
