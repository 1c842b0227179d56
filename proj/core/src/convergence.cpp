#include "ns1d/convergence.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "ns1d/driver.hpp"
#include "ns1d/errors.hpp"

namespace ns1d {
namespace {

std::size_t nesting_ratio(const Mesh& fine, const Mesh& coarse) {
  if (coarse.n_elements == 0 || fine.n_elements % coarse.n_elements != 0) {
    throw std::invalid_argument("restrict: meshes are not nested");
  }
  return fine.n_elements / coarse.n_elements;
}

}  // namespace

QField restrict_q(const QField& fine, const Mesh& fine_mesh, const Mesh& coarse_mesh) {
  const std::size_t ratio = nesting_ratio(fine_mesh, coarse_mesh);
  QField coarse(coarse_mesh.n_elements);
  for (std::size_t j = 0; j < coarse_mesh.n_elements; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < ratio; ++k) {
      sum += fine[j * ratio + k];
    }
    coarse[j] = sum / static_cast<double>(ratio);
  }
  return coarse;
}

VField restrict_v(const VField& fine, const Mesh& fine_mesh, const Mesh& coarse_mesh) {
  const std::size_t ratio = nesting_ratio(fine_mesh, coarse_mesh);
  VField coarse(coarse_mesh.n_nodes());
  for (std::size_t i = 0; i < coarse_mesh.n_nodes(); ++i) {
    coarse[i] = fine[i * ratio];
  }
  return coarse;
}

double l2_distance_q(const QField& a, const QField& b, const Mesh& mesh) {
  if (a.size() != b.size() || a.size() != mesh.n_elements) {
    throw std::invalid_argument("l2_distance_q: field sizes must match the mesh");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return std::sqrt(mesh.h * sum);
}

double l2_distance_v(const VField& a, const VField& b, const Mesh& mesh) {
  if (a.size() != b.size() || a.size() != mesh.n_nodes()) {
    throw std::invalid_argument("l2_distance_v: field sizes must match the mesh");
  }
  VField diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff[i] = a[i] - b[i];
  }
  return std::sqrt(vfield_l2_sq(diff, mesh));
}

RefinementStudy run_refinement_study(const RunConfig& config, std::size_t levels) {
  if (levels < 3) {
    throw std::invalid_argument("refinement study: need at least 3 levels");
  }

  RefinementStudy study;
  study.base_n = config.mesh.N;
  study.levels.resize(levels);

  std::vector<std::exception_ptr> failures(levels);
  std::vector<std::thread> workers;
  workers.reserve(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    workers.emplace_back([&, k] {
      try {
        RunConfig level_config = config;
        level_config.mesh.N = config.mesh.N << k;
        LevelResult& level = study.levels[k];
        level.n_elements = level_config.mesh.N;
        level.result = execute_run(level_config);
      } catch (const StepFailure& failure) {
        failures[k] = std::make_exception_ptr(StepFailure(
            "refinement level " + std::to_string(k) + " (N = " +
                std::to_string(config.mesh.N << k) + "): " + failure.what(),
            failure.t(), failure.dt(), failure.retries()));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    });
  }
  for (auto& worker : workers) worker.join();
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Errors between consecutive levels, measured on the coarser grid.
  study.errors.resize(levels - 1);
  for (std::size_t k = 0; k + 1 < levels; ++k) {
    const Mesh coarse = build_mesh(config.mesh.L, study.levels[k].n_elements);
    const Mesh fine = build_mesh(config.mesh.L, study.levels[k + 1].n_elements);
    const DiscreteState& zc = study.levels[k].final_state();
    const DiscreteState& zf = study.levels[k + 1].final_state();
    study.errors[k].e_tau =
        l2_distance_q(zc.tau, restrict_q(zf.tau, fine, coarse), coarse);
    study.errors[k].e_u = l2_distance_v(zc.u, restrict_v(zf.u, fine, coarse), coarse);
    study.errors[k].e_theta =
        l2_distance_q(zc.theta, restrict_q(zf.theta, fine, coarse), coarse);
  }

  auto rate = [](double coarse_err, double fine_err) -> std::optional<double> {
    if (coarse_err <= 0.0 || fine_err <= 0.0) return std::nullopt;
    return std::log2(coarse_err / fine_err);
  };
  study.rates.resize(levels - 2);
  for (std::size_t k = 0; k + 2 < levels; ++k) {
    study.rates[k].r_tau = rate(study.errors[k].e_tau, study.errors[k + 1].e_tau);
    study.rates[k].r_u = rate(study.errors[k].e_u, study.errors[k + 1].e_u);
    study.rates[k].r_theta =
        rate(study.errors[k].e_theta, study.errors[k + 1].e_theta);
  }
  return study;
}

}  // namespace ns1d
