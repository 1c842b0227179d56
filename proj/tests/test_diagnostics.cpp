#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ns1d/diagnostics.hpp"
#include "test_support.hpp"

using namespace ns1d;
using ns1d::testing::Rng;

namespace {

DiscreteState equilibrium(const Mesh& mesh) {
  DiscreteState z;
  z.tau = QField(mesh.n_elements, 1.0);
  z.theta = QField(mesh.n_elements, 1.0);
  z.u = VField(mesh.n_nodes(), 0.0);
  return z;
}

}  // namespace

TEST_CASE("grad_u_norm") {
  const Mesh mesh = build_mesh(2.0, 2);
  DiscreteState z = equilibrium(mesh);
  CHECK(grad_u_norm(z, mesh) == 0.0);

  z.u = VField({0.0, 1.0, 0.0});
  CHECK(grad_u_norm(z, mesh) == doctest::Approx(2.0).epsilon(1e-15));

  // Brute-force quadrature oracle on a random field.
  Rng rng(3);
  const Mesh fine = build_mesh(1.3, 9);
  DiscreteState s = equilibrium(fine);
  s.u = ns1d::testing::random_vfield0(rng, fine.n_nodes(), -2.0, 2.0);
  double quad = 0.0;
  for (std::size_t j = 0; j < fine.n_elements; ++j) {
    const double slope = s.u.slope(j, fine.h);
    for (int k = 0; k < 16; ++k) {
      quad += slope * slope * fine.h / 16.0;
    }
  }
  CHECK(grad_u_norm(s, fine) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("jump_energy") {
  PhysicalParams params;  // beta = 0, kappa_bar = 1: L' = theta
  const Mesh mesh = build_mesh(2.0, 2);  // h = 1
  DiscreteState z = equilibrium(mesh);
  CHECK(jump_energy(z, mesh, params) == 0.0);

  z.theta = QField({1.0, 2.0});
  CHECK(jump_energy(z, mesh, params) == doctest::Approx(1.0).epsilon(1e-15));

  // Invariant under reversal (squares).
  Rng rng(5);
  const Mesh m = build_mesh(1.0, 7);
  DiscreteState a = equilibrium(m);
  a.tau = ns1d::testing::random_qfield(rng, m.n_elements, 0.4, 2.5);
  a.theta = ns1d::testing::random_qfield(rng, m.n_elements, 0.4, 2.5);
  DiscreteState b = a;
  std::reverse(b.tau.values.begin(), b.tau.values.end());
  std::reverse(b.theta.values.begin(), b.theta.values.end());
  CHECK(jump_energy(a, m, params) ==
        doctest::Approx(jump_energy(b, m, params)).epsilon(1e-13));
}

TEST_CASE("dual-form evaluation equals the jump form") {
  Rng rng(7);
  PhysicalParams params;
  params.beta = 1.2;
  params.kappa_bar = 0.8;
  for (int trial = 0; trial < 25; ++trial) {
    const Mesh mesh = build_mesh(1.0, 3 + rng.index(14));
    const DualMesh dual = build_dual_mesh(mesh);
    DiscreteState z = equilibrium(mesh);
    z.tau = ns1d::testing::random_qfield(rng, mesh.n_elements, 0.3, 3.0);
    z.theta = ns1d::testing::random_qfield(rng, mesh.n_elements, 0.3, 3.0);
    CHECK(jump_energy_dual_form(z, mesh, dual, params) ==
          doctest::Approx(jump_energy(z, mesh, params)).epsilon(1e-12));
  }
}

TEST_CASE("equilibrium run accumulators") {
  const Mesh mesh = build_mesh(1.0, 8);
  const PhysicalParams params;
  const TridiagonalSystem system(mesh);
  const DiscreteState z = equilibrium(mesh);
  const StateDerivative d = rhs(z, mesh, params, system);

  RunDiagnostics diag(mesh, params, QField(mesh.n_elements, 0.0));
  diag.on_start(z, d);

  DiscreteState z1 = z;
  z1.t = 0.1;
  diag.on_step(z1, d, 0.1, 0);

  const RunSummary summary = diag.summary();
  CHECK(summary.functionals.a() == 0.0);
  CHECK(summary.functionals.d() == 0.0);
  // B sup = L * L(1) = kappa_bar/((beta+1)(beta+2)) = 1/2.
  CHECK(summary.functionals.b() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(summary.bounds.tau_min == 1.0);
  CHECK(summary.bounds.theta_max == 1.0);
  CHECK(summary.bounds.theta_linf_time_integral == doctest::Approx(0.1));
  CHECK(summary.cumulative_dissipation == 0.0);

  const CConditionReport report = check_C_conditions(summary, params);
  CHECK(report.c1 == doctest::Approx(1.0));  // max(1, 1, mu_bar = 1)
  CHECK(report.c2 == doctest::Approx(1.0));  // sup ||theta||_L2 = sqrt(L) = 1
  CHECK(report.c3 == doctest::Approx(0.0));
  CHECK_FALSE(report.degenerate);
}

TEST_CASE("hand-stepped trapezoid accumulation") {
  // Two scripted observations with crafted integrand values; every
  // accumulator must match a hand trapezoid/maximum computation.
  const Mesh mesh = build_mesh(2.0, 2);  // h = 1
  const PhysicalParams params;           // beta = 0: L' = theta, L = theta^2/2
  const TridiagonalSystem system(mesh);

  DiscreteState z0 = equilibrium(mesh);
  z0.theta = QField({1.0, 2.0});
  const StateDerivative d0 = rhs(z0, mesh, params, system);

  DiscreteState z1 = z0;
  z1.theta = QField({1.25, 1.75});
  z1.u = VField({0.0, 0.5, 0.0});
  z1.t = 0.5;
  const StateDerivative d1 = rhs(z1, mesh, params, system);

  RunDiagnostics diag(mesh, params, QField(mesh.n_elements, 0.0));
  diag.on_start(z0, d0);
  diag.on_step(z1, d1, 0.5, 0);

  // Hand values.
  const double jump0 = 1.0;            // G = 1, [[theta]] = 1
  const double jump1 = 0.5 * 0.5;      // [[theta]] = 0.5
  const double grad0 = 0.0;
  const double grad1 = 0.5;            // slopes +-0.5 over two unit elements
  const double ut0 = system.gram_inner(d0.du, d0.du);
  const double ut1 = system.gram_inner(d1.du, d1.du);
  double kth0 = 0.0, kth1 = 0.0;
  for (std::size_t j = 0; j < 2; ++j) {
    kth0 += d0.dtheta[j] * d0.dtheta[j];
    kth1 += d1.dtheta[j] * d1.dtheta[j];
  }

  const FunctionalAccumulators& acc = diag.functionals();
  CHECK(acc.A_sup_grad == doctest::Approx(std::max(grad0, grad1)).epsilon(1e-14));
  CHECK(acc.A_int_ut == doctest::Approx(0.25 * (ut0 + ut1)).epsilon(1e-13));
  CHECK(acc.B_int_jump == doctest::Approx(0.25 * (jump0 + jump1)).epsilon(1e-13));
  CHECK(acc.D_sup_jump == doctest::Approx(0.5 * jump0).epsilon(1e-13));
  CHECK(acc.D_int_kth == doctest::Approx(0.25 * (kth0 + kth1)).epsilon(1e-13));
  // B sup: int L = h (1/2 + 4/2) = 2.5 at t0, larger than at t1.
  CHECK(acc.B_sup_L == doctest::Approx(2.5).epsilon(1e-13));

  // theta Linf trapezoid: 0.25 * (2.0 + 1.75).
  CHECK(diag.bounds().theta_linf_time_integral ==
        doctest::Approx(0.25 * 3.75).epsilon(1e-13));
}

TEST_CASE("accumulators are nondecreasing across random observations") {
  Rng rng(11);
  const Mesh mesh = build_mesh(1.0, 10);
  PhysicalParams params;
  params.beta = 0.5;
  const TridiagonalSystem system(mesh);

  DiscreteState z = ns1d::testing::random_positive_state(rng, mesh, 0.5, 2.0, 0.5);
  RunDiagnostics diag(mesh, params, QField(mesh.n_elements, 0.0));
  diag.on_start(z, rhs(z, mesh, params, system));

  FunctionalAccumulators prev = diag.functionals();
  double prev_linf = diag.bounds().theta_linf_time_integral;
  for (int step = 1; step <= 100; ++step) {
    z = ns1d::testing::random_positive_state(rng, mesh, 0.5, 2.0, 0.5);
    z.t = 0.01 * step;
    diag.on_step(z, rhs(z, mesh, params, system), 0.01, 0);

    const FunctionalAccumulators& acc = diag.functionals();
    CHECK(acc.A_sup_grad >= prev.A_sup_grad);
    CHECK(acc.A_int_ut >= prev.A_int_ut);
    CHECK(acc.B_sup_L >= prev.B_sup_L);
    CHECK(acc.B_int_jump >= prev.B_int_jump);
    CHECK(acc.D_sup_jump >= prev.D_sup_jump);
    CHECK(acc.D_int_kth >= prev.D_int_kth);
    CHECK(diag.bounds().theta_linf_time_integral >= prev_linf);
    prev = acc;
    prev_linf = diag.bounds().theta_linf_time_integral;
  }
}

TEST_CASE("omega starts from the projected antiderivative and accumulates flux") {
  const Mesh mesh = build_mesh(1.0, 4);
  const PhysicalParams params;
  const TridiagonalSystem system(mesh);

  // u0 = sin(pi x): antiderivative (1 - cos(pi x))/pi.
  InitialCondition ic = make_constant_ic(1.0, 0.0, 1.0);
  apply_shear_u(ic, 1.0, 1.0);
  const QField omega0 = project_q(ic.u0_antiderivative, mesh);

  const auto [z0, record] = init_state(ic, mesh, params);
  RunDiagnostics diag(mesh, params, omega0);
  diag.on_start(z0, rhs(z0, mesh, params, system));
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    CHECK(diag.omega()[j] == omega0[j]);
  }

  // One observed step: omega += dt/2 (F(prev) + F(cur)).
  const QField f0 = effective_flux(z0, mesh, params);
  DiscreteState z1 = z0;
  z1.t = 0.01;
  for (auto& v : z1.theta.values) v *= 1.1;
  const QField f1 = effective_flux(z1, mesh, params);
  diag.on_step(z1, rhs(z1, mesh, params, system), 0.01, 0);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    CHECK(diag.omega()[j] ==
          doctest::Approx(omega0[j] + 0.005 * (f0[j] + f1[j])).epsilon(1e-14));
  }
}

TEST_CASE("degenerate runs are flagged in the condition report") {
  RunSummary summary;
  summary.bounds.tau_min = 1.0;
  summary.bounds.theta_min = 0.0;  // vanished temperature
  summary.bounds.theta_max = 1.0;
  const PhysicalParams params;
  const CConditionReport report = check_C_conditions(summary, params);
  CHECK(report.degenerate);
  CHECK(report.describe().find("diverged") != std::string::npos);
}

TEST_CASE("timeseries rows carry instantaneous extrema and running functionals") {
  const Mesh mesh = build_mesh(1.0, 4);
  const PhysicalParams params;
  const TridiagonalSystem system(mesh);
  Rng rng(13);

  DiscreteState z = ns1d::testing::random_positive_state(rng, mesh, 0.5, 2.0, 0.3);
  RunDiagnostics diag(mesh, params, QField(mesh.n_elements, 0.0));
  diag.on_start(z, rhs(z, mesh, params, system));

  DiscreteState z1 = ns1d::testing::random_positive_state(rng, mesh, 0.5, 2.0, 0.3);
  z1.t = 0.25;
  diag.on_step(z1, rhs(z1, mesh, params, system), 0.25, 0);

  REQUIRE(diag.rows().size() == 2);
  const TimeseriesRow& row = diag.rows().back();
  CHECK(row.t == 0.25);
  CHECK(row.tau_min == doctest::Approx(z1.tau.min()));
  CHECK(row.theta_max == doctest::Approx(z1.theta.max()));
  CHECK(row.mass == doctest::Approx(total_mass(z1, mesh)));
  CHECK(row.entropy == doctest::Approx(entropy_integral(z1, mesh, params)));
  CHECK(row.A == doctest::Approx(diag.functionals().a()));
}
