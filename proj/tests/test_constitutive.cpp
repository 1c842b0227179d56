#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ns1d/constitutive.hpp"
#include "ns1d/errors.hpp"
#include "test_support.hpp"

using namespace ns1d;
using ns1d::testing::Rng;

namespace {

// Depth-limited adaptive Simpson; quadrature oracle for the closed-form
// Kirchhoff potential.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double split = left + right;
  if (depth <= 0 || std::abs(split - whole) < 15.0 * tol) {
    return split + (split - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  return adaptive_simpson(f, a, b, f(a), f(0.5 * (a + b)), f(b), tol, 48);
}

}  // namespace

TEST_CASE("params validation and regime flags") {
  PhysicalParams p;
  CHECK_NOTHROW(p.validate());

  PhysicalParams bad = p;
  bad.kappa_bar = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.K = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = p;
  bad.alpha = -0.25;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  PhysicalParams warm = p;
  warm.beta = 1.6;
  CHECK(warm.outside_pointwise_regime());
  CHECK_FALSE(warm.outside_convergence_regime());
  CHECK_FALSE(warm.regime_warnings().empty());

  warm.beta = 2.1;
  CHECK(warm.outside_convergence_regime());

  PhysicalParams viscous = p;
  viscous.alpha = 0.5;
  CHECK(viscous.outside_pointwise_regime());

  CHECK(p.regime_warnings().empty());
}

TEST_CASE("pressure") {
  PhysicalParams p;
  CHECK(pressure(1.0, 1.0, p) == 1.0);
  CHECK(pressure(2.0, 4.0, p) == 0.5);
  CHECK_THROWS_AS(pressure(1.0, 0.0, p), PositivityViolation);
  CHECK_THROWS_AS(pressure(-1.0, 1.0, p), PositivityViolation);
}

TEST_CASE("transport coefficients") {
  PhysicalParams p;
  p.mu_bar = 2.0;
  p.alpha = 0.0;
  // alpha = 0 must return mu_bar with no power evaluation.
  CHECK(viscosity(5.0, p) == 2.0);

  p.kappa_bar = 1.0;
  p.beta = 0.5;
  CHECK(conductivity(4.0, p) == doctest::Approx(2.0).epsilon(1e-15));
  p.kappa_bar = 3.0;
  p.beta = 1.0;
  CHECK(conductivity(2.0, p) == doctest::Approx(6.0).epsilon(1e-15));

  CHECK_THROWS_AS(viscosity(0.0, p), PositivityViolation);
  CHECK_THROWS_AS(conductivity(-2.0, p), PositivityViolation);

  // Monotone nondecreasing in theta for nonnegative exponents.
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalParams q;
    q.mu_bar = rng.uniform(0.1, 3.0);
    q.kappa_bar = rng.uniform(0.1, 3.0);
    q.alpha = rng.uniform(0.0, 2.0);
    q.beta = rng.uniform(0.0, 2.0);
    const double a = rng.uniform(0.05, 5.0);
    const double b = a + rng.uniform(0.0, 5.0);
    CHECK(viscosity(b, q) >= viscosity(a, q));
    CHECK(conductivity(b, q) >= conductivity(a, q));
  }
}

TEST_CASE("kirchhoff potential closed form") {
  PhysicalParams p;
  p.kappa_bar = 1.0;
  p.beta = 0.0;
  CHECK(kirchhoff_value(2.0, p) == doctest::Approx(2.0).epsilon(1e-15));  // z^2/2

  PhysicalParams q;
  q.kappa_bar = 2.0;
  q.beta = 1.0;
  CHECK(kirchhoff_prime(3.0, q) == doctest::Approx(9.0).epsilon(1e-15));  // 2 z^2/2

  // Total at theta = 0.
  CHECK(kirchhoff_value(0.0, q) == 0.0);
  CHECK(kirchhoff_prime(0.0, q) == 0.0);
}

TEST_CASE("kirchhoff potential matches the double integral of kappa") {
  PhysicalParams p;
  p.kappa_bar = 1.0;
  p.beta = 0.5;
  const double theta = 1.7;
  auto kappa = [&](double z) { return p.kappa_bar * std::pow(z, p.beta); };
  auto inner = [&](double xi) { return integrate(kappa, 0.0, xi, 1e-14); };
  const double oracle = integrate(inner, 0.0, theta, 1e-13);
  CHECK(kirchhoff_value(theta, p) == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("kirchhoff second derivative is the conductivity") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    PhysicalParams p;
    p.kappa_bar = rng.uniform(0.2, 4.0);
    p.beta = rng.uniform(0.0, 1.9);
    const double theta = rng.uniform(0.1, 10.0);
    const double dh = 1e-5 * theta;
    const double fd =
        (kirchhoff_prime(theta + dh, p) - kirchhoff_prime(theta - dh, p)) / (2.0 * dh);
    CHECK(fd == doctest::Approx(conductivity(theta, p)).epsilon(1e-6));
  }
}

TEST_CASE("harmonic weight") {
  CHECK(g_weight(1.0, 1.0) == 1.0);
  CHECK(g_weight(1.0, 3.0) == 0.5);
  CHECK(g_weight(2.0, 2.0) == 0.5);
  CHECK_THROWS_AS(g_weight(0.0, 1.0), PositivityViolation);
  CHECK_THROWS_AS(g_weight(1.0, -2.0), PositivityViolation);

  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = rng.uniform(0.05, 10.0);
    const double b = rng.uniform(0.05, 10.0);
    CHECK(g_weight(a, b) == g_weight(b, a));
    CHECK(g_weight(a, a) * a == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("entropy density values and convexity") {
  PhysicalParams p;  // K = c_v = 1
  CHECK(entropy_density(1.0, 0.0, 1.0, p) == 2.0);
  CHECK(entropy_density(1.0, 2.0, 1.0, p) == 4.0);
  CHECK(entropy_density(std::exp(1.0), 0.0, 1.0, p) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-15));

  // Minimum at (1, 0, 1) with value c_v + K.
  CHECK(entropy_density(1.0, 0.0, 1.0, p) == p.c_v + p.K);
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const double tau = rng.uniform(0.05, 6.0);
    const double theta = rng.uniform(0.05, 6.0);
    CHECK(entropy_density(tau, 0.0, theta, p) >= p.c_v + p.K - 1e-12);
  }

  // Midpoint convexity in (tau, theta) at fixed u.
  for (int trial = 0; trial < 200; ++trial) {
    const double u = rng.uniform(-2.0, 2.0);
    const double tau_a = rng.uniform(0.05, 6.0);
    const double tau_b = rng.uniform(0.05, 6.0);
    const double theta_a = rng.uniform(0.05, 6.0);
    const double theta_b = rng.uniform(0.05, 6.0);
    const double mid = entropy_density(0.5 * (tau_a + tau_b), u,
                                       0.5 * (theta_a + theta_b), p);
    const double avg = 0.5 * (entropy_density(tau_a, u, theta_a, p) +
                              entropy_density(tau_b, u, theta_b, p));
    CHECK(mid <= avg + 1e-12);
  }

  CHECK_THROWS_AS(entropy_density(0.0, 0.0, 1.0, p), PositivityViolation);
  CHECK_THROWS_AS(entropy_density(1.0, 0.0, 0.0, p), PositivityViolation);
}
