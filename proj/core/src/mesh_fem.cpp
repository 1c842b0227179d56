#include "ns1d/mesh_fem.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ns1d/tridiagonal.hpp"

namespace ns1d {
namespace {

// 3-point Gauss-Legendre on [-1, 1].
struct GaussPoint {
  double xi;
  double w;
};
constexpr std::array<GaussPoint, 3> kGauss3 = {{
    {-0.7745966692414834, 5.0 / 9.0},
    {0.0, 8.0 / 9.0},
    {0.7745966692414834, 5.0 / 9.0},
}};

// Mean of f over [a, b]. Normalizing by the summed weights keeps constants
// exact to rounding.
double gauss3_mean(const ScalarFunction& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double num = 0.0;
  double den = 0.0;
  for (const auto& g : kGauss3) {
    num += g.w * f(mid + half * g.xi);
    den += g.w;
  }
  return num / den;
}

}  // namespace

Mesh build_mesh(double length, std::size_t n_elements) {
  if (!(length > 0.0)) {
    throw std::invalid_argument("mesh: domain length must be positive");
  }
  if (n_elements < 2) {
    throw std::invalid_argument("mesh: need at least 2 elements");
  }
  Mesh mesh;
  mesh.length = length;
  mesh.n_elements = n_elements;
  mesh.h = length / static_cast<double>(n_elements);
  mesh.nodes.resize(n_elements + 1);
  for (std::size_t i = 0; i <= n_elements; ++i) {
    mesh.nodes[i] = static_cast<double>(i) * mesh.h;
  }
  return mesh;
}

DualMesh build_dual_mesh(const Mesh& mesh) {
  DualMesh dual;
  dual.vertices.resize(mesh.n_elements + 2);
  dual.vertices.front() = 0.0;
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    dual.vertices[j + 1] = mesh.element_mid(j);
  }
  dual.vertices.back() = mesh.length;
  return dual;
}

double QField::min() const { return *std::min_element(values.begin(), values.end()); }
double QField::max() const { return *std::max_element(values.begin(), values.end()); }

QField project_q(const ScalarFunction& f, const Mesh& mesh) {
  QField q(mesh.n_elements);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    q[j] = gauss3_mean(f, mesh.element_left(j), mesh.element_right(j));
  }
  return q;
}

VField interpolate_v(const ScalarFunction& f, const Mesh& mesh) {
  VField v(mesh.n_nodes());
  for (std::size_t i = 0; i < mesh.n_nodes(); ++i) {
    v[i] = f(mesh.node(i));
  }
  return v;
}

VField l2_project_v(const ScalarFunction& f, const Mesh& mesh, bool zero_boundary) {
  const std::size_t n = mesh.n_nodes();
  const double h = mesh.h;

  // Gram matrix of the hat basis: rows (h/6, 4h/6, h/6), boundary diagonal h/3.
  std::vector<double> sub(n, h / 6.0);
  std::vector<double> diag(n, 4.0 * h / 6.0);
  std::vector<double> super(n, h / 6.0);
  diag.front() = diag.back() = h / 3.0;

  // Load vector b_i = int f phi_i, assembled per element with the same
  // quadrature as project_q.
  std::vector<double> load(n, 0.0);
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double a = mesh.element_left(j);
    const double b = mesh.element_right(j);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double left = 0.0;
    double right = 0.0;
    for (const auto& g : kGauss3) {
      const double x = mid + half * g.xi;
      const double s = (x - a) / h;  // right hat value; left hat is 1-s
      const double fw = g.w * half * f(x);
      left += fw * (1.0 - s);
      right += fw * s;
    }
    load[j] += left;
    load[j + 1] += right;
  }

  if (zero_boundary) {
    // Identity rows pinned to zero: the interior equations then coincide with
    // the Galerkin system on the zero-trace subspace.
    diag.front() = diag.back() = 1.0;
    super.front() = sub.back() = 0.0;
    load.front() = load.back() = 0.0;
  }

  Tridiagonal gram(std::move(sub), std::move(diag), std::move(super));
  VField v(n);
  gram.solve(load, v.values);
  if (zero_boundary) {
    v.values.front() = v.values.back() = 0.0;
  }
  return v;
}

double jump(const QField& q, std::size_t i) {
  if (i < 1 || i + 1 > q.size()) {
    throw std::out_of_range("jump: interface index must lie in 1..N-1");
  }
  return q[i] - q[i - 1];
}

DualField lift_to_dual(const QField& q, const Mesh& mesh, const DualMesh& dual) {
  if (q.size() != mesh.n_elements || dual.vertices.size() != mesh.n_elements + 2) {
    throw std::invalid_argument("lift_to_dual: fields must conform to the mesh");
  }
  DualField lift;
  lift.values.resize(mesh.n_elements + 2);
  lift.values.front() = q[0];
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    lift.values[j + 1] = q[j];
  }
  lift.values.back() = q[mesh.n_elements - 1];
  return lift;
}

double qfield_integral(const QField& q, const Mesh& mesh) {
  double sum = 0.0;
  for (double v : q.values) sum += v;
  return mesh.h * sum;
}

double qfield_l2_sq(const QField& q, const Mesh& mesh) {
  double sum = 0.0;
  for (double v : q.values) sum += v * v;
  return mesh.h * sum;
}

double vfield_l2_sq(const VField& v, const Mesh& mesh) {
  // Per-element Simpson, exact for the quadratic integrand of a linear v:
  // int_E v^2 = (h/3)(a^2 + a b + b^2).
  double sum = 0.0;
  for (std::size_t j = 0; j < mesh.n_elements; ++j) {
    const double a = v[j];
    const double b = v[j + 1];
    sum += a * a + a * b + b * b;
  }
  return mesh.h / 3.0 * sum;
}

double vfield_l2_sq_gram(const VField& v, const Mesh& mesh) {
  const std::size_t n = v.size();
  const double h6 = mesh.h / 6.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = (i == 0 || i + 1 == n) ? 2.0 * h6 * v[i] : 4.0 * h6 * v[i];
    if (i > 0) row += h6 * v[i - 1];
    if (i + 1 < n) row += h6 * v[i + 1];
    sum += v[i] * row;
  }
  return sum;
}

}  // namespace ns1d
