#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ns1d {

/// Uniform partition of the mass-coordinate domain (0, L) into N elements of
/// width h = L/N. Elements are numbered from 1 in the documentation; storage
/// is zero-based, so element j (0-based) spans (nodes[j], nodes[j+1]).
struct Mesh {
  double length = 0.0;
  std::size_t n_elements = 0;
  double h = 0.0;
  std::vector<double> nodes;  // nodes[i] = i*h, i = 0..N

  std::size_t n_nodes() const { return n_elements + 1; }
  double node(std::size_t i) const { return nodes[i]; }
  double element_left(std::size_t j) const { return nodes[j]; }
  double element_right(std::size_t j) const { return nodes[j + 1]; }
  double element_mid(std::size_t j) const { return 0.5 * (nodes[j] + nodes[j + 1]); }
};

/// Throws std::invalid_argument unless L > 0 and N >= 2.
Mesh build_mesh(double length, std::size_t n_elements);

/// Dual mesh whose interior vertices are the midpoints of all N primal
/// elements, closed by the two domain endpoints; vertices.size() == N + 2.
/// Piecewise linears on this mesh have slope jump(q,i)/h on the interval
/// straddling the interior primal node x_i, and are flat on the two boundary
/// half-cells. (Listing only N-1 midpoints would stretch the last dual cell
/// to width 3h/2 and break that slope identity.)
struct DualMesh {
  std::vector<double> vertices;

  std::size_t n_cells() const { return vertices.size() - 1; }
};

DualMesh build_dual_mesh(const Mesh& mesh);

/// Piecewise-constant field: one value per element.
struct QField {
  std::vector<double> values;

  QField() = default;
  explicit QField(std::size_t n, double v = 0.0) : values(n, v) {}
  explicit QField(std::vector<double> v) : values(std::move(v)) {}
  QField(std::initializer_list<double> v) : values(v) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t j) { return values[j]; }
  double operator[](std::size_t j) const { return values[j]; }

  double min() const;
  double max() const;
};

/// Continuous piecewise-linear field: one value per node. Fields evolved by
/// the solver carry homogeneous Dirichlet data, values.front() ==
/// values.back() == 0.
struct VField {
  std::vector<double> values;

  VField() = default;
  explicit VField(std::size_t n_nodes, double v = 0.0) : values(n_nodes, v) {}
  explicit VField(std::vector<double> v) : values(std::move(v)) {}
  VField(std::initializer_list<double> v) : values(v) {}

  std::size_t size() const { return values.size(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  bool zero_boundary() const {
    return values.front() == 0.0 && values.back() == 0.0;
  }
  /// Slope on element j: (values[j+1] - values[j]) / h.
  double slope(std::size_t j, double h) const { return (values[j + 1] - values[j]) / h; }
};

/// Piecewise-linear function on the dual mesh (one value per dual vertex).
struct DualField {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double slope(std::size_t cell, const DualMesh& dual) const {
    return (values[cell + 1] - values[cell]) /
           (dual.vertices[cell + 1] - dual.vertices[cell]);
  }
};

using ScalarFunction = std::function<double(double)>;

/// Elementwise-mean projection onto piecewise constants, evaluated with
/// 3-point Gauss-Legendre per element (exact through degree 5).
QField project_q(const ScalarFunction& f, const Mesh& mesh);

/// Nodal interpolation onto continuous piecewise linears.
VField interpolate_v(const ScalarFunction& f, const Mesh& mesh);

/// L2-projection onto piecewise linears via the tridiagonal Gram system.
/// With zero_boundary the boundary rows are replaced by identity rows pinned
/// to zero, which makes the result the best approximation within the
/// zero-trace subspace.
VField l2_project_v(const ScalarFunction& f, const Mesh& mesh, bool zero_boundary);

/// Interface jump q|E_{i+1} - q|E_i for interior node index i in 1..N-1
/// (element indices as in the documentation, 1-based).
double jump(const QField& q, std::size_t i);

/// Continuous piecewise-linear lift of a piecewise-constant field onto the
/// dual mesh: value q|E_i away from dual vertices, slope jump(q,i)/h across
/// interior primal nodes, constant on the two boundary half-cells.
DualField lift_to_dual(const QField& q, const Mesh& mesh, const DualMesh& dual);

/// Integral of q over the domain: sum_j h q_j.
double qfield_integral(const QField& q, const Mesh& mesh);
/// Integral of q^2: sum_j h q_j^2.
double qfield_l2_sq(const QField& q, const Mesh& mesh);
/// Exact integral of v^2 for piecewise-linear v (per-element Simpson).
double vfield_l2_sq(const VField& v, const Mesh& mesh);
/// Same integral evaluated as the Gram quadratic form v^T M v; agrees with
/// vfield_l2_sq to rounding.
double vfield_l2_sq_gram(const VField& v, const Mesh& mesh);

}  // namespace ns1d
