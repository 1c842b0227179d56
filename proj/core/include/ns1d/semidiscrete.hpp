#pragma once

#include "ns1d/constitutive.hpp"
#include "ns1d/mesh_fem.hpp"
#include "ns1d/state.hpp"
#include "ns1d/tridiagonal.hpp"

namespace ns1d {

/// Right-hand side of the method-of-lines system z_t = F(z).
struct StateDerivative {
  QField dtau;
  VField du;
  QField dtheta;
};

/// Gram (mass) matrix of the zero-trace piecewise linears, with identity
/// boundary rows so solves return fields that vanish on the boundary
/// exactly. Interior rows are (h/6, 4h/6, h/6); factored once per mesh.
class TridiagonalSystem {
 public:
  explicit TridiagonalSystem(const Mesh& mesh);

  const Tridiagonal& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.size(); }

  /// Solve (Gram) x = load; load.front() and load.back() are ignored and the
  /// solution boundary entries are exactly zero.
  VField solve(const VField& load) const;

  /// Gram-weighted inner product <M a, b>; realizes int a b for zero-trace
  /// piecewise linears.
  double gram_inner(const VField& a, const VField& b) const;

 private:
  Tridiagonal matrix_;
  double h_ = 0.0;
};

/// tau_t = u_x, elementwise: the slope of u on each element.
QField continuity_rhs(const DiscreteState& state, const Mesh& mesh);

/// Effective viscous flux mu(theta) u_x / tau - p(theta, tau), elementwise.
QField effective_flux(const DiscreteState& state, const Mesh& mesh,
                      const PhysicalParams& params);

/// Interface jumps of the effective flux at interior nodes.
VField momentum_load(const DiscreteState& state, const Mesh& mesh,
                     const PhysicalParams& params);

/// u_t from the momentum weak form: Gram solve of the effective-flux jumps.
VField momentum_rhs(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params, const TridiagonalSystem& system);

/// theta_t from the temperature weak form: conservative differences of the
/// interface fluxes G_i [[L'(theta)]]_i plus the viscous/pressure-work
/// source, scaled by 1/c_v. Interface fluxes vanish at the boundary (the
/// jump sum runs over interior nodes only), realizing the homogeneous
/// Neumann condition without ghost cells.
QField temperature_rhs(const DiscreteState& state, const Mesh& mesh,
                       const PhysicalParams& params);

/// Bundled F(z) with a single positivity check up front.
StateDerivative rhs(const DiscreteState& state, const Mesh& mesh,
                    const PhysicalParams& params, const TridiagonalSystem& system);

/// Entropy dissipation rate D >= 0: int mu |u_x|^2 / (tau theta) plus the
/// jump sum (1/h) sum_i G_i (-[[L'(theta)]]_i [[1/theta]]_i); both summands
/// are nonnegative because L' is increasing while 1/theta is decreasing.
double entropy_production(const DiscreteState& state, const Mesh& mesh,
                          const PhysicalParams& params);

}  // namespace ns1d
