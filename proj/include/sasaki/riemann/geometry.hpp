#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sasaki/fields/tensor_field.hpp"
#include "sasaki/report.hpp"

namespace sasaki::riemann {

using fields::Chart;
using fields::JetTensor;
using fields::Point;
using fields::ScalarField;
using fields::Tensor;
using fields::TensorField;

/// Levi-Civita data of a Riemannian metric given on one chart.
///
/// Index conventions (contravariant indices first):
///   christoffel   G(k, i, j)    = Γ^k_{ij}
///   riemann       R(l, i, j, k) = (R(∂_i, ∂_j) ∂_k)^l,
///                 R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z
///   ricci         Ric(j, k)     = Σ_i R(i, i, j, k)
///   ricci_operator Q(a, b)      = g^{ac} Ric_{cb}
///   covariant_derivative of a (p,q) tensor is (p,q+1) with the derivative
///   slot first among the covariant indices: (∇T)^{a..}_{d b..} = (∇_d T)^{a..}_{b..}
///
/// Every field returned here is lazy: components are recomputed from the
/// metric jets at each evaluation, so a geometry is immutable and safe to
/// share between threads.
class MetricGeometry {
 public:
  explicit MetricGeometry(TensorField g);

  const TensorField& metric() const { return g_; }
  const Chart& chart() const { return g_.chart(); }
  int dim() const { return g_.dim(); }

  TensorField inverse_metric() const;
  TensorField christoffel() const;
  TensorField riemann() const;
  TensorField ricci() const;
  TensorField ricci_operator() const;
  ScalarField scalar_curvature() const;

  TensorField covariant_derivative(const TensorField& T) const;
  // grad f, as a vector field
  TensorField gradient(const ScalarField& f) const;
  // div X = ∇_i X^i for a vector field
  ScalarField divergence(const TensorField& X) const;
  // Δf = −div grad f
  ScalarField laplacian(const ScalarField& f) const;

  // £_V∇ as a (1,2) tensor L(k, i, j) = ((£_V∇)(∂_i, ∂_j))^k, from
  //   (£_V∇)(X,Y) = ∇_X∇_Y V − ∇_{∇_X Y}V + R(V,X)Y.
  TensorField lie_derivative_connection(const TensorField& V) const;
  // Same tensor from the Lie derivative of the Christoffel symbols,
  //   ∂_i∂_jV^k + V^l∂_lΓ^k_{ij} − Γ^l_{ij}∂_lV^k + Γ^k_{lj}∂_iV^l + Γ^k_{il}∂_jV^l.
  TensorField lie_derivative_connection_direct(const TensorField& V) const;

  // Pointwise values. All throw SingularValue when g is singular at p.
  Tensor christoffel_at(const Point& p) const { return christoffel().value(p); }
  Tensor riemann_at(const Point& p) const { return riemann().value(p); }
  Tensor ricci_at(const Point& p) const { return ricci().value(p); }
  Tensor ricci_operator_at(const Point& p) const { return ricci_operator().value(p); }
  double scalar_curvature_at(const Point& p) const { return scalar_curvature().value(p); }

  // g(R(X,Y)Y, X) / (g(X,X)g(Y,Y) − g(X,Y)²). Throws InvalidArgument when X
  // and Y are linearly dependent.
  double sectional_curvature(const Point& p, std::span<const double> X,
                             std::span<const double> Y) const;

 private:
  TensorField g_;
};

// Lie derivative £_V T for T of rank (0,q) with q <= 4 or (1,q) with q <= 3.
// Other ranks throw CapabilityError.
TensorField lie_derivative(const TensorField& V, const TensorField& T);

// Jet-level kernels behind MetricGeometry, exposed for tests.
// Inverse of a square jet matrix stored in a rank-2 tensor; result has rank
// (up, down). Throws SingularValue if the matrix is singular at the point.
JetTensor inverse_matrix(const JetTensor& m, int up, int down);
// g at order k+1 -> Γ at order k
JetTensor christoffel_from_metric(const JetTensor& g);
// Γ at order k+1 -> R at order k
JetTensor riemann_from_christoffel(const JetTensor& gamma);
JetTensor ricci_from_riemann(const JetTensor& R);

// Eigenvalues of a symmetric matrix (Jacobi rotations), ascending.
std::vector<double> symmetric_eigenvalues(const Tensor& m);

// Metric sanity: symmetry, positive definiteness (smallest eigenvalue),
// symmetry of Γ, metric compatibility ∇g = 0, symmetry of Ric.
SuiteReport metric_checks(const MetricGeometry& geom, std::span<const Point> points, double tolerance);

// First Bianchi identity, the algebraic symmetries of R_{ijkl}, and the
// contracted second Bianchi identity div Ric = ½ dr.
SuiteReport bianchi_checks(const MetricGeometry& geom, std::span<const Point> points, double tolerance);

// Commutation of £_V with ∇ acting on g:
//   (£_V∇g − ∇£_Vg − ∇_{[V,·]}g)(X,Y,Z) = −g((£_V∇)(X,Y),Z) − g((£_V∇)(X,Z),Y)
// for arbitrary (g, V). When `lambda` is given and (g, V, λ) satisfies
// £_Vg + 2Ric + 2λg = 0, also the solved form
//   g((£_V∇)(X,Y),Z) = (∇_Z Ric)(X,Y) − (∇_X Ric)(Y,Z) − (∇_Y Ric)(X,Z).
SuiteReport commutation_check_10(const MetricGeometry& geom, const TensorField& V,
                                 std::span<const Point> points, double tolerance,
                                 std::optional<double> lambda = std::nullopt);

// (£_V R)(X,Y)Z = (∇_X £_V∇)(Y,Z) − (∇_Y £_V∇)(X,Z), with £_V R taken as the
// direct Lie derivative of the curvature components. Also cross-checks the two
// routes to £_V∇.
SuiteReport commutation_check_13(const MetricGeometry& geom, const TensorField& V,
                                 std::span<const Point> points, double tolerance);

}  // namespace sasaki::riemann
