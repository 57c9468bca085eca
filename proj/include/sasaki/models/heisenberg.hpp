#pragma once

#include <span>
#include <string>
#include <vector>

#include "sasaki/contact/structure.hpp"

namespace sasaki::models {

using contact::ContactStructure;
using fields::Point;
using fields::TensorField;

/// Heisenberg group H^{2n+1} in global coordinates (x^1..x^n, y^1..y^n, z)
/// with its left-invariant Sasakian structure
///   η = ½(dz − Σ y^i dx^i),  ξ = 2∂z,
///   φ∂x^i = −∂y^i,  φ∂y^i = ∂x^i + y^i ∂z,  φ∂z = 0,
///   g = η⊗η + ¼ Σ ((dx^i)² + (dy^i)²),
/// and the soliton field V = −2(n+1)(x^i∂x^i + y^i∂y^i + 2z∂z), λ = 2n + 4.
struct HeisenbergModel {
  int n;
  ContactStructure structure;
  TensorField soliton_V;
  double lambda;
};

// `max_order` is the jet budget of the closed-form leaves.
HeisenbergModel build_heisenberg(int n, int max_order = jets::kMaxOrder);

// Coordinate index helpers for the (x, y, z) ordering.
inline int x_index(int /*n*/, int i) { return i; }
inline int y_index(int n, int i) { return n + i; }
inline int z_index(int n) { return 2 * n; }

// Vector fields used with the Heisenberg structure.
enum class HeisenbergVector { soliton, reeb, zero, soliton_plus_reeb, soliton_scaled2 };
TensorField heisenberg_vector(int n, HeisenbergVector kind, int max_order = jets::kMaxOrder);

// K(X, φX) for X in the contact distribution with g(X,X) = 1. Throws
// InvalidArgument if η(X) or g(X,X) − 1 exceed 1e-6, or if ‖φX‖ < 1e-6.
double phi_sectional_curvature(const ContactStructure& s, const Point& p, std::span<const double> X);

// The first-order system that £_V ξ = 4(n+1)ξ and £_V φ = 0 impose on
// V = V^i∂x^i + V̄^i∂y^i + V^z∂z:
//   ∂V^i/∂x^j = ∂V̄^i/∂y^j,  ∂V^i/∂y^j = −∂V̄^i/∂x^j,  y^i ∂V^i/∂y^j = ∂V^z/∂y^j,
//   V̄^j = y^j ∂V^z/∂z − y^i ∂V̄^i/∂y^j,  ∂V^z/∂z = −4(n+1),
// plus z-independence of V^i, V̄^i. Check names, in the order displayed above:
inline const std::vector<std::string>& pde_check_names() {
  static const std::vector<std::string> names = {"pde-vx-dx", "pde-vx-dy", "pde-vz-dy", "pde-vbar",
                                                 "pde-vz-dz", "pde-z-independent"};
  return names;
}

// Residual of each equation per point, plus the direct cross-checks
// "pde-lie-reeb" (£_V ξ − 4(n+1)ξ) and "pde-lie-phi" (£_V φ).
SuiteReport pde_check(const HeisenbergModel& model, const TensorField& V, std::span<const Point> points,
                      double tolerance);

// Candidate fields for the system: the special solution and perturbations of it.
enum class PdeCandidate {
  special,         // V^i = c x^i, V̄^i = c y^i, V^z = −4(n+1)z with c = −2(n+1)
  vz_plus_x1,      // V^z gains F = x^1
  vz_plus_y1,      // V^z gains F = y^1
  reeb,            // V = ξ
};
TensorField pde_candidate(int n, PdeCandidate which, int max_order = jets::kMaxOrder);

}  // namespace sasaki::models
