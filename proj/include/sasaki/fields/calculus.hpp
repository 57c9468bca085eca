#pragma once

#include <span>
#include <vector>

#include "sasaki/fields/tensor_field.hpp"

namespace sasaki::fields {

// df as a 1-form.
TensorField differential(const ScalarField& f);

// dω for a 1-form, with the convention
//   dω(X,Y) = ½(X ω(Y) − Y ω(X) − ω([X,Y])),
// i.e. components ½(∂_i ω_j − ∂_j ω_i).
TensorField exterior_derivative(const TensorField& omega);

// [X,Y]^k = X^j ∂_j Y^k − Y^j ∂_j X^k
TensorField lie_bracket(const TensorField& X, const TensorField& Y);

// Coefficient of η ∧ (dη)^n on the coordinate frame, i.e. the full
// alternation Alt(η ⊗ dη ⊗ ... ⊗ dη)(∂_0, ..., ∂_2n). Chart dimension must be
// 2n + 1.
double volume_form_coefficient(const TensorField& eta, int n, const Point& p);

struct VolumeFormReport {
  std::vector<double> coefficients;
  double min_abs = 0.0;
  double max_abs = 0.0;
  bool pass = false;  // min_abs > tolerance
};

VolumeFormReport volume_form_check(const TensorField& eta, int n, std::span<const Point> points,
                                   double tolerance);

// Pfaffian of an antisymmetric 2m×2m matrix (row-major).
double pfaffian(std::span<const double> a, int size);

}  // namespace sasaki::fields
