#pragma once

#include <cstdint>

#include "sasaki/riemann/geometry.hpp"

namespace sasaki::models {

struct RandomMetricSpec {
  int dim = 3;
  int degree = 2;          // polynomial degree of the perturbation, 0..3
  double epsilon = 0.3;    // perturbation amplitude
  std::uint64_t seed = 0;
  double box_half_width = 1.0;  // positive definiteness is checked on [−w, w]^dim
};

// g = I + ε·S(x) with S a symmetric matrix of random polynomials whose
// entries are of order one on the box. Positive definiteness is checked on a sample of the
// box; a failing draw is regenerated from the next seed stream, and after 16
// failures GenerationError is thrown. Identical specs give identical fields.
fields::TensorField random_metric_field(const RandomMetricSpec& spec, int max_order = jets::kMaxOrder);
riemann::MetricGeometry random_metric(const RandomMetricSpec& spec, int max_order = jets::kMaxOrder);

// Vector field with random polynomial components of the given degree
// (coefficients uniform in [−1, 1]).
fields::TensorField random_vector_field(int dim, int degree, std::uint64_t seed, int max_order = jets::kMaxOrder);
fields::ScalarField random_scalar_field(int dim, int degree, std::uint64_t seed, int max_order = jets::kMaxOrder);

// Identities that hold for any metric and vector field: the two commutation
// formulas, metric compatibility, Bianchi identities, d(df) = 0 and the
// Jacobi identity of the bracket.
SuiteReport universal_suite(const riemann::MetricGeometry& geom, const fields::TensorField& V,
                            const fields::ScalarField& f, std::span<const fields::Point> points,
                            double tolerance);

}  // namespace sasaki::models
