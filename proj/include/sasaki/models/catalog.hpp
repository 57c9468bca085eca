#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasaki/contact/structure.hpp"
#include "sasaki/models/heisenberg.hpp"

namespace sasaki::models {

// Values used when a selector omits n or a.
struct ModelDefaults {
  int n = 1;
  double a = 2.0;
};

/// A resolved catalog entry: a metric, optionally a contact structure, a
/// vector field V with its soliton constant when known, a scalar probe for
/// the d² check, and the sampling box.
struct ModelInstance {
  std::string selector;  // canonical form, all parameters spelled out
  std::string family;
  fields::TensorField metric;
  std::optional<contact::ContactStructure> structure;
  std::optional<HeisenbergModel> heisenberg;  // only for the undeformed group
  fields::TensorField V;
  std::optional<double> lambda;
  fields::ScalarField probe;
  fields::Box box;
  std::string notice;

  riemann::MetricGeometry geometry() const { return riemann::MetricGeometry(metric); }
};

// Selector grammar: family[:key=value,...]. Families and keys:
//   heisenberg           n, v = soliton|xi|zero|soliton+xi|2v|soliton+x1dz|soliton+y1dz, box
//   heisenberg-deformed  n, a, v = xi|zero, box
//   random               dim, seed, degree, eps, box
//   flat-contact         v = zero|xi, box
//   euclidean            dim, box
//   sphere               box
// Throws InvalidArgument for unknown families, keys or malformed values.
ModelInstance resolve_model(const std::string& selector, const ModelDefaults& defaults, int max_order);

// The models the coverage matrix runs over, Heisenberg for n = 1..n_max.
std::vector<std::string> matrix_selectors(int n_max);

}  // namespace sasaki::models
