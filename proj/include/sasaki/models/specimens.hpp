#pragma once

#include <optional>
#include <string>

#include "sasaki/contact/structure.hpp"

namespace sasaki::models {

fields::TensorField euclidean_metric(int dim);
// Round unit sphere in stereographic coordinates, g = 4(1 + x² + y²)^{-2} δ.
fields::TensorField stereographic_sphere_metric(int max_order = jets::kMaxOrder);
// e^{2x} δ on the plane.
fields::TensorField conformal_plane_metric(int max_order = jets::kMaxOrder);

// A contact metric structure on R^3 with flat associated metric g = ¼δ:
//   η = ½(cos z dx + sin z dy),  ξ = 2(cos z ∂x + sin z ∂y),
//   φ∂x = −sin z ∂z,  φ∂y = cos z ∂z,  φ∂z = sin z ∂x − cos z ∂y.
// Its Reeb field is not Killing, so h ≠ 0.
contact::ContactStructure flat_contact_candidate(int max_order = jets::kMaxOrder);

// The candidate is only used after it passes the axiom checker.
struct GatedStructure {
  std::optional<contact::ContactStructure> structure;
  SuiteReport axioms;
  std::string notice;  // why it was rejected, empty when accepted
};
GatedStructure gated_flat_contact_candidate(std::span<const fields::Point> points, double tolerance,
                                            int max_order = jets::kMaxOrder);

}  // namespace sasaki::models
