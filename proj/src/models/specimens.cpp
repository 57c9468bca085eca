#include "sasaki/models/specimens.hpp"

namespace sasaki::models {

using fields::Chart;
using fields::closed_form;
using fields::TensorField;
using jets::Jet;

TensorField euclidean_metric(int dim) {
  std::vector<double> c(static_cast<std::size_t>(dim * dim), 0.0);
  for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return fields::constant_field(Chart::numbered(dim), 0, 2, "delta", std::move(c));
}

TensorField stereographic_sphere_metric(int max_order) {
  return closed_form(Chart({"x", "y"}), 0, 2, "g_sphere", [](std::span<const Jet> x) {
    const Jet w = 1.0 + x[0] * x[0] + x[1] * x[1];
    const Jet f = 4.0 / (w * w);
    const Jet zero = jets::constant_like(f, 0.0);
    return std::vector<Jet>{f, zero, zero, f};
  }, max_order);
}

TensorField conformal_plane_metric(int max_order) {
  return closed_form(Chart({"x", "y"}), 0, 2, "g_conformal", [](std::span<const Jet> x) {
    const Jet f = jets::exp(2.0 * x[0]);
    const Jet zero = jets::constant_like(f, 0.0);
    return std::vector<Jet>{f, zero, zero, f};
  }, max_order);
}

contact::ContactStructure flat_contact_candidate(int max_order) {
  const Chart chart({"x", "y", "z"});
  const TensorField eta = closed_form(chart, 0, 1, "eta", [](std::span<const Jet> x) {
    return std::vector<Jet>{0.5 * jets::cos(x[2]), 0.5 * jets::sin(x[2]), jets::constant_like(x[2], 0.0)};
  }, max_order);
  const TensorField xi = closed_form(chart, 1, 0, "xi", [](std::span<const Jet> x) {
    return std::vector<Jet>{2.0 * jets::cos(x[2]), 2.0 * jets::sin(x[2]), jets::constant_like(x[2], 0.0)};
  }, max_order);
  const TensorField phi = closed_form(chart, 1, 1, "phi", [](std::span<const Jet> x) {
    const Jet s = jets::sin(x[2]), c = jets::cos(x[2]), o = jets::constant_like(x[2], 0.0);
    // rows: (φ ∂_b)^a
    return std::vector<Jet>{o, o, s, o, o, -c, -s, c, o};
  }, max_order);
  std::vector<double> g(9, 0.0);
  g[0] = g[4] = g[8] = 0.25;
  return contact::ContactStructure(1, eta, xi, phi, fields::constant_field(chart, 0, 2, "g", g), "flat-contact");
}

GatedStructure gated_flat_contact_candidate(std::span<const fields::Point> points, double tolerance, int max_order) {
  GatedStructure out;
  contact::ContactStructure s = flat_contact_candidate(max_order);
  out.axioms = contact::verify_axioms(s, points, tolerance);
  if (out.axioms.pass()) {
    out.structure = s;
  } else {
    for (const auto& c : out.axioms.checks) {
      if (c.applicable && !c.pass) {
        out.notice += (out.notice.empty() ? "flat contact candidate rejected: " : ", ") + c.name +
                      " residual " + std::to_string(c.max_residual);
      }
    }
  }
  return out;
}

}  // namespace sasaki::models
