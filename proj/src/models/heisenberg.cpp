#include "sasaki/models/heisenberg.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki::models {

using fields::Chart;
using fields::closed_form;
using fields::Tensor;
using jets::Jet;

namespace {

Chart heisenberg_chart(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("z");
  return Chart(std::move(names));
}

std::vector<Jet> zero_components(std::span<const Jet> x, std::size_t count) {
  return std::vector<Jet>(count, jets::constant_like(x[0], 0.0));
}

}  // namespace

HeisenbergModel build_heisenberg(int n, int max_order) {
  if (n < 1) throw InvalidArgument("Heisenberg group needs n >= 1");
  const Chart chart = heisenberg_chart(n);
  const int d = 2 * n + 1;
  const int z = z_index(n);
  const auto sd = static_cast<std::size_t>(d);

  TensorField eta = closed_form(chart, 0, 1, "eta", [=](std::span<const Jet> x) {
    auto c = zero_components(x, sd);
    for (int i = 0; i < n; ++i) c[x_index(n, i)] = x[y_index(n, i)] * -0.5;
    c[z] += 0.5;
    return c;
  }, max_order);

  TensorField xi = closed_form(chart, 1, 0, "xi", [=](std::span<const Jet> x) {
    auto c = zero_components(x, sd);
    c[z] += 2.0;
    return c;
  }, max_order);

  // φ(a, b) = (φ ∂_b)^a
  TensorField phi = closed_form(chart, 1, 1, "phi", [=](std::span<const Jet> x) {
    auto c = zero_components(x, sd * sd);
    auto at = [&](int a, int b) -> Jet& { return c[static_cast<std::size_t>(a * d + b)]; };
    for (int i = 0; i < n; ++i) {
      at(y_index(n, i), x_index(n, i)) += -1.0;
      at(x_index(n, i), y_index(n, i)) += 1.0;
      at(z, y_index(n, i)) = x[y_index(n, i)];
    }
    return c;
  }, max_order);

  // g = η⊗η + ¼Σ(dx² + dy²) expanded:
  //   g_{x_i x_j} = (y_i y_j + δ_ij)/4, g_{x_i z} = −y_i/4, g_{zz} = ¼, g_{y_i y_j} = δ_ij/4
  TensorField g = closed_form(chart, 0, 2, "g", [=](std::span<const Jet> x) {
    auto c = zero_components(x, sd * sd);
    auto at = [&](int a, int b) -> Jet& { return c[static_cast<std::size_t>(a * d + b)]; };
    for (int i = 0; i < n; ++i) {
      const Jet& yi = x[y_index(n, i)];
      for (int j = 0; j < n; ++j) {
        Jet v = yi * x[y_index(n, j)];
        if (i == j) v += 1.0;
        at(x_index(n, i), x_index(n, j)) = v * 0.25;
      }
      at(x_index(n, i), z) = yi * -0.25;
      at(z, x_index(n, i)) = yi * -0.25;
      at(y_index(n, i), y_index(n, i)) += 0.25;
    }
    at(z, z) += 0.25;
    return c;
  }, max_order);

  return HeisenbergModel{n, ContactStructure(n, eta, xi, phi, g, "heisenberg:n=" + std::to_string(n)),
                         heisenberg_vector(n, HeisenbergVector::soliton, max_order), 2.0 * n + 4.0};
}

TensorField heisenberg_vector(int n, HeisenbergVector kind, int max_order) {
  if (n < 1) throw InvalidArgument("Heisenberg group needs n >= 1");
  const Chart chart = heisenberg_chart(n);
  const int d = 2 * n + 1;
  const int z = z_index(n);
  double scale = -2.0 * (n + 1);
  double reeb = 0.0;
  std::string name = "V";
  switch (kind) {
    case HeisenbergVector::soliton:
      break;
    case HeisenbergVector::reeb:
      scale = 0.0;
      reeb = 2.0;
      name = "xi";
      break;
    case HeisenbergVector::zero:
      scale = 0.0;
      name = "0";
      break;
    case HeisenbergVector::soliton_plus_reeb:
      reeb = 2.0;
      name = "V+xi";
      break;
    case HeisenbergVector::soliton_scaled2:
      scale *= 2.0;
      name = "2V";
      break;
  }
  return closed_form(chart, 1, 0, name, [=](std::span<const Jet> x) {
    auto c = zero_components(x, static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) c[a] = x[a] * (a == z ? 2.0 * scale : scale);
    c[z] += reeb;
    return c;
  }, max_order);
}

double phi_sectional_curvature(const ContactStructure& s, const Point& p, std::span<const double> X) {
  const int d = s.dim();
  if (static_cast<int>(X.size()) != d) throw InvalidArgument("direction length does not match chart dimension");
  const Tensor g = s.g().value(p), eta = s.eta().value(p), phi = s.phi().value(p);
  double ex = 0.0, xx = 0.0;
  for (int i = 0; i < d; ++i) {
    ex += eta(i) * X[i];
    for (int j = 0; j < d; ++j) xx += g(i, j) * X[i] * X[j];
  }
  if (std::abs(ex) > 1e-6) throw InvalidArgument("phi-sectional curvature: X is not orthogonal to xi");
  if (std::abs(xx - 1.0) > 1e-6) throw InvalidArgument("phi-sectional curvature: X is not a unit vector");
  std::vector<double> phiX(static_cast<std::size_t>(d), 0.0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) phiX[a] += phi(a, b) * X[b];
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) norm2 += g(i, j) * phiX[i] * phiX[j];
  if (!(std::sqrt(std::max(norm2, 0.0)) >= 1e-6)) {
    throw InvalidArgument("phi-sectional curvature: degenerate plane (phi X vanishes)");
  }
  return s.geometry().sectional_curvature(p, X, phiX);
}

}  // namespace sasaki::models
