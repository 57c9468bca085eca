#include <cmath>

#include "sasaki/errors.hpp"
#include "sasaki/models/heisenberg.hpp"
#include "sasaki/parallel.hpp"

namespace sasaki::models {

using fields::JetTensor;
using fields::Tensor;
using jets::Jet;

SuiteReport pde_check(const HeisenbergModel& model, const TensorField& V, std::span<const Point> points,
                      double tolerance) {
  if (V.up() != 1 || V.down() != 0 || !(V.chart() == model.structure.chart())) {
    throw InvalidArgument("pde_check expects a vector field on the Heisenberg chart");
  }
  const int n = model.n;
  const int z = z_index(n);
  const double k = 4.0 * (n + 1);
  const auto& names = pde_check_names();

  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const JetTensor v = V.evaluate(p, 1);
    std::vector<std::vector<double>> grad;
    for (int c = 0; c < 2 * n + 1; ++c) grad.push_back(v(c).gradient());
    // D(c, a) = ∂V^c/∂x^a
    auto D = [&](int c, int a) { return grad[c][a]; };
    auto X = [&](int i) { return x_index(n, i); };
    auto Y = [&](int i) { return y_index(n, i); };
    std::vector<double> r(names.size(), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        r[0] = std::max(r[0], std::abs(D(X(i), X(j)) - D(Y(i), Y(j))));
        r[1] = std::max(r[1], std::abs(D(X(i), Y(j)) + D(Y(i), X(j))));
      }
    }
    for (int j = 0; j < n; ++j) {
      double s3 = 0.0, s4 = 0.0;
      for (int i = 0; i < n; ++i) {
        s3 += p[Y(i)] * D(X(i), Y(j));
        s4 += p[Y(i)] * D(Y(i), Y(j));
      }
      r[2] = std::max(r[2], std::abs(s3 - D(z, Y(j))));
      r[3] = std::max(r[3], std::abs(v(Y(j)).value() - (p[Y(j)] * D(z, z) - s4)));
    }
    r[4] = std::abs(D(z, z) + k);
    for (int i = 0; i < n; ++i) {
      r[5] = std::max({r[5], std::abs(D(X(i), z)), std::abs(D(Y(i), z))});
    }
    return r;
  });
  SuiteReport rep;
  rep.suite = "pde";
  for (std::size_t c = 0; c < names.size(); ++c) {
    std::vector<double> col;
    for (const auto& r : rows) col.push_back(r[c]);
    rep.add(make_check(names[c], "heisenberg-" + names[c], stats_of(col), tolerance));
  }

  // direct form of the two conditions the system was derived from
  const ContactStructure& s = model.structure;
  const TensorField Lxi = riemann::lie_derivative(V, s.xi());
  const TensorField Lphi = riemann::lie_derivative(V, s.phi());
  rep.add(make_check("pde-lie-reeb", "lie-reeb-soliton", residual_over(points, [&](const Point& p) {
                       const Tensor l = Lxi.value(p), x = s.xi().value(p);
                       double m = 0.0;
                       for (std::size_t a = 0; a < l.size(); ++a) m = std::max(m, std::abs(l[a] - k * x[a]));
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("pde-lie-phi", "lie-phi-invariant",
                     residual_over(points, [&](const Point& p) { return fields::max_abs(Lphi.value(p)); }),
                     tolerance));
  return rep;
}

TensorField pde_candidate(int n, PdeCandidate which, int max_order) {
  if (which == PdeCandidate::special) return heisenberg_vector(n, HeisenbergVector::soliton, max_order);
  if (which == PdeCandidate::reeb) return heisenberg_vector(n, HeisenbergVector::reeb, max_order);
  const TensorField base = heisenberg_vector(n, HeisenbergVector::soliton, max_order);
  const int shift = which == PdeCandidate::vz_plus_x1 ? x_index(n, 0) : y_index(n, 0);
  const std::string name = which == PdeCandidate::vz_plus_x1 ? "V+x1 dz" : "V+y1 dz";
  const int z = z_index(n);
  const int d = 2 * n + 1;
  return fields::closed_form(base.chart(), 1, 0, name, [=](std::span<const Jet> x) {
    std::vector<Jet> c;
    const double s = -2.0 * (n + 1);
    for (int a = 0; a < d; ++a) c.push_back(x[a] * (a == z ? 2.0 * s : s));
    c[z] += x[shift];
    return c;
  }, max_order);
}

}  // namespace sasaki::models
