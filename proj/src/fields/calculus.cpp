#include "sasaki/fields/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/errors.hpp"
#include "sasaki/parallel.hpp"

namespace sasaki::fields {

TensorField differential(const ScalarField& f) {
  const TensorField src = f.field();
  const int dim = src.dim();
  return TensorField(src.chart(), 0, 1, "d" + src.name(), [src, dim](const Point& p, int order) {
    const JetTensor s = src.evaluate(p, order + 1);
    JetTensor out = jet_zeros(dim, 0, 1, jets::JetSpec{dim, order});
    for (int i = 0; i < dim; ++i) out(i) = s[0].differentiate(i);
    return out;
  });
}

TensorField exterior_derivative(const TensorField& omega) {
  if (omega.up() != 0 || omega.down() != 1) {
    throw InvalidArgument("exterior_derivative expects a 1-form, got rank (" +
                          std::to_string(omega.up()) + "," + std::to_string(omega.down()) + ")");
  }
  const int dim = omega.dim();
  return TensorField(omega.chart(), 0, 2, "d" + omega.name(), [omega, dim](const Point& p, int order) {
    const JetTensor w = omega.evaluate(p, order + 1);
    JetTensor out = jet_zeros(dim, 0, 2, jets::JetSpec{dim, order});
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        jets::Jet v = (w(j).differentiate(i) - w(i).differentiate(j)) * 0.5;
        out(j, i) = -v;
        out(i, j) = std::move(v);
      }
    }
    return out;
  });
}

TensorField lie_bracket(const TensorField& X, const TensorField& Y) {
  if (X.up() != 1 || X.down() != 0 || Y.up() != 1 || Y.down() != 0) {
    throw InvalidArgument("lie_bracket expects two vector fields");
  }
  if (!(X.chart() == Y.chart())) throw InvalidArgument("lie_bracket: fields live on different charts");
  const int dim = X.dim();
  return TensorField(X.chart(), 1, 0, "[" + X.name() + "," + Y.name() + "]",
                     [X, Y, dim](const Point& p, int order) {
                       const JetTensor x1 = X.evaluate(p, order + 1);
                       const JetTensor y1 = Y.evaluate(p, order + 1);
                       const JetTensor x = truncate(x1, order);
                       const JetTensor y = truncate(y1, order);
                       JetTensor out = jet_zeros(dim, 1, 0, jets::JetSpec{dim, order});
                       for (int k = 0; k < dim; ++k) {
                         for (int j = 0; j < dim; ++j) {
                           out(k) += x(j) * y1(k).differentiate(j);
                           out(k) -= y(j) * x1(k).differentiate(j);
                         }
                       }
                       return out;
                     });
}

double pfaffian(std::span<const double> a, int size) {
  if (size == 0) return 1.0;
  if (size % 2 != 0) return 0.0;
  // expansion along the first row
  double total = 0.0;
  std::vector<double> minor(static_cast<std::size_t>((size - 2) * (size - 2)));
  for (int j = 1; j < size; ++j) {
    const double a0j = a[static_cast<std::size_t>(j)];
    if (a0j == 0.0) continue;
    int r = 0;
    for (int row = 1; row < size; ++row) {
      if (row == j) continue;
      int c = 0;
      for (int col = 1; col < size; ++col) {
        if (col == j) continue;
        minor[static_cast<std::size_t>(r * (size - 2) + c)] = a[static_cast<std::size_t>(row * size + col)];
        ++c;
      }
      ++r;
    }
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    total += sign * a0j * pfaffian(minor, size - 2);
  }
  return total;
}

double volume_form_coefficient(const TensorField& eta, int n, const Point& p) {
  const int dim = 2 * n + 1;
  if (n < 1 || eta.dim() != dim) {
    throw InvalidArgument("volume form check needs chart dimension 2n+1 = " + std::to_string(dim) +
                          ", got " + std::to_string(eta.dim()));
  }
  if (eta.up() != 0 || eta.down() != 1) throw InvalidArgument("volume form check expects a 1-form");
  const Tensor e = eta.value(p);
  const Tensor w = exterior_derivative(eta).value(p);
  // Σ_σ sgn σ η(e_σ0) Π dη(pairs) = 2^n n! Σ_i (−1)^i η_i Pf(dη without i)
  double sum = 0.0;
  std::vector<double> minor(static_cast<std::size_t>(2 * n * 2 * n));
  for (int i = 0; i < dim; ++i) {
    if (e(i) == 0.0) continue;
    int r = 0;
    for (int row = 0; row < dim; ++row) {
      if (row == i) continue;
      int c = 0;
      for (int col = 0; col < dim; ++col) {
        if (col == i) continue;
        minor[static_cast<std::size_t>(r * 2 * n + c)] = w(row, col);
        ++c;
      }
      ++r;
    }
    sum += ((i % 2 == 0) ? 1.0 : -1.0) * e(i) * pfaffian(minor, 2 * n);
  }
  double scale = 1.0;  // 2^n n! / (2n+1)!
  for (int k = 1; k <= n; ++k) scale *= 2.0 * k;
  for (int k = 2; k <= dim; ++k) scale /= k;
  return scale * sum;
}

VolumeFormReport volume_form_check(const TensorField& eta, int n, std::span<const Point> points,
                                   double tolerance) {
  if (eta.dim() != 2 * n + 1) {
    throw InvalidArgument("volume form check needs chart dimension 2n+1");
  }
  VolumeFormReport r;
  r.coefficients = parallel_map(points.size(), [&](std::size_t i) {
    return volume_form_coefficient(eta, n, points[i]);
  });
  if (r.coefficients.empty()) return r;
  r.min_abs = std::abs(r.coefficients.front());
  for (double c : r.coefficients) {
    r.min_abs = std::min(r.min_abs, std::abs(c));
    r.max_abs = std::max(r.max_abs, std::abs(c));
  }
  r.pass = r.min_abs > tolerance;
  return r;
}

}  // namespace sasaki::fields
