#include <cmath>
#include <sstream>

#include "sasaki/riemann/geometry.hpp"

namespace sasaki::riemann {

using fields::max_abs;
using fields::max_abs_diff;

SuiteReport metric_checks(const MetricGeometry& geom, std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "metric";
  const TensorField g = geom.metric();
  rep.add(make_check("metric-symmetric", "metric-symmetry", residual_over(points, [&](const Point& p) {
                       const Tensor t = g.value(p);
                       double m = 0.0;
                       for (int i = 0; i < t.dim(); ++i) {
                         for (int j = 0; j < t.dim(); ++j) m = std::max(m, std::abs(t(i, j) - t(j, i)));
                       }
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("metric-positive-definite", "metric-positive-definite",
                     margin_over(points, [&](const Point& p) { return symmetric_eigenvalues(g.value(p)).front(); }),
                     0.0, Sense::above));
  if (!rep.checks.back().pass) {
    rep.add(not_applicable("christoffel-symmetric", "christoffel-symmetry", "metric is not positive definite"));
    rep.add(not_applicable("metric-compatible", "metric-compatibility", "metric is not positive definite"));
    rep.add(not_applicable("ricci-symmetric", "ricci-symmetry", "metric is not positive definite"));
    return rep;
  }
  const TensorField G = geom.christoffel();
  rep.add(make_check("christoffel-symmetric", "christoffel-symmetry", residual_over(points, [&](const Point& p) {
                       const Tensor t = G.value(p);
                       double m = 0.0;
                       for (int k = 0; k < t.dim(); ++k) {
                         for (int i = 0; i < t.dim(); ++i) {
                           for (int j = 0; j < t.dim(); ++j) m = std::max(m, std::abs(t(k, i, j) - t(k, j, i)));
                         }
                       }
                       return m;
                     }),
                     tolerance));
  const TensorField Dg = geom.covariant_derivative(g);
  rep.add(make_check("metric-compatible", "metric-compatibility",
                     residual_over(points, [&](const Point& p) { return max_abs(Dg.value(p)); }), tolerance));
  const TensorField Ric = geom.ricci();
  rep.add(make_check("ricci-symmetric", "ricci-symmetry", residual_over(points, [&](const Point& p) {
                       const Tensor t = Ric.value(p);
                       double m = 0.0;
                       for (int i = 0; i < t.dim(); ++i) {
                         for (int j = 0; j < t.dim(); ++j) m = std::max(m, std::abs(t(i, j) - t(j, i)));
                       }
                       return m;
                     }),
                     tolerance));
  return rep;
}

SuiteReport bianchi_checks(const MetricGeometry& geom, std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "bianchi";
  const int n = geom.dim();
  const TensorField R = geom.riemann();
  const TensorField g = geom.metric();
  rep.add(make_check("first-bianchi", "first-bianchi", residual_over(points, [&](const Point& p) {
                       const Tensor r = R.value(p);
                       double m = 0.0;
                       for (int l = 0; l < n; ++l)
                         for (int i = 0; i < n; ++i)
                           for (int j = 0; j < n; ++j)
                             for (int k = 0; k < n; ++k)
                               m = std::max(m, std::abs(r(l, i, j, k) + r(l, j, k, i) + r(l, k, i, j)));
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("riemann-symmetries", "riemann-symmetries", residual_over(points, [&](const Point& p) {
                       const Tensor r = R.value(p);
                       const Tensor gp = g.value(p);
                       // Rl(i,j,k,l) = g(R(∂_i,∂_j)∂_k, ∂_l)
                       Tensor Rl = fields::zeros(n, 0, 4);
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j)
                           for (int k = 0; k < n; ++k)
                             for (int l = 0; l < n; ++l) {
                               double s = 0.0;
                               for (int m = 0; m < n; ++m) s += gp(l, m) * r(m, i, j, k);
                               Rl(i, j, k, l) = s;
                             }
                       double m = 0.0;
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j)
                           for (int k = 0; k < n; ++k)
                             for (int l = 0; l < n; ++l) {
                               m = std::max(m, std::abs(Rl(i, j, k, l) + Rl(j, i, k, l)));
                               m = std::max(m, std::abs(Rl(i, j, k, l) + Rl(i, j, l, k)));
                               m = std::max(m, std::abs(Rl(i, j, k, l) - Rl(k, l, i, j)));
                             }
                       return m;
                     }),
                     tolerance));
  const TensorField DRic = geom.covariant_derivative(geom.ricci());
  const TensorField ginv = geom.inverse_metric();
  const ScalarField r = geom.scalar_curvature();
  rep.add(make_check("contracted-second-bianchi", "contracted-second-bianchi",
                     residual_over(points, [&](const Point& p) {
                       const Tensor D = DRic.value(p);
                       const Tensor gi = ginv.value(p);
                       const std::vector<double> dr = r.evaluate(p, 1).gradient();
                       double m = 0.0;
                       for (int b = 0; b < n; ++b) {
                         double div = 0.0;
                         for (int d = 0; d < n; ++d)
                           for (int a = 0; a < n; ++a) div += gi(d, a) * D(d, a, b);
                         m = std::max(m, std::abs(div - 0.5 * dr[b]));
                       }
                       return m;
                     }),
                     tolerance));
  return rep;
}

SuiteReport commutation_check_10(const MetricGeometry& geom, const TensorField& V,
                                 std::span<const Point> points, double tolerance,
                                 std::optional<double> lambda) {
  SuiteReport rep;
  rep.suite = "lie-connection-commutation";
  const int n = geom.dim();
  const TensorField g = geom.metric();
  const TensorField L = geom.lie_derivative_connection(V);
  const TensorField LDg = lie_derivative(V, geom.covariant_derivative(g));
  const TensorField Lg = lie_derivative(V, g);
  const TensorField DLg = geom.covariant_derivative(Lg);
  rep.add(make_check("lie-connection-commutation", "lie-connection-commutation",
                     residual_over(points, [&](const Point& p) {
                       const Tensor a = LDg.value(p);
                       const Tensor b = DLg.value(p);
                       const Tensor l = L.value(p);
                       const Tensor gp = g.value(p);
                       double m = 0.0;
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j)
                           for (int k = 0; k < n; ++k) {
                             double rhs = 0.0;
                             for (int q = 0; q < n; ++q) rhs -= gp(q, k) * l(q, i, j) + gp(q, j) * l(q, i, k);
                             m = std::max(m, std::abs(a(i, j, k) - b(i, j, k) - rhs));
                           }
                       return m;
                     }),
                     tolerance));
  if (!lambda) return rep;

  const TensorField Ric = geom.ricci();
  const double lam = *lambda;
  const ResidualStats soliton = residual_over(points, [&](const Point& p) {
    const Tensor lg = Lg.value(p);
    const Tensor ric = Ric.value(p);
    const Tensor gp = g.value(p);
    double m = 0.0;
    for (std::size_t i = 0; i < lg.size(); ++i) m = std::max(m, std::abs(lg[i] + 2.0 * ric[i] + 2.0 * lam * gp[i]));
    return m;
  });
  if (!(soliton.max <= tolerance)) {
    std::ostringstream why;
    why << "(g, V, lambda=" << lam << ") is not a Ricci soliton; residual " << soliton.max;
    rep.add(not_applicable("soliton-lie-connection", "soliton-lie-connection", why.str()));
    return rep;
  }
  const TensorField DRic = geom.covariant_derivative(Ric);
  rep.add(make_check("soliton-lie-connection", "soliton-lie-connection", residual_over(points, [&](const Point& p) {
                       const Tensor l = L.value(p);
                       const Tensor gp = g.value(p);
                       const Tensor D = DRic.value(p);  // D(d, a, b) = (∇_d Ric)(a, b)
                       double m = 0.0;
                       for (int i = 0; i < n; ++i)
                         for (int j = 0; j < n; ++j)
                           for (int k = 0; k < n; ++k) {
                             double lhs = 0.0;
                             for (int q = 0; q < n; ++q) lhs += gp(q, k) * l(q, i, j);
                             const double rhs = D(k, i, j) - D(i, j, k) - D(j, i, k);
                             m = std::max(m, std::abs(lhs - rhs));
                           }
                       return m;
                     }),
                     tolerance));
  return rep;
}

SuiteReport commutation_check_13(const MetricGeometry& geom, const TensorField& V,
                                 std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "lie-curvature-commutation";
  const int n = geom.dim();
  const TensorField L = geom.lie_derivative_connection(V);
  const TensorField Ld = geom.lie_derivative_connection_direct(V);
  const TensorField LR = lie_derivative(V, geom.riemann());
  const TensorField DL = geom.covariant_derivative(L);  // DL(l, d, i, j) = (∇_d L)^l_{ij}
  rep.add(make_check("lie-curvature-commutation", "lie-curvature-commutation",
                     residual_over(points, [&](const Point& p) {
                       const Tensor lr = LR.value(p);
                       const Tensor dl = DL.value(p);
                       double m = 0.0;
                       for (int l = 0; l < n; ++l)
                         for (int i = 0; i < n; ++i)
                           for (int j = 0; j < n; ++j)
                             for (int k = 0; k < n; ++k)
                               m = std::max(m, std::abs(lr(l, i, j, k) - (dl(l, i, j, k) - dl(l, j, i, k))));
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("lie-connection-routes", "lie-connection-routes",
                     residual_over(points, [&](const Point& p) { return max_abs_diff(L.value(p), Ld.value(p)); }),
                     tolerance));
  return rep;
}

}  // namespace sasaki::riemann
