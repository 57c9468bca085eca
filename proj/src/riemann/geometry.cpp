#include "sasaki/riemann/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sasaki/errors.hpp"

namespace sasaki::riemann {

using jets::Jet;
using jets::JetSpec;

namespace {

bool is_zero(const Jet& j) {
  for (double c : j.coeffs()) {
    if (c != 0.0) return false;
  }
  return true;
}

}  // namespace

JetTensor inverse_matrix(const JetTensor& m, int up, int down) {
  if (m.rank() != 2 || up + down != 2) throw InvalidArgument("inverse_matrix expects a rank-2 tensor");
  const int n = m.dim();
  const JetSpec spec = m[0].spec();
  std::vector<Jet> a = m.data();
  JetTensor inv = fields::jet_zeros(n, up, down, spec);
  for (int i = 0; i < n; ++i) inv(i, i) = Jet::constant(spec, 1.0);
  auto at = [n](std::vector<Jet>& v, int r, int c) -> Jet& { return v[static_cast<std::size_t>(r * n + c)]; };

  double scale = 0.0;
  for (const Jet& j : a) scale = std::max(scale, std::abs(j.value()));
  if (!(scale > 0.0) || !std::isfinite(scale)) throw SingularValue("singular metric (zero matrix)");

  for (int c = 0; c < n; ++c) {
    int pivot = c;
    for (int r = c + 1; r < n; ++r) {
      if (std::abs(at(a, r, c).value()) > std::abs(at(a, pivot, c).value())) pivot = r;
    }
    if (!(std::abs(at(a, pivot, c).value()) > 1e-13 * scale)) {
      throw SingularValue("singular metric: no pivot in column " + std::to_string(c));
    }
    if (pivot != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(at(a, pivot, j), at(a, c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    const Jet p = jets::recip(at(a, c, c));
    for (int j = 0; j < n; ++j) {
      at(a, c, j) = at(a, c, j) * p;
      inv(c, j) = inv(c, j) * p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const Jet f = at(a, r, c);
      if (is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        at(a, r, j).sub_product(f, at(a, c, j));
        inv(r, j).sub_product(f, inv(c, j));
      }
    }
  }
  return inv;
}

JetTensor christoffel_from_metric(const JetTensor& g) {
  const int n = g.dim();
  const int k = fields::order_of(g) - 1;
  if (k < 0) throw CapabilityError("Christoffel symbols need metric jets of order >= 1");
  const JetSpec spec{n, k};
  const JetTensor ginv = inverse_matrix(fields::truncate(g, k), 2, 0);
  std::vector<JetTensor> dg;
  for (int l = 0; l < n; ++l) dg.push_back(fields::differentiate(g, l));

  // first kind: Γ_{l,ij} = ½(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})
  JetTensor first = fields::jet_zeros(n, 0, 3, spec);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Jet v = dg[i](j, l) + dg[j](i, l) - dg[l](i, j);
        v *= 0.5;
        first(l, j, i) = v;
        first(l, i, j) = std::move(v);
      }
    }
  }
  JetTensor G = fields::jet_zeros(n, 1, 2, spec);
  for (int kk = 0; kk < n; ++kk) {
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Jet s(spec);
        for (int l = 0; l < n; ++l) {
          if (is_zero(first(l, i, j)) || is_zero(ginv(kk, l))) continue;
          s.add_product(ginv(kk, l), first(l, i, j));
        }
        G(kk, j, i) = s;
        G(kk, i, j) = std::move(s);
      }
    }
  }
  return G;
}

JetTensor riemann_from_christoffel(const JetTensor& gamma) {
  const int n = gamma.dim();
  const int k = fields::order_of(gamma) - 1;
  if (k < 0) throw CapabilityError("curvature needs Christoffel jets of order >= 1");
  const JetSpec spec{n, k};
  const JetTensor G = fields::truncate(gamma, k);
  std::vector<JetTensor> dG;
  for (int a = 0; a < n; ++a) dG.push_back(fields::differentiate(gamma, a));

  JetTensor R = fields::jet_zeros(n, 1, 3, spec);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int kk = 0; kk < n; ++kk) {
          Jet v = dG[i](l, j, kk) - dG[j](l, i, kk);
          for (int m = 0; m < n; ++m) {
            if (!is_zero(G(l, i, m)) && !is_zero(G(m, j, kk))) v.add_product(G(l, i, m), G(m, j, kk));
            if (!is_zero(G(l, j, m)) && !is_zero(G(m, i, kk))) v.sub_product(G(l, j, m), G(m, i, kk));
          }
          R(l, j, i, kk) = -v;
          R(l, i, j, kk) = std::move(v);
        }
      }
    }
  }
  return R;
}

JetTensor ricci_from_riemann(const JetTensor& R) {
  const int n = R.dim();
  JetTensor Ric = fields::jet_zeros(n, 0, 2, R[0].spec());
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) Ric(j, k) += R(i, i, j, k);
    }
  }
  return Ric;
}

MetricGeometry::MetricGeometry(TensorField g) : g_(std::move(g)) {
  if (g_.up() != 0 || g_.down() != 2) throw InvalidArgument("metric must be a (0,2) tensor field");
}

TensorField MetricGeometry::inverse_metric() const {
  const TensorField g = g_;
  return TensorField(g.chart(), 2, 0, "g^-1", [g](const Point& p, int order) {
    return inverse_matrix(g.evaluate(p, order), 2, 0);
  });
}

TensorField MetricGeometry::christoffel() const {
  const TensorField g = g_;
  return TensorField(g.chart(), 1, 2, "Gamma", [g](const Point& p, int order) {
    return christoffel_from_metric(g.evaluate(p, order + 1));
  });
}

TensorField MetricGeometry::riemann() const {
  const TensorField g = g_;
  return TensorField(g.chart(), 1, 3, "R", [g](const Point& p, int order) {
    return riemann_from_christoffel(christoffel_from_metric(g.evaluate(p, order + 2)));
  });
}

TensorField MetricGeometry::ricci() const {
  const TensorField g = g_;
  return TensorField(g.chart(), 0, 2, "Ric", [g](const Point& p, int order) {
    return ricci_from_riemann(riemann_from_christoffel(christoffel_from_metric(g.evaluate(p, order + 2))));
  });
}

TensorField MetricGeometry::ricci_operator() const {
  const TensorField g = g_;
  return TensorField(g.chart(), 1, 1, "Q", [g](const Point& p, int order) {
    const JetTensor g2 = g.evaluate(p, order + 2);
    const JetTensor ginv = inverse_matrix(fields::truncate(g2, order), 2, 0);
    const JetTensor Ric = ricci_from_riemann(riemann_from_christoffel(christoffel_from_metric(g2)));
    const int n = g.dim();
    JetTensor Q = fields::jet_zeros(n, 1, 1, JetSpec{n, order});
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) Q(a, b).add_product(ginv(a, c), Ric(c, b));
      }
    }
    return Q;
  });
}

ScalarField MetricGeometry::scalar_curvature() const {
  const TensorField g = g_;
  return ScalarField(TensorField(g.chart(), 0, 0, "r", [g](const Point& p, int order) {
    const JetTensor g2 = g.evaluate(p, order + 2);
    const JetTensor ginv = inverse_matrix(fields::truncate(g2, order), 2, 0);
    const JetTensor Ric = ricci_from_riemann(riemann_from_christoffel(christoffel_from_metric(g2)));
    const int n = g.dim();
    JetTensor r = fields::jet_zeros(n, 0, 0, JetSpec{n, order});
    for (int a = 0; a < n; ++a) {
      for (int c = 0; c < n; ++c) r[0].add_product(ginv(a, c), Ric(c, a));
    }
    return r;
  }));
}

TensorField MetricGeometry::covariant_derivative(const TensorField& T) const {
  if (!(T.chart() == chart())) throw InvalidArgument("covariant_derivative: field on a different chart");
  const TensorField g = g_;
  const int up = T.up(), down = T.down();
  return TensorField(T.chart(), up, down + 1, "D" + T.name(), [g, T, up, down](const Point& p, int order) {
    const int n = g.dim();
    const JetTensor t1 = T.evaluate(p, order + 1);
    const JetTensor t = fields::truncate(t1, order);
    const JetTensor G = christoffel_from_metric(g.evaluate(p, order + 1));
    std::vector<JetTensor> dt;
    for (int d = 0; d < n; ++d) dt.push_back(fields::differentiate(t1, d));

    JetTensor out = fields::jet_zeros(n, up, down + 1, JetSpec{n, order});
    std::vector<int> idx(static_cast<std::size_t>(up + down + 1));
    std::vector<int> src(static_cast<std::size_t>(up + down));
    for (std::size_t f = 0; f < out.size(); ++f) {
      out.unflatten(f, idx);
      const int d = idx[static_cast<std::size_t>(up)];
      for (int r = 0; r < up; ++r) src[r] = idx[r];
      for (int s = 0; s < down; ++s) src[up + s] = idx[up + 1 + s];
      Jet v = dt[d][t.flat(src)];
      for (int r = 0; r < up; ++r) {
        const int a = src[r];
        for (int c = 0; c < n; ++c) {
          if (is_zero(G(a, d, c))) continue;
          src[r] = c;
          v.add_product(G(a, d, c), t[t.flat(src)]);
        }
        src[r] = a;
      }
      for (int s = 0; s < down; ++s) {
        const int b = src[up + s];
        for (int c = 0; c < n; ++c) {
          if (is_zero(G(c, d, b))) continue;
          src[up + s] = c;
          v.sub_product(G(c, d, b), t[t.flat(src)]);
        }
        src[up + s] = b;
      }
      out[f] = std::move(v);
    }
    return out;
  });
}

TensorField MetricGeometry::gradient(const ScalarField& f) const {
  const TensorField g = g_;
  const TensorField F = f.field();
  return TensorField(g.chart(), 1, 0, "grad " + F.name(), [g, F](const Point& p, int order) {
    const int n = g.dim();
    const Jet f1 = F.evaluate(p, order + 1)[0];
    const JetTensor ginv = inverse_matrix(g.evaluate(p, order), 2, 0);
    JetTensor out = fields::jet_zeros(n, 1, 0, JetSpec{n, order});
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out(i).add_product(ginv(i, j), f1.differentiate(j));
    }
    return out;
  });
}

ScalarField MetricGeometry::divergence(const TensorField& X) const {
  if (X.up() != 1 || X.down() != 0) throw InvalidArgument("divergence expects a vector field");
  const TensorField DX = covariant_derivative(X);
  return ScalarField(fields::combine("div " + X.name(), 0, 0, {DX}, [](std::span<const JetTensor> in) {
    const JetTensor& D = in[0];
    JetTensor out = fields::jet_zeros(D.dim(), 0, 0, D[0].spec());
    for (int i = 0; i < D.dim(); ++i) out[0] += D(i, i);
    return out;
  }));
}

ScalarField MetricGeometry::laplacian(const ScalarField& f) const {
  const ScalarField div = divergence(gradient(f));
  return ScalarField(fields::scaled(div.field(), -1.0, "Laplacian " + f.field().name()));
}

TensorField MetricGeometry::lie_derivative_connection(const TensorField& V) const {
  if (V.up() != 1 || V.down() != 0) throw InvalidArgument("lie_derivative_connection expects a vector field");
  // (∇∇V)(k, i, j) = (∇²_{∂_i,∂_j} V)^k
  const TensorField DDV = covariant_derivative(covariant_derivative(V));
  return fields::combine("L_" + V.name() + " nabla", 1, 2, {DDV, riemann(), V},
                         [](std::span<const JetTensor> in) {
                           const JetTensor& DD = in[0];
                           const JetTensor& R = in[1];
                           const JetTensor& v = in[2];
                           const int n = DD.dim();
                           JetTensor L = DD;
                           for (int k = 0; k < n; ++k) {
                             for (int i = 0; i < n; ++i) {
                               for (int j = 0; j < n; ++j) {
                                 for (int l = 0; l < n; ++l) {
                                   if (is_zero(v(l)) || is_zero(R(k, l, i, j))) continue;
                                   L(k, i, j).add_product(v(l), R(k, l, i, j));
                                 }
                               }
                             }
                           }
                           return L;
                         });
}

TensorField MetricGeometry::lie_derivative_connection_direct(const TensorField& V) const {
  if (V.up() != 1 || V.down() != 0) throw InvalidArgument("lie_derivative_connection expects a vector field");
  if (!(V.chart() == chart())) throw InvalidArgument("vector field on a different chart");
  const TensorField g = g_;
  return TensorField(g.chart(), 1, 2, "L_" + V.name() + " Gamma", [g, V](const Point& p, int order) {
    const int n = g.dim();
    const JetTensor v2 = V.evaluate(p, order + 2);
    const JetTensor G1 = christoffel_from_metric(g.evaluate(p, order + 2));
    const JetTensor G = fields::truncate(G1, order);
    const JetTensor v = fields::truncate(v2, order);
    std::vector<JetTensor> dv, dG;  // dv[a](k) = ∂_a V^k
    std::vector<std::vector<JetTensor>> ddv(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      const JetTensor d1 = fields::differentiate(v2, a);
      dv.push_back(fields::truncate(d1, order));
      dG.push_back(fields::differentiate(G1, a));
      for (int b = 0; b < n; ++b) ddv[a].push_back(fields::differentiate(d1, b));
    }
    JetTensor L = fields::jet_zeros(n, 1, 2, JetSpec{n, order});
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Jet s = ddv[i][j](k);
          for (int l = 0; l < n; ++l) {
            s.add_product(v(l), dG[l](k, i, j));
            s.sub_product(G(l, i, j), dv[l](k));
            s.add_product(G(k, l, j), dv[i](l));
            s.add_product(G(k, i, l), dv[j](l));
          }
          L(k, i, j) = std::move(s);
        }
      }
    }
    return L;
  });
}

double MetricGeometry::sectional_curvature(const Point& p, std::span<const double> X,
                                           std::span<const double> Y) const {
  const int n = dim();
  if (static_cast<int>(X.size()) != n || static_cast<int>(Y.size()) != n) {
    throw InvalidArgument("sectional_curvature: vector length does not match chart dimension");
  }
  const Tensor g = g_.value(p);
  const Tensor R = riemann_at(p);
  auto inner = [&](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s += g(i, j) * a[i] * b[j];
    }
    return s;
  };
  const double xx = inner(X, X), yy = inner(Y, Y), xy = inner(X, Y);
  const double area = xx * yy - xy * xy;
  if (!(area > 1e-14 * xx * yy)) throw InvalidArgument("sectional_curvature: X and Y are linearly dependent");
  double num = 0.0;  // g(R(X,Y)Y, X)
  for (int l = 0; l < n; ++l) {
    double rl = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) rl += R(l, a, b, c) * X[a] * Y[b] * Y[c];
      }
    }
    for (int m = 0; m < n; ++m) num += g(l, m) * rl * X[m];
  }
  return num / area;
}

std::vector<double> symmetric_eigenvalues(const Tensor& m) {
  if (m.rank() != 2) throw InvalidArgument("symmetric_eigenvalues expects a rank-2 tensor");
  const int n = m.dim();
  std::vector<double> a = m.data();
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    }
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (A(p, q) == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[i] = A(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace sasaki::riemann
