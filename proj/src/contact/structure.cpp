#include "sasaki/contact/structure.hpp"

#include <cmath>
#include <sstream>

#include "sasaki/errors.hpp"
#include "sasaki/fields/calculus.hpp"

namespace sasaki::contact {

using fields::JetTensor;
using jets::Jet;

namespace {

void require_rank(const TensorField& f, int up, int down, const char* what) {
  if (f.up() != up || f.down() != down) {
    std::ostringstream m;
    m << what << " must have rank (" << up << "," << down << "), got (" << f.up() << "," << f.down() << ")";
    throw InvalidArgument(m.str());
  }
}

std::string fmt(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

}  // namespace

ContactStructure::ContactStructure(int n, TensorField eta, TensorField xi, TensorField phi, TensorField g,
                                   std::string name)
    : n_(n), eta_(std::move(eta)), xi_(std::move(xi)), phi_(std::move(phi)), g_(std::move(g)), name_(std::move(name)) {
  if (n < 1) throw InvalidArgument("contact structures need n >= 1");
  require_rank(eta_, 0, 1, "eta");
  require_rank(xi_, 1, 0, "xi");
  require_rank(phi_, 1, 1, "phi");
  require_rank(g_, 0, 2, "g");
  for (const TensorField* f : {&eta_, &xi_, &phi_}) {
    if (!(f->chart() == g_.chart())) throw InvalidArgument("structure tensors live on different charts");
  }
  if (g_.dim() != 2 * n + 1) {
    throw InvalidArgument("chart dimension " + std::to_string(g_.dim()) + " is not 2n+1 = " +
                          std::to_string(2 * n + 1));
  }
}

SuiteReport verify_axioms(const ContactStructure& s, std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "axioms";
  const int d = s.dim();
  const TensorField deta = fields::exterior_derivative(s.eta());

  const ResidualStats pd = margin_over(points, [&](const Point& p) {
    return riemann::symmetric_eigenvalues(s.g().value(p)).front();
  });
  rep.add(make_check("metric-positive-definite", "metric-positive-definite", pd, 0.0, Sense::above));

  rep.add(make_check("eta-of-xi", "reeb-normalization", residual_over(points, [&](const Point& p) {
                       const Tensor e = s.eta().value(p), x = s.xi().value(p);
                       double v = 0.0;
                       for (int i = 0; i < d; ++i) v += e(i) * x(i);
                       return std::abs(v - 1.0);
                     }),
                     tolerance));
  rep.add(make_check("xi-in-kernel-of-d-eta", "reeb-kernel", residual_over(points, [&](const Point& p) {
                       const Tensor w = deta.value(p), x = s.xi().value(p);
                       double m = 0.0;
                       for (int j = 0; j < d; ++j) {
                         double v = 0.0;
                         for (int i = 0; i < d; ++i) v += x(i) * w(i, j);
                         m = std::max(m, std::abs(v));
                       }
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("phi-squared", "phi-squared", residual_over(points, [&](const Point& p) {
                       const Tensor f = s.phi().value(p), e = s.eta().value(p), x = s.xi().value(p);
                       const Tensor f2 = fields::compose(f, f);
                       double m = 0.0;
                       for (int a = 0; a < d; ++a)
                         for (int b = 0; b < d; ++b) {
                           const double want = (a == b ? -1.0 : 0.0) + x(a) * e(b);
                           m = std::max(m, std::abs(f2(a, b) - want));
                         }
                       return m;
                     }),
                     tolerance));
  rep.add(make_check("d-eta-compatible", "associated-metric", residual_over(points, [&](const Point& p) {
                       const Tensor w = deta.value(p);
                       const Tensor gphi = fields::lower(s.g().value(p), s.phi().value(p));
                       return fields::max_abs_diff(w, gphi);
                     }),
                     tolerance));
  rep.add(make_check("eta-metric-dual", "eta-metric-dual", residual_over(points, [&](const Point& p) {
                       const Tensor e = s.eta().value(p);
                       const Tensor gx = fields::lower(s.g().value(p), s.xi().value(p));
                       return fields::max_abs_diff(e, gx);
                     }),
                     tolerance));
  rep.add(make_check("contact-volume-form", "contact-volume-form",
                     margin_over(points, [&](const Point& p) {
                       return std::abs(fields::volume_form_coefficient(s.eta(), s.n(), p));
                     }),
                     tolerance, Sense::above));
  return rep;
}

TensorField h_field(const ContactStructure& s) {
  return fields::scaled(riemann::lie_derivative(s.xi(), s.phi()), 0.5, "h");
}

TensorField l_field(const ContactStructure& s) {
  return fields::combine("l", 1, 1, {s.geometry().riemann(), s.xi()}, [](std::span<const JetTensor> in) {
    const JetTensor& R = in[0];
    const JetTensor& x = in[1];
    const int n = R.dim();
    JetTensor l = fields::jet_zeros(n, 1, 1, R[0].spec());
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Jet xj = x(j);
          for (int k = 0; k < n; ++k) l(a, i).add_product(R(a, i, j, k), xj * x(k));
        }
    return l;
  });
}

Tensor compute_h(const ContactStructure& s, const Point& p) { return h_field(s).value(p); }
Tensor compute_l(const ContactStructure& s, const Point& p) { return l_field(s).value(p); }

namespace {

ScalarField ricci_xi_xi(const ContactStructure& s) {
  return ScalarField(fields::combine("Ric(xi,xi)", 0, 0, {s.geometry().ricci(), s.xi()},
                                     [](std::span<const JetTensor> in) {
                                       const JetTensor& Ric = in[0];
                                       const JetTensor& x = in[1];
                                       const int n = Ric.dim();
                                       JetTensor out = fields::jet_zeros(n, 0, 0, Ric[0].spec());
                                       for (int i = 0; i < n; ++i)
                                         for (int j = 0; j < n; ++j) out[0].add_product(Ric(i, j), x(i) * x(j));
                                       return out;
                                     }));
}

}  // namespace

ScalarField eta_einstein_alpha(const ContactStructure& s) {
  const int n = s.n();
  return ScalarField(fields::combine("alpha", 0, 0, {s.geometry().scalar_curvature().field(), ricci_xi_xi(s).field()},
                                     [n](std::span<const JetTensor> in) {
                                       JetTensor a = in[0];
                                       a[0] -= in[1][0];
                                       a[0] *= 1.0 / (2.0 * n);
                                       return a;
                                     }));
}

ScalarField eta_einstein_beta(const ContactStructure& s) {
  return ScalarField(fields::combine("beta", 0, 0, {ricci_xi_xi(s).field(), eta_einstein_alpha(s).field()},
                                     [](std::span<const JetTensor> in) {
                                       JetTensor b = in[0];
                                       b[0] -= in[1][0];
                                       return b;
                                     }));
}

ContactStructure d_homothetic_deform(const ContactStructure& s, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw InvalidArgument("D-homothetic deformation needs a > 0, got " + fmt(a));
  }
  const TensorField eta = fields::scaled(s.eta(), a, "eta");
  const TensorField xi = fields::scaled(s.xi(), 1.0 / a, "xi");
  const TensorField g = fields::combine("g", 0, 2, {s.g(), s.eta()}, [a](std::span<const JetTensor> in) {
    const JetTensor& g0 = in[0];
    const JetTensor& e = in[1];
    const int n = g0.dim();
    JetTensor out = g0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        out(i, j) *= a;
        out(i, j).add_scaled(a * (a - 1.0), e(i) * e(j));
      }
    return out;
  });
  return ContactStructure(s.n(), eta, xi, s.phi(), g, s.name() + " deformed a=" + fmt(a));
}

std::pair<double, double> deformed_eta_einstein(double alpha, int n, double a) {
  if (!(a > 0.0)) throw InvalidArgument("D-homothetic deformation needs a > 0, got " + fmt(a));
  const double ab = (alpha + 2.0 - 2.0 * a) / a;
  return {ab, 2.0 * n - ab};
}

std::optional<std::vector<double>> project_to_contact(const ContactStructure& s, const Point& p,
                                                      std::span<const double> v) {
  const int d = s.dim();
  if (static_cast<int>(v.size()) != d) throw InvalidArgument("vector length does not match chart dimension");
  const Tensor e = s.eta().value(p), x = s.xi().value(p), g = s.g().value(p);
  double ev = 0.0;
  for (int i = 0; i < d; ++i) ev += e(i) * v[i];
  std::vector<double> w(v.begin(), v.end());
  for (int i = 0; i < d; ++i) w[i] -= ev * x(i);
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) norm2 += g(i, j) * w[i] * w[j];
  const double norm = std::sqrt(std::max(norm2, 0.0));
  if (!(norm >= 1e-6)) return std::nullopt;
  for (double& c : w) c /= norm;
  return w;
}

double tanaka_webster_scalar(const ContactStructure& s, const Point& p) {
  return s.geometry().scalar_curvature_at(p) - ricci_xi_xi(s).value(p) + 4.0 * s.n();
}

double sasakian_residual_at(const ContactStructure& s, const Point& p) {
  const int d = s.dim();
  const Tensor Dphi = s.geometry().covariant_derivative(s.phi()).value(p);  // (a, x, b) = ((∇_x φ) ∂_b)^a
  const Tensor g = s.g().value(p), e = s.eta().value(p), xi = s.xi().value(p);
  double m = 0.0;
  for (int a = 0; a < d; ++a)
    for (int x = 0; x < d; ++x)
      for (int b = 0; b < d; ++b) {
        const double want = g(x, b) * xi(a) - e(b) * (a == x ? 1.0 : 0.0);
        m = std::max(m, std::abs(Dphi(a, x, b) - want));
      }
  return m;
}

double killing_residual_at(const ContactStructure& s, const Point& p) {
  return fields::max_abs(riemann::lie_derivative(s.xi(), s.g()).value(p));
}

}  // namespace sasaki::contact
