#include <cmath>
#include <random>
#include <sstream>

#include "sasaki/contact/structure.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/parallel.hpp"

namespace sasaki::contact {

namespace {

using fields::compose;
using fields::lower;
using fields::max_abs_diff;

double asym(const Tensor& t) {
  double m = 0.0;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) m = std::max(m, std::abs(t(i, j) - t(j, i)));
  return m;
}

Tensor axpy(const Tensor& a, double s, const Tensor& b) {
  Tensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

ResidualStats column(const std::vector<std::vector<double>>& rows, std::size_t c) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r[c]);
  return stats_of(v);
}

struct Spec {
  const char* name;
  const char* tag;
};

// names/tags of the contact metric identities, in evaluation order
constexpr Spec kContactIdentities[] = {
    {"reeb-derivative", "reeb-derivative"},
    {"jacobi-operator-phi", "jacobi-operator-phi"},
    {"h-along-reeb", "h-along-reeb"},
    {"trace-l-ricci", "jacobi-trace-ricci"},
    {"ricci-reeb-h", "ricci-reeb-h-trace"},
    {"h-trace-free", "h-trace-free"},
    {"h-phi-trace-free", "h-phi-trace-free"},
    {"h-phi-anticommute", "h-phi-anticommute"},
    {"h-self-adjoint", "h-self-adjoint"},
    {"l-self-adjoint", "l-self-adjoint"},
    {"phi-xi-zero", "phi-annihilates-reeb"},
    {"eta-phi-zero", "eta-phi-zero"},
    {"div-phi", "phi-divergence"},
};

constexpr Spec kSasakianIdentities[] = {
    {"sasakian-curvature-reeb", "sasakian-curvature-reeb"},
    {"ricci-reeb-eigenvector", "ricci-reeb-eigenvector"},
    {"ricci-phi-commute", "ricci-phi-commute"},
    {"ricci-parallel-along-reeb", "ricci-parallel-along-reeb"},
    {"ricci-derivative-reeb", "ricci-derivative-reeb"},
    {"jacobi-operator-sasakian", "jacobi-operator-sasakian"},
};

constexpr std::size_t kNumContact = std::size(kContactIdentities);
constexpr std::size_t kNumSasakian = std::size(kSasakianIdentities);

std::string failed_names(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.applicable && !c.pass) out += (out.empty() ? "" : ", ") + c.name;
  }
  return out;
}

}  // namespace

SuiteReport identity_suite(const ContactStructure& s, std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "identities";
  const SuiteReport axioms = verify_axioms(s, points, tolerance);
  rep.append_preconditions(axioms);
  if (!axioms.pass()) {
    const std::string why = "not a contact metric structure (failed: " + failed_names(axioms) + ")";
    for (const auto& c : kContactIdentities) rep.add(not_applicable(c.name, c.tag, why));
    for (const auto& c : kSasakianIdentities) rep.add(not_applicable(c.name, c.tag, why));
    return rep;
  }

  const int d = s.dim();
  const double n2 = 2.0 * s.n();
  const riemann::MetricGeometry geom = s.geometry();
  const TensorField hF = h_field(s), lF = l_field(s);
  const TensorField DxiF = geom.covariant_derivative(s.xi());
  const TensorField DhF = geom.covariant_derivative(hF);
  const TensorField DphiF = geom.covariant_derivative(s.phi());
  const TensorField RicF = geom.ricci(), QF = geom.ricci_operator(), RF = geom.riemann();
  const TensorField DQF = geom.covariant_derivative(QF);
  const TensorField LxigF = riemann::lie_derivative(s.xi(), s.g());

  // columns: contact identities, Sasakian identities, then the two Sasakian gates
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor g = s.g().value(p), eta = s.eta().value(p), xi = s.xi().value(p), phi = s.phi().value(p);
    const Tensor h = hF.value(p), l = lF.value(p), Ric = RicF.value(p), Q = QF.value(p);
    const Tensor Dxi = DxiF.value(p), Dh = DhF.value(p), Dphi = DphiF.value(p);
    const Tensor I = fields::identity(d);
    const Tensor phih = compose(phi, h), hphi = compose(h, phi), h2 = compose(h, h), phi2 = compose(phi, phi);
    double ricxx = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) ricxx += Ric(i, j) * xi(i) * xi(j);

    std::vector<double> r;
    r.reserve(kNumContact + kNumSasakian + 2);
    // ∇_X ξ = −φX − φhX
    r.push_back(max_abs_diff(Dxi, axpy(axpy(fields::zeros(d, 1, 1), -1.0, phi), -1.0, phih)));
    // l − φlφ = −2(h² + φ²)
    r.push_back(max_abs_diff(axpy(l, -1.0, compose(compose(phi, l), phi)), axpy(axpy(fields::zeros(d, 1, 1), -2.0, h2), -2.0, phi2)));
    // ∇_ξ h = φ − φl − φh²
    {
      Tensor Dxih = fields::zeros(d, 1, 1);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int x = 0; x < d; ++x) Dxih(a, b) += xi(x) * Dh(a, x, b);
      const Tensor rhs = axpy(axpy(phi, -1.0, compose(phi, l)), -1.0, compose(phi, h2));
      r.push_back(max_abs_diff(Dxih, rhs));
    }
    r.push_back(std::abs(fields::trace(l) - ricxx));
    r.push_back(std::abs(ricxx - (n2 - fields::trace(h2))));
    r.push_back(std::abs(fields::trace(h)));
    r.push_back(std::abs(fields::trace(hphi)));
    r.push_back(fields::max_abs(axpy(hphi, 1.0, phih)));
    r.push_back(asym(lower(g, h)));
    r.push_back(asym(lower(g, l)));
    {
      double m1 = 0.0, m2 = 0.0;
      for (int a = 0; a < d; ++a) {
        double phixi = 0.0, etaphi = 0.0;
        for (int b = 0; b < d; ++b) {
          phixi += phi(a, b) * xi(b);
          etaphi += eta(b) * phi(b, a);
        }
        m1 = std::max(m1, std::abs(phixi));
        m2 = std::max(m2, std::abs(etaphi));
      }
      r.push_back(m1);
      r.push_back(m2);
    }
    {
      double m = 0.0;
      for (int b = 0; b < d; ++b) {
        double div = 0.0;
        for (int a = 0; a < d; ++a) div += Dphi(a, a, b);
        m = std::max(m, std::abs(div + n2 * eta(b)));
      }
      r.push_back(m);
    }

    // Sasakian curvature identities
    const Tensor R = RF.value(p), DQ = DQF.value(p);
    {
      double m = 0.0;  // R(X,Y)ξ = η(Y)X − η(X)Y
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            double v = 0.0;
            for (int k = 0; k < d; ++k) v += R(a, i, j, k) * xi(k);
            const double want = eta(j) * (a == i ? 1.0 : 0.0) - eta(i) * (a == j ? 1.0 : 0.0);
            m = std::max(m, std::abs(v - want));
          }
      r.push_back(m);
    }
    {
      double m = 0.0;  // Qξ = 2nξ
      for (int a = 0; a < d; ++a) {
        double v = 0.0;
        for (int b = 0; b < d; ++b) v += Q(a, b) * xi(b);
        m = std::max(m, std::abs(v - n2 * xi(a)));
      }
      r.push_back(m);
    }
    r.push_back(max_abs_diff(compose(Q, phi), compose(phi, Q)));
    {
      double m1 = 0.0, m2 = 0.0;
      const Tensor Qphi = compose(Q, phi);
      for (int a = 0; a < d; ++a)
        for (int x = 0; x < d; ++x) {
          double along = 0.0, onxi = 0.0;  // (∇_ξ Q)^a_x and ((∇_x Q)ξ)^a
          for (int c = 0; c < d; ++c) {
            along += xi(c) * DQ(a, c, x);
            onxi += DQ(a, x, c) * xi(c);
          }
          m1 = std::max(m1, std::abs(along));
          m2 = std::max(m2, std::abs(onxi - (Qphi(a, x) - n2 * phi(a, x))));
        }
      r.push_back(m1);
      r.push_back(m2);
    }
    {
      Tensor want = I;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) want(a, b) -= xi(a) * eta(b);
      r.push_back(max_abs_diff(l, want));
    }

    // gates
    double sas = 0.0;
    for (int a = 0; a < d; ++a)
      for (int x = 0; x < d; ++x)
        for (int b = 0; b < d; ++b) {
          const double want = g(x, b) * xi(a) - eta(b) * (a == x ? 1.0 : 0.0);
          sas = std::max(sas, std::abs(Dphi(a, x, b) - want));
        }
    r.push_back(sas);
    r.push_back(fields::max_abs(LxigF.value(p)));
    return r;
  });

  for (std::size_t c = 0; c < kNumContact; ++c) {
    rep.add(make_check(kContactIdentities[c].name, kContactIdentities[c].tag, column(rows, c), tolerance));
  }
  const ResidualStats sas = column(rows, kNumContact + kNumSasakian);
  const ResidualStats kill = column(rows, kNumContact + kNumSasakian + 1);
  const bool sasakian = sas.max <= tolerance && kill.max <= tolerance;
  for (std::size_t c = 0; c < kNumSasakian; ++c) {
    const auto& sp = kSasakianIdentities[c];
    if (sasakian) {
      rep.add(make_check(sp.name, sp.tag, column(rows, kNumContact + c), tolerance));
    } else {
      std::ostringstream why;
      why << "structure is not Sasakian on the sample (phi-derivative residual " << sas.max
          << ", Killing residual " << kill.max << ")";
      rep.add(not_applicable(sp.name, sp.tag, why.str()));
    }
  }
  return rep;
}

StructureClass classify(const ContactStructure& s, std::span<const Point> points, double tolerance) {
  StructureClass out;
  out.report.suite = "classify";
  const SuiteReport axioms = verify_axioms(s, points, tolerance);
  out.report.append_preconditions(axioms);
  if (!axioms.pass()) {
    out.refused = true;
    out.reason = "axioms fail: " + failed_names(axioms);
    out.report.notes.push_back("classification refused: " + out.reason);
    return out;
  }
  out.contact_metric = true;

  const int d = s.dim();
  const double n2 = 2.0 * s.n();
  const riemann::MetricGeometry geom = s.geometry();
  const TensorField RicF = geom.ricci();
  const ScalarField rF = geom.scalar_curvature();
  const TensorField DphiF = geom.covariant_derivative(s.phi());
  const TensorField LxigF = riemann::lie_derivative(s.xi(), s.g());

  struct Row {
    double killing, sasakian, alpha, beta, fit;
  };
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor g = s.g().value(p), eta = s.eta().value(p), xi = s.xi().value(p);
    const Tensor Ric = RicF.value(p), Dphi = DphiF.value(p);
    Row r{};
    r.killing = fields::max_abs(LxigF.value(p));
    for (int a = 0; a < d; ++a)
      for (int x = 0; x < d; ++x)
        for (int b = 0; b < d; ++b) {
          const double want = g(x, b) * xi(a) - eta(b) * (a == x ? 1.0 : 0.0);
          r.sasakian = std::max(r.sasakian, std::abs(Dphi(a, x, b) - want));
        }
    double ricxx = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) ricxx += Ric(i, j) * xi(i) * xi(j);
    r.alpha = (rF.value(p) - ricxx) / n2;
    r.beta = ricxx - r.alpha;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        r.fit = std::max(r.fit, std::abs(Ric(i, j) - r.alpha * g(i, j) - r.beta * eta(i) * eta(j)));
      }
    return r;
  });

  double alpha_sum = 0.0, beta_sum = 0.0, alpha_fixed = 0.0, beta_zero = 0.0, beta_null = 0.0;
  for (const Row& r : rows) {
    out.killing_residual = std::max(out.killing_residual, r.killing);
    out.sasakian_residual = std::max(out.sasakian_residual, r.sasakian);
    out.eta_einstein_residual = std::max(out.eta_einstein_residual, r.fit);
    alpha_sum += r.alpha;
    beta_sum += r.beta;
    alpha_fixed = std::max(alpha_fixed, std::abs(r.alpha + 2.0));
    beta_zero = std::max(beta_zero, std::abs(r.beta));
    beta_null = std::max(beta_null, std::abs(r.beta - (n2 + 2.0)));
  }
  const double count = rows.empty() ? 1.0 : static_cast<double>(rows.size());
  out.alpha = alpha_sum / count;
  out.beta = beta_sum / count;
  for (const Row& r : rows) {
    out.alpha_spread = std::max(out.alpha_spread, std::abs(r.alpha - out.alpha));
    out.beta_spread = std::max(out.beta_spread, std::abs(r.beta - out.beta));
  }

  out.k_contact = out.killing_residual <= tolerance;
  out.sasakian = out.k_contact && out.sasakian_residual <= tolerance;
  out.eta_einstein = out.eta_einstein_residual <= tolerance;
  out.einstein = out.eta_einstein && beta_zero <= tolerance;
  out.d_homothetically_fixed = out.eta_einstein && alpha_fixed <= tolerance;
  out.null_eta_einstein = out.d_homothetically_fixed && beta_null <= tolerance;

  out.report.constants.push_back({"alpha", out.alpha, out.alpha_spread});
  out.report.constants.push_back({"beta", out.beta, out.beta_spread});
  std::ostringstream flags;
  flags << "flags:";
  if (out.contact_metric) flags << " contact-metric";
  if (out.k_contact) flags << " K-contact";
  if (out.sasakian) flags << " Sasakian";
  if (out.eta_einstein) flags << " eta-Einstein";
  if (out.einstein) flags << " Einstein";
  if (out.d_homothetically_fixed) flags << " D-homothetically-fixed";
  if (out.null_eta_einstein) flags << " null-eta-Einstein";
  out.report.notes.push_back(flags.str());
  std::ostringstream res;
  res << "residuals: killing " << out.killing_residual << ", phi-derivative " << out.sasakian_residual
      << ", eta-Einstein fit " << out.eta_einstein_residual;
  out.report.notes.push_back(res.str());
  return out;
}

SuiteReport transverse_ricci_check(const ContactStructure& s, std::span<const Point> points, double tolerance,
                                   std::uint64_t seed) {
  const auto gates = parallel_map(points.size(), [&](std::size_t i) {
    return std::max(sasakian_residual_at(s, points[i]), killing_residual_at(s, points[i]));
  });
  for (double gv : gates) {
    if (!(gv <= tolerance)) {
      std::ostringstream m;
      m << "transverse Ricci check needs a Sasakian structure; residual " << gv << " exceeds " << tolerance;
      throw PreconditionError(m.str());
    }
  }
  SuiteReport rep;
  rep.suite = "transverse-ricci";
  const int d = s.dim();
  const TensorField RicF = s.geometry().ricci();
  constexpr int kPairs = 4;
  struct Row {
    double residual = 0.0, eta_leak = 0.0;
    int rejected = 0;
  };
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    std::seed_seq sq{seed, static_cast<std::uint64_t>(pi)};
    std::mt19937_64 rng(sq);
    std::normal_distribution<double> normal;
    const Tensor Ric = RicF.value(p), g = s.g().value(p), eta = s.eta().value(p);
    Row row;
    for (int k = 0; k < kPairs; ++k) {
      std::vector<double> u(static_cast<std::size_t>(d)), v(static_cast<std::size_t>(d));
      for (auto& c : u) c = normal(rng);
      for (auto& c : v) c = normal(rng);
      const auto X = project_to_contact(s, p, u);
      const auto Y = project_to_contact(s, p, v);
      if (!X || !Y) {
        ++row.rejected;
        continue;
      }
      double val = 0.0, ex = 0.0, ey = 0.0;
      for (int i = 0; i < d; ++i) {
        ex += eta(i) * (*X)[i];
        ey += eta(i) * (*Y)[i];
        for (int j = 0; j < d; ++j) val += (Ric(i, j) + 2.0 * g(i, j)) * (*X)[i] * (*Y)[j];
      }
      row.residual = std::max(row.residual, std::abs(val));
      row.eta_leak = std::max({row.eta_leak, std::abs(ex), std::abs(ey)});
    }
    return row;
  });
  std::vector<double> res, leak;
  int rejected = 0;
  for (const Row& r : rows) {
    res.push_back(r.residual);
    leak.push_back(r.eta_leak);
    rejected += r.rejected;
  }
  rep.add(make_check("contact-projection", "contact-projection", stats_of(leak), tolerance));
  rep.add(make_check("transverse-ricci-flat", "transverse-ricci", stats_of(res), tolerance));
  if (rejected > 0) rep.notes.push_back(std::to_string(rejected) + " sample pairs rejected (projection near zero)");
  return rep;
}

}  // namespace sasaki::contact
