#include <cmath>
#include <sstream>

#include "sasaki/errors.hpp"
#include "sasaki/parallel.hpp"
#include "sasaki/soliton/soliton.hpp"

namespace sasaki::soliton {

using fields::compose;
using fields::ScalarField;

namespace {

struct Spec {
  const char* name;
  const char* tag;
};

ResidualStats column(const std::vector<std::vector<double>>& rows, std::size_t c) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r[c]);
  return stats_of(v);
}

std::vector<double> column_values(const std::vector<std::vector<double>>& rows, std::size_t c) {
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r[c]);
  return v;
}

FittedConstant fitted(std::string name, const std::vector<double>& values) {
  FittedConstant f{std::move(name), 0.0, 0.0};
  if (values.empty()) return f;
  for (double v : values) f.value += v;
  f.value /= static_cast<double>(values.size());
  for (double v : values) f.spread = std::max(f.spread, std::abs(v - f.value));
  return f;
}

std::string failed_names(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.applicable && !c.pass) out += (out.empty() ? "" : ", ") + c.name;
  }
  return out;
}

// max_ij |a(i,j) − b(i,j)| for (0,2) tensors given as a lambda on the right
template <class F>
double diff2(const Tensor& a, F&& want) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - want(i, j)));
  return m;
}

double g_norm_of_endomorphism(const Tensor& h) {
  // h is g-self-adjoint for contact metric structures, so tr(h²) = |h|²
  return std::sqrt(std::abs(fields::trace(compose(h, h))));
}

constexpr Spec kTheorem1[] = {
    {"lie-connection-reeb", "lie-connection-reeb"},
    {"lie-curvature-reeb", "lie-curvature-reeb"},
    {"lie-eta-reeb-relation", "lie-eta-reeb-relation"},
    {"eta-lie-reeb", "eta-lie-reeb"},
    {"ricci-eta-einstein-form", "soliton-eta-einstein-ricci"},
    {"scalar-from-lambda", "scalar-from-lambda"},
    {"lambda-value", "soliton-lambda"},
    {"scalar-value", "scalar-curvature-value"},
    {"null-eta-einstein-ricci", "null-eta-einstein-ricci"},
    {"lie-connection-closed-form", "lie-connection-closed-form"},
    {"lie-ricci", "lie-ricci"},
    {"lie-ricci-from-eta", "lie-ricci-from-eta"},
    {"lie-metric", "lie-metric"},
    {"lie-eta", "lie-eta"},
    {"lie-reeb", "lie-reeb"},
    {"lie-phi-invariant", "lie-phi-invariant"},
    {"tanaka-webster-scalar", "tanaka-webster-scalar"},
    {"eta-einstein", "eta-einstein"},
    {"alpha-fixed", "d-homothetically-fixed"},
    {"beta-null", "null-eta-einstein"},
};
constexpr std::size_t kNumTheorem1 = std::size(kTheorem1);
// the two separation checks follow the identities
constexpr Spec kExpanding{"expanding", "soliton-expanding"};
constexpr Spec kNonTrivial{"non-trivial", "soliton-nontrivial"};

}  // namespace

SuiteReport theorem1_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                           double tolerance) {
  SuiteReport rep;
  rep.suite = "theorem1";
  const SuiteReport axioms = contact::verify_axioms(s, points, tolerance);
  rep.append_preconditions(axioms);
  std::string why;
  if (!axioms.pass()) why = "not a contact metric structure (failed: " + failed_names(axioms) + ")";

  if (why.empty()) {
    rep.add(make_check("sasakian-structure", "sasakian-structure", residual_over(points, [&](const Point& p) {
                         return std::max(contact::sasakian_residual_at(s, p), contact::killing_residual_at(s, p));
                       }),
                       tolerance));
    rep.checks.back().precondition = true;
    if (!rep.checks.back().pass) why = "structure is not Sasakian on the sample";
  }
  double lambda = 0.0;
  if (why.empty()) {
    const SolitonReport sol = analyze_soliton(s, SolitonData{V, std::nullopt}, points, tolerance);
    rep.append_preconditions(sol.report);
    lambda = sol.lambda;
    if (sol.kind == SolitonKind::not_a_soliton) why = "V does not generate a Ricci soliton on the sample";
  }
  if (!why.empty()) {
    for (const auto& c : kTheorem1) rep.add(not_applicable(c.name, c.tag, why));
    rep.add(not_applicable(kExpanding.name, kExpanding.tag, why));
    rep.add(not_applicable(kNonTrivial.name, kNonTrivial.tag, why));
    rep.notes.push_back("conclusions skipped: " + why);
    return rep;
  }

  const int d = s.dim();
  const int n = s.n();
  const double k = 4.0 * (n + 1);
  const riemann::MetricGeometry geom = s.geometry();
  const TensorField RicF = geom.ricci(), QF = geom.ricci_operator(), RF = geom.riemann();
  const TensorField ginvF = geom.inverse_metric();
  const ScalarField rF = geom.scalar_curvature();
  const TensorField LconnF = geom.lie_derivative_connection(V);
  const TensorField LRF = riemann::lie_derivative(V, RF);
  const TensorField LRicF = riemann::lie_derivative(V, RicF);
  const TensorField LgF = riemann::lie_derivative(V, s.g());
  const TensorField LetaF = riemann::lie_derivative(V, s.eta());
  const TensorField LxiF = riemann::lie_derivative(V, s.xi());
  const TensorField LphiF = riemann::lie_derivative(V, s.phi());

  // identity residuals, then pointwise λ, α, β, traceless Ricci, r, W
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor g = s.g().value(p), eta = s.eta().value(p), xi = s.xi().value(p), phi = s.phi().value(p);
    const Tensor Ric = RicF.value(p), Q = QF.value(p), ginv = ginvF.value(p);
    const Tensor L = LconnF.value(p), LR = LRF.value(p), LRic = LRicF.value(p), Lg = LgF.value(p);
    const Tensor Leta = LetaF.value(p), Lxi = LxiF.value(p), Lphi = LphiF.value(p);
    const double r = rF.value(p);
    double lg_trace = 0.0, ric_xx = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        lg_trace += ginv(i, j) * Lg(i, j);
        ric_xx += Ric(i, j) * xi(i) * xi(j);
      }
    const double lambda_p = -(0.5 * lg_trace + r) / d;
    const double alpha = (r - ric_xx) / (2.0 * n), beta = ric_xx - alpha;
    auto ee = [&](int i, int j) { return eta(i) * eta(j); };
    auto delta = [](int i, int j) { return i == j ? 1.0 : 0.0; };

    std::vector<double> out;
    out.reserve(kNumTheorem1 + 3);
    {
      // (£_V∇)(X, ξ) = −2QφX + 4nφX
      const Tensor Qphi = compose(Q, phi);
      double m = 0.0;
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i) {
          double v = 0.0;
          for (int j = 0; j < d; ++j) v += L(a, i, j) * xi(j);
          m = std::max(m, std::abs(v - (-2.0 * Qphi(a, i) + 4.0 * n * phi(a, i))));
        }
      out.push_back(m);
    }
    {
      // (£_V R)(X, ξ)ξ = 4(QX − 2nX)
      double m = 0.0;
      for (int l = 0; l < d; ++l)
        for (int i = 0; i < d; ++i) {
          double v = 0.0;
          for (int j = 0; j < d; ++j)
            for (int c = 0; c < d; ++c) v += LR(l, i, j, c) * xi(j) * xi(c);
          m = std::max(m, std::abs(v - 4.0 * (Q(l, i) - 2.0 * n * delta(l, i))));
        }
      out.push_back(m);
    }
    {
      double m = 0.0, eta_lxi = 0.0;
      for (int i = 0; i < d; ++i) {
        double glxi = 0.0;
        for (int a = 0; a < d; ++a) glxi += g(i, a) * Lxi(a);
        m = std::max(m, std::abs(Leta(i) - glxi + 2.0 * (lambda + 2.0 * n) * eta(i)));
        eta_lxi += eta(i) * Lxi(i);
      }
      out.push_back(m);
      out.push_back(std::abs(eta_lxi - (2.0 * n + lambda)));
    }
    out.push_back(diff2(Ric, [&](int i, int j) { return (n - lambda / 2) * g(i, j) + (n + lambda / 2) * ee(i, j); }));
    out.push_back(std::abs(r - (2.0 * n * (n + 1) - n * lambda)));
    out.push_back(std::abs(lambda_p - (2.0 * n + 4.0)));
    out.push_back(std::abs(r + 2.0 * n));
    out.push_back(diff2(Ric, [&](int i, int j) { return -2.0 * g(i, j) + 2.0 * (n + 1) * ee(i, j); }));
    {
      // (£_V∇)(Y, Z) = 4(n+1){η(Y)φZ + η(Z)φY}
      double m = 0.0;
      for (int a = 0; a < d; ++a)
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            m = std::max(m, std::abs(L(a, i, j) - k * (eta(i) * phi(a, j) + eta(j) * phi(a, i))));
          }
      out.push_back(m);
    }
    out.push_back(diff2(LRic, [&](int i, int j) { return 2.0 * k * (g(i, j) - (2.0 * n + 1) * ee(i, j)); }));
    out.push_back(diff2(LRic, [&](int i, int j) {
      return 2.0 * k * (g(i, j) + ee(i, j)) + 2.0 * (n + 1) * (eta(j) * Leta(i) + eta(i) * Leta(j));
    }));
    out.push_back(diff2(Lg, [&](int i, int j) { return -k * (g(i, j) + ee(i, j)); }));
    {
      double me = 0.0, mx = 0.0;
      for (int i = 0; i < d; ++i) {
        me = std::max(me, std::abs(Leta(i) + k * eta(i)));
        mx = std::max(mx, std::abs(Lxi(i) - k * xi(i)));
      }
      out.push_back(me);
      out.push_back(mx);
    }
    out.push_back(fields::max_abs(Lphi));
    out.push_back(std::abs(r - ric_xx + 4.0 * n));
    out.push_back(diff2(Ric, [&](int i, int j) { return alpha * g(i, j) + beta * ee(i, j); }));
    out.push_back(std::abs(alpha + 2.0));
    out.push_back(std::abs(beta - 2.0 * (n + 1)));
    // separations and constants
    double traceless = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) traceless = std::max(traceless, std::abs(Ric(i, j) - r / d * g(i, j)));
    out.push_back(lambda_p);
    out.push_back(traceless);
    out.push_back(alpha);
    out.push_back(beta);
    out.push_back(r);
    out.push_back(r - ric_xx + 4.0 * n);
    return out;
  });

  for (std::size_t c = 0; c < kNumTheorem1; ++c) {
    rep.add(make_check(kTheorem1[c].name, kTheorem1[c].tag, column(rows, c), tolerance));
  }
  const std::size_t base = kNumTheorem1;
  rep.add(make_check(kExpanding.name, kExpanding.tag, margin_of(column_values(rows, base)), tolerance, Sense::above));
  rep.add(make_check(kNonTrivial.name, kNonTrivial.tag, margin_of(column_values(rows, base + 1)), tolerance,
                     Sense::above));
  rep.constants.push_back(fitted("alpha", column_values(rows, base + 2)));
  rep.constants.push_back(fitted("beta", column_values(rows, base + 3)));
  rep.constants.push_back(fitted("r", column_values(rows, base + 4)));
  rep.constants.push_back(fitted("W", column_values(rows, base + 5)));
  return rep;
}

Lemma1Report lemma1_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                          double tolerance) {
  static constexpr Spec kConclusions[] = {
      {"c-constant", "lemma-constant"},
      {"lie-eta-proportional", "lemma-lie-eta"},
      {"lie-reeb-proportional", "lemma-lie-reeb"},
      {"lie-metric-proportional", "lemma-lie-metric"},
      {"lie-metric-reeb", "lemma-lie-metric-reeb"},
      {"lie-metric-phi", "lemma-lie-metric-phi"},
  };
  Lemma1Report out;
  SuiteReport& rep = out.report;
  rep.suite = "lemma1";
  const SuiteReport axioms = contact::verify_axioms(s, points, tolerance);
  rep.append_preconditions(axioms);
  std::string why;
  if (!axioms.pass()) why = "not a contact metric structure (failed: " + failed_names(axioms) + ")";

  const TensorField LphiF = riemann::lie_derivative(V, s.phi());
  if (why.empty()) {
    rep.add(make_check("lie-phi-invariant", "lie-phi-invariant",
                       residual_over(points, [&](const Point& p) { return fields::max_abs(LphiF.value(p)); }),
                       tolerance));
    rep.checks.back().precondition = true;
    if (!rep.checks.back().pass) why = "V does not leave phi invariant";
  }
  if (!why.empty()) {
    for (const auto& c : kConclusions) rep.add(not_applicable(c.name, c.tag, why));
    return out;
  }
  out.hypothesis = true;

  const int d = s.dim();
  const TensorField LgF = riemann::lie_derivative(V, s.g());
  const TensorField LetaF = riemann::lie_derivative(V, s.eta());
  const TensorField LxiF = riemann::lie_derivative(V, s.xi());
  const auto cs = parallel_map(points.size(), [&](std::size_t pi) {
    const Tensor Leta = LetaF.value(points[pi]), xi = s.xi().value(points[pi]);
    double c = 0.0;
    for (int i = 0; i < d; ++i) c += Leta(i) * xi(i);
    return c;
  });
  const FittedConstant cfit = fitted("c", cs);
  out.c = cfit.value;
  out.c_spread = cfit.spread;
  const double c = out.c;

  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor g = s.g().value(p), eta = s.eta().value(p), xi = s.xi().value(p), phi = s.phi().value(p);
    const Tensor Lg = LgF.value(p), Leta = LetaF.value(p), Lxi = LxiF.value(p);
    std::vector<double> r(std::size(kConclusions), 0.0);
    r[0] = std::abs(cs[pi] - c);
    for (int i = 0; i < d; ++i) {
      r[1] = std::max(r[1], std::abs(Leta(i) - c * eta(i)));
      r[2] = std::max(r[2], std::abs(Lxi(i) + c * xi(i)));
      double lgxi = 0.0;
      for (int j = 0; j < d; ++j) {
        r[3] = std::max(r[3], std::abs(Lg(i, j) - c * (g(i, j) + eta(i) * eta(j))));
        lgxi += Lg(i, j) * xi(j);
        double lgphi = 0.0, gphi = 0.0;
        for (int b = 0; b < d; ++b) {
          lgphi += Lg(i, b) * phi(b, j);
          gphi += g(i, b) * phi(b, j);
        }
        r[5] = std::max(r[5], std::abs(lgphi - c * gphi));
      }
      r[4] = std::max(r[4], std::abs(lgxi - 2.0 * c * eta(i)));
    }
    return r;
  });
  for (std::size_t k = 0; k < std::size(kConclusions); ++k) {
    rep.add(make_check(kConclusions[k].name, kConclusions[k].tag, column(rows, k), tolerance));
  }
  rep.constants.push_back(cfit);
  return out;
}

Theorem2Report theorem2_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                              double tolerance) {
  static constexpr Spec kConclusions[] = {
      {"v-alpha", "v-alpha-invariant"},
      {"v-beta", "v-beta-invariant"},
      {"c-alpha-relation", "theorem2-c-alpha"},
      {"c-beta-relation", "theorem2-c-beta"},
      {"scalar-from-eta-einstein", "scalar-from-eta-einstein"},
      {"dichotomy", "automorphism-or-fixed"},
  };
  Theorem2Report out;
  SuiteReport& rep = out.report;
  rep.suite = "theorem2";
  const Lemma1Report lemma = lemma1_suite(s, V, points, tolerance);
  rep.append(lemma.report);
  out.c = lemma.c;

  const int d = s.dim();
  const int n = s.n();
  std::string why;
  if (!lemma.report.pass()) why = "hypotheses of the invariance lemma fail";

  const ScalarField alphaF = contact::eta_einstein_alpha(s), betaF = contact::eta_einstein_beta(s);
  const riemann::MetricGeometry geom = s.geometry();
  const ScalarField rF = geom.scalar_curvature();
  const TensorField RicF = geom.ricci();
  const TensorField hF = contact::h_field(s);
  const TensorField LgF = riemann::lie_derivative(V, s.g());
  const TensorField LetaF = riemann::lie_derivative(V, s.eta());
  const TensorField LxiF = riemann::lie_derivative(V, s.xi());

  auto along_v = [&](const ScalarField& f, const Point& p) {
    const std::vector<double> grad = f.evaluate(p, 1).gradient();
    const Tensor v = V.value(p);
    double s2 = 0.0;
    for (int i = 0; i < d; ++i) s2 += v(i) * grad[i];
    return s2;
  };

  if (why.empty()) {
    rep.add(make_check("eta-einstein", "eta-einstein", residual_over(points, [&](const Point& p) {
                         const Tensor Ric = RicF.value(p), g = s.g().value(p), eta = s.eta().value(p);
                         const double a = alphaF.value(p), b = betaF.value(p);
                         return diff2(Ric, [&](int i, int j) { return a * g(i, j) + b * eta(i) * eta(j); });
                       }),
                       tolerance));
    rep.checks.back().precondition = true;
    if (!rep.checks.back().pass) why = "structure is not eta-Einstein on the sample";
  }
  if (why.empty()) {
    rep.add(make_check("v-scalar", "v-scalar-invariant",
                       residual_over(points, [&](const Point& p) { return std::abs(along_v(rF, p)); }), tolerance));
    rep.checks.back().precondition = true;
    if (!rep.checks.back().pass) why = "V does not leave the scalar curvature invariant";
  }
  if (!why.empty()) {
    for (const auto& c : kConclusions) rep.add(not_applicable(c.name, c.tag, why));
    rep.notes.push_back("conclusions skipped: " + why);
    return out;
  }
  out.preconditions = true;

  const double c = out.c;
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const double a = alphaF.value(p), b = betaF.value(p);
    std::vector<double> r;
    r.push_back(std::abs(along_v(alphaF, p)));
    r.push_back(std::abs(along_v(betaF, p)));
    r.push_back(std::abs(c * (a + 2.0)));
    r.push_back(std::abs(c * (a + 2.0 * b - 4.0 * n - 2.0)));
    r.push_back(std::abs(rF.value(p) - ((2.0 * n + 1) * a + b)));
    const double lie = std::max({fields::max_abs(LgF.value(p)), fields::max_abs(LetaF.value(p)),
                                 fields::max_abs(LxiF.value(p))});
    const double hn = g_norm_of_endomorphism(hF.value(p));
    r.push_back(std::max(std::abs(c), lie));             // automorphism branch
    r.push_back(std::max(std::abs(a + 2.0), hn));        // fixed K-contact branch
    r.push_back(a);
    r.push_back(b);
    r.push_back(hn);
    return r;
  });
  for (std::size_t k = 0; k + 1 < std::size(kConclusions); ++k) {
    rep.add(make_check(kConclusions[k].name, kConclusions[k].tag, column(rows, k), tolerance));
  }
  const ResidualStats b1 = column(rows, 5), b2 = column(rows, 6);
  out.automorphism = b1.max <= tolerance;
  out.fixed_k_contact = b2.max <= tolerance;
  ResidualStats either = b1.max <= b2.max ? b1 : b2;
  rep.add(make_check("dichotomy", "automorphism-or-fixed", either, tolerance));
  const FittedConstant alpha = fitted("alpha", column_values(rows, 7));
  const FittedConstant beta = fitted("beta", column_values(rows, 8));
  out.alpha = alpha.value;
  out.beta = beta.value;
  out.h_norm = column(rows, 9).max;
  rep.constants.push_back(alpha);
  rep.constants.push_back(beta);
  rep.constants.push_back({"h-norm", out.h_norm, 0.0});

  std::ostringstream branch;
  branch << "branch:";
  if (out.automorphism) branch << " infinitesimal-automorphism";
  if (out.fixed_k_contact) branch << " D-homothetically-fixed-K-contact";
  if (!out.automorphism && !out.fixed_k_contact) {
    std::ostringstream m;
    m << "neither branch holds: automorphism residual " << b1.max << ", fixed K-contact residual " << b2.max
      << " (tolerance " << tolerance << ")";
    throw TheoremViolation(m.str());
  }
  rep.notes.push_back(branch.str());
  return out;
}

}  // namespace sasaki::soliton
