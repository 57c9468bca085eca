#include "sasaki/soliton/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sasaki/errors.hpp"
#include "sasaki/parallel.hpp"

namespace sasaki::soliton {

using fields::compose;
using fields::ScalarField;

const char* to_string(SolitonKind k) {
  switch (k) {
    case SolitonKind::shrinking:
      return "shrinking";
    case SolitonKind::steady:
      return "steady";
    case SolitonKind::expanding:
      return "expanding";
    case SolitonKind::not_a_soliton:
      break;
  }
  return "not-a-soliton";
}

namespace {

void require_vector_on(const TensorField& V, const fields::Chart& chart) {
  if (V.up() != 1 || V.down() != 0) throw InvalidArgument("soliton field must be a vector field");
  if (!(V.chart() == chart)) throw InvalidArgument("soliton field lives on a different chart");
}

double trace_g(const Tensor& ginv, const Tensor& t) {
  double s = 0.0;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) s += ginv(i, j) * t(i, j);
  return s;
}

double traceless_ricci(const Tensor& Ric, const Tensor& g, double r) {
  const int d = g.dim();
  double m = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m = std::max(m, std::abs(Ric(i, j) - r / d * g(i, j)));
  return m;
}

LambdaFit summarize(const std::vector<double>& values) {
  LambdaFit f;
  if (values.empty()) return f;
  double s = 0.0;
  for (double v : values) s += v;
  f.lambda = s / static_cast<double>(values.size());
  for (double v : values) f.spread = std::max(f.spread, std::abs(v - f.lambda));
  if (!std::isfinite(f.lambda)) f.spread = f.lambda;
  return f;
}

std::vector<double> deviations(const std::vector<double>& values, double center) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(std::abs(v - center));
  return out;
}

SolitonKind kind_of(double lambda, double tolerance) {
  if (lambda < -tolerance) return SolitonKind::shrinking;
  if (lambda > tolerance) return SolitonKind::expanding;
  return SolitonKind::steady;
}

std::vector<double> trace_estimates(const MetricGeometry& geom, const TensorField& V,
                                    std::span<const Point> points) {
  const TensorField LgF = riemann::lie_derivative(V, geom.metric());
  const TensorField ginvF = geom.inverse_metric();
  const ScalarField rF = geom.scalar_curvature();
  const double d = geom.dim();
  return parallel_map(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    return -(0.5 * trace_g(ginvF.value(p), LgF.value(p)) + rF.value(p)) / d;
  });
}

std::vector<double> reeb_estimates(const ContactStructure& s, const TensorField& V, std::span<const Point> points) {
  const TensorField LgF = riemann::lie_derivative(V, s.g());
  const TensorField RicF = s.geometry().ricci();
  const int d = s.dim();
  return parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor Lg = LgF.value(p), Ric = RicF.value(p), xi = s.xi().value(p);
    double lg = 0.0, ric = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        lg += Lg(i, j) * xi(i) * xi(j);
        ric += Ric(i, j) * xi(i) * xi(j);
      }
    return -ric - 0.5 * lg;
  });
}

}  // namespace

Tensor soliton_residual(const MetricGeometry& geom, const SolitonData& data, const Point& p) {
  require_vector_on(data.V, geom.chart());
  if (!data.lambda) throw InvalidArgument("soliton_residual needs a concrete lambda");
  const Tensor Lg = riemann::lie_derivative(data.V, geom.metric()).value(p);
  const Tensor Ric = geom.ricci().value(p);
  const Tensor g = geom.metric().value(p);
  Tensor out = Lg;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += 2.0 * Ric[i] + 2.0 * *data.lambda * g[i];
  return out;
}

LambdaFit fit_lambda(const MetricGeometry& geom, const TensorField& V, std::span<const Point> points) {
  require_vector_on(V, geom.chart());
  return summarize(trace_estimates(geom, V, points));
}

LambdaFit fit_lambda_reeb(const ContactStructure& s, const TensorField& V, std::span<const Point> points) {
  require_vector_on(V, s.chart());
  return summarize(reeb_estimates(s, V, points));
}

SolitonReport analyze_soliton(const MetricGeometry& geom, const SolitonData& data, std::span<const Point> points,
                              double tolerance) {
  require_vector_on(data.V, geom.chart());
  SolitonReport out;
  out.report.suite = "soliton";
  const std::vector<double> lambdas = trace_estimates(geom, data.V, points);
  out.fit = summarize(lambdas);
  out.lambda = data.lambda ? *data.lambda : out.fit.lambda;

  const TensorField LgF = riemann::lie_derivative(data.V, geom.metric());
  const TensorField RicF = geom.ricci();
  const ScalarField rF = geom.scalar_curvature();
  const double lambda = out.lambda;
  struct Row {
    double residual, einstein;
  };
  const auto rows = parallel_map(points.size(), [&](std::size_t i) {
    const Point& p = points[i];
    const Tensor Lg = LgF.value(p), Ric = RicF.value(p), g = geom.metric().value(p);
    double m = 0.0;
    for (std::size_t k = 0; k < Lg.size(); ++k) m = std::max(m, std::abs(Lg[k] + 2.0 * Ric[k] + 2.0 * lambda * g[k]));
    return Row{m, traceless_ricci(Ric, g, rF.value(p))};
  });
  std::vector<double> res, ein;
  for (const Row& r : rows) {
    res.push_back(r.residual);
    ein.push_back(r.einstein);
  }
  out.residual = stats_of(res);
  out.trivial = stats_of(ein).max <= tolerance;

  out.report.add(make_check("soliton-equation", "ricci-soliton", out.residual, tolerance));
  out.report.add(make_check("lambda-constant", "lambda-constant", stats_of(deviations(lambdas, out.fit.lambda)),
                            tolerance));
  out.report.constants.push_back({"lambda", out.fit.lambda, out.fit.spread});

  const bool soliton = out.residual.max <= tolerance && (data.lambda || out.fit.spread <= tolerance);
  out.kind = soliton ? kind_of(lambda, tolerance) : SolitonKind::not_a_soliton;
  out.report.notes.push_back(std::string("classification: ") + to_string(out.kind));
  if (soliton) out.report.notes.push_back(out.trivial ? "trivial (Einstein metric)" : "non-trivial (metric not Einstein)");
  return out;
}

SolitonReport analyze_soliton(const ContactStructure& s, const SolitonData& data, std::span<const Point> points,
                              double tolerance) {
  SolitonReport out = analyze_soliton(s.geometry(), data, points, tolerance);
  const std::vector<double> reeb = reeb_estimates(s, data.V, points);
  out.reeb_fit = summarize(reeb);
  out.report.add(make_check("lambda-reeb-estimator", "lambda-reeb-estimator",
                            stats_of(deviations(reeb, out.lambda)), tolerance));
  out.report.constants.push_back({"lambda-reeb", out.reeb_fit->lambda, out.reeb_fit->spread});
  const contact::StructureClass cls = contact::classify(s, points, tolerance);
  if (!cls.refused) {
    out.trivial = cls.einstein;
    if (out.kind != SolitonKind::not_a_soliton) {
      out.report.notes.back() = cls.einstein ? "trivial (Einstein metric, beta = 0)"
                                             : "non-trivial (metric not Einstein)";
    }
  }
  return out;
}

namespace {

SuiteReport integrability_common(const MetricGeometry& geom, const SolitonReport& sol, const TensorField& V,
                                 std::span<const Point> points, double tolerance, bool& applicable) {
  SuiteReport rep;
  rep.suite = "integrability";
  rep.append_preconditions(sol.report);
  applicable = sol.kind != SolitonKind::not_a_soliton;
  if (!applicable) {
    const std::string why = "V does not generate a Ricci soliton on the sample";
    rep.add(not_applicable("integrability-formula", "integrability-formula", why));
    rep.add(not_applicable("scalar-consequence", "soliton-scalar-identity", why));
    return rep;
  }
  const double lambda = sol.lambda;
  const ScalarField rF = geom.scalar_curvature();
  const ScalarField lapF = geom.laplacian(rF);
  const TensorField QF = geom.ricci_operator();
  const int d = geom.dim();
  struct Row {
    double formula, r, dr, consequence, norm2;
  };
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const std::vector<double> grad = rF.evaluate(p, 1).gradient();
    const Tensor v = V.value(p), Q = QF.value(p);
    double Vr = 0.0, dr = 0.0;
    for (int i = 0; i < d; ++i) {
      Vr += v(i) * grad[i];
      dr = std::max(dr, std::abs(grad[i]));
    }
    const double r = rF.value(p);
    const double norm2 = fields::trace(compose(Q, Q));
    const double rhs = -lapF.value(p) + 2.0 * lambda * r + 2.0 * norm2;
    return Row{std::abs(Vr - rhs), r, dr, std::abs(lambda * r + norm2), norm2};
  });
  std::vector<double> formula, rs, drs, cons, norms;
  for (const Row& r : rows) {
    formula.push_back(r.formula);
    rs.push_back(r.r);
    drs.push_back(r.dr);
    cons.push_back(r.consequence);
    norms.push_back(r.norm2);
  }
  rep.add(make_check("integrability-formula", "integrability-formula", stats_of(formula), tolerance));
  const LambdaFit r_fit = summarize(rs);
  const LambdaFit q_fit = summarize(norms);
  rep.constants.push_back({"r", r_fit.lambda, r_fit.spread});
  rep.constants.push_back({"ricci-operator-norm2", q_fit.lambda, q_fit.spread});
  if (r_fit.spread <= tolerance && stats_of(drs).max <= tolerance) {
    rep.add(make_check("scalar-consequence", "soliton-scalar-identity", stats_of(cons), tolerance));
  } else {
    std::ostringstream why;
    why << "scalar curvature is not constant on the sample (spread " << r_fit.spread << ")";
    rep.add(not_applicable("scalar-consequence", "soliton-scalar-identity", why.str()));
  }
  return rep;
}

// Q_μ = (n − μ/2)I + (n + μ/2)ξ⊗η at one point
Tensor eta_einstein_operator(const Tensor& xi, const Tensor& eta, int n, double mu) {
  const int d = xi.dim();
  Tensor Q = fields::identity(d);
  for (std::size_t k = 0; k < Q.size(); ++k) Q[k] *= n - mu / 2.0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) Q(a, b) += (n + mu / 2.0) * xi(a) * eta(b);
  return Q;
}

double quadratic_at(const Tensor& xi, const Tensor& eta, int n, double mu) {
  const Tensor Q = eta_einstein_operator(xi, eta, n, mu);
  return mu * fields::trace(Q) + fields::trace(compose(Q, Q));
}

bool einstein_operator(const Tensor& Q, double tolerance) {
  const int d = Q.dim();
  const double mean = fields::trace(Q) / d;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (std::abs(Q(a, b) - (a == b ? mean : 0.0)) > tolerance) return false;
  return true;
}

}  // namespace

SuiteReport integrability_check(const MetricGeometry& geom, const SolitonData& data, std::span<const Point> points,
                                double tolerance) {
  const SolitonReport sol = analyze_soliton(geom, data, points, tolerance);
  bool applicable = false;
  return integrability_common(geom, sol, data.V, points, tolerance, applicable);
}

SuiteReport integrability_check(const ContactStructure& s, const SolitonData& data, std::span<const Point> points,
                                double tolerance) {
  const SolitonReport sol = analyze_soliton(s, data, points, tolerance);
  bool applicable = false;
  SuiteReport rep = integrability_common(s.geometry(), sol, data.V, points, tolerance, applicable);

  double gate = 0.0;
  for (const Point& p : points) {
    gate = std::max({gate, contact::sasakian_residual_at(s, p), contact::killing_residual_at(s, p)});
  }
  if (!applicable || !(gate <= tolerance)) {
    std::ostringstream why;
    if (!applicable) {
      why << "V does not generate a Ricci soliton on the sample";
    } else {
      why << "structure is not Sasakian on the sample (residual " << gate << ")";
    }
    rep.add(not_applicable("quadratic-roots", "soliton-lambda-quadratic", why.str()));
    rep.add(not_applicable("lambda-nontrivial-root", "soliton-expanding-root", why.str()));
    return rep;
  }

  const int n = s.n();
  struct Row {
    double low, high, residual;
    bool low_einstein, high_einstein;
  };
  const auto rows = parallel_map(points.size(), [&](std::size_t pi) {
    const Point& p = points[pi];
    const Tensor xi = s.xi().value(p), eta = s.eta().value(p);
    // q(μ) = aμ² + bμ + c from three samples; q is exactly quadratic in μ
    const double qm = quadratic_at(xi, eta, n, -1.0), q0 = quadratic_at(xi, eta, n, 0.0),
                 qp = quadratic_at(xi, eta, n, 1.0);
    const double a = 0.5 * (qp + qm) - q0, b = 0.5 * (qp - qm), c = q0;
    const double disc = b * b - 4.0 * a * c;
    const double sq = std::sqrt(disc);
    // stable form of the two roots
    const double t = -0.5 * (b + std::copysign(sq, b));
    double r1 = t / a, r2 = c / t;
    if (r1 > r2) std::swap(r1, r2);
    Row row{};
    row.low = r1;
    row.high = r2;
    row.residual = std::max(std::abs(r1 + 2.0 * n), std::abs(r2 - (2.0 * n + 4.0)));
    if (!std::isfinite(row.residual)) row.residual = std::numeric_limits<double>::infinity();
    row.low_einstein = einstein_operator(eta_einstein_operator(xi, eta, n, r1), 1e-6);
    row.high_einstein = einstein_operator(eta_einstein_operator(xi, eta, n, r2), 1e-6);
    return row;
  });
  std::vector<double> res, lows, highs, pick;
  bool low_e = true, high_e = true;
  for (const Row& r : rows) {
    res.push_back(r.residual);
    lows.push_back(r.low);
    highs.push_back(r.high);
    low_e = low_e && r.low_einstein;
    high_e = high_e && r.high_einstein;
  }
  rep.add(make_check("quadratic-roots", "soliton-lambda-quadratic", stats_of(res), tolerance));
  const LambdaFit lo = summarize(lows), hi = summarize(highs);
  rep.constants.push_back({"lambda-root-low", lo.lambda, lo.spread});
  rep.constants.push_back({"lambda-root-high", hi.lambda, hi.spread});
  auto label = [&](double root, bool einstein) {
    std::ostringstream m;
    m << "root " << root << ": " << (einstein ? "corresponds to Einstein" : to_string(kind_of(root, tolerance)));
    return m.str();
  };
  rep.notes.push_back(label(lo.lambda, low_e));
  rep.notes.push_back(label(hi.lambda, high_e));
  // the soliton must sit on the root that keeps the metric non-Einstein
  const std::vector<double>& other = low_e ? highs : lows;
  for (double r : other) pick.push_back(std::abs(sol.lambda - r));
  rep.add(make_check("lambda-nontrivial-root", "soliton-expanding-root", stats_of(pick), tolerance));
  return rep;
}

}  // namespace sasaki::soliton
