#include "sasaki/models/random.hpp"

#include <cmath>
#include <random>

#include "sasaki/errors.hpp"
#include "sasaki/fields/calculus.hpp"

namespace sasaki::models {

using fields::Chart;
using fields::closed_form;
using fields::Point;
using fields::TensorField;
using jets::Jet;

namespace {

// exponent vectors of total degree <= degree
std::vector<std::vector<int>> monomials(int dim, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == dim) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

struct Polynomial {
  std::vector<double> coeffs;  // one per monomial
};

Polynomial draw(std::mt19937_64& rng, std::size_t count, double scale) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Polynomial p;
  p.coeffs.resize(count);
  for (auto& c : p.coeffs) c = scale * u(rng);
  return p;
}

// Evaluates every polynomial in `polys` on the seeded coordinate jets.
std::vector<Jet> evaluate_all(std::span<const Jet> x, const std::vector<std::vector<int>>& monos,
                              const std::vector<Polynomial>& polys, int degree) {
  const int dim = static_cast<int>(x.size());
  // powers[i][k] = x_i^k
  std::vector<std::vector<Jet>> powers(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    powers[i].push_back(jets::constant_like(x[i], 1.0));
    for (int k = 1; k <= degree; ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  std::vector<Jet> mono_values;
  mono_values.reserve(monos.size());
  for (const auto& e : monos) {
    Jet m = jets::constant_like(x[0], 1.0);
    for (int i = 0; i < dim; ++i) {
      if (e[i] > 0) m *= powers[i][e[i]];
    }
    mono_values.push_back(std::move(m));
  }
  std::vector<Jet> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    Jet s = jets::constant_like(x[0], 0.0);
    for (std::size_t k = 0; k < monos.size(); ++k) s.add_scaled(p.coeffs[k], mono_values[k]);
    out.push_back(std::move(s));
  }
  return out;
}

void validate(int dim, int degree) {
  if (dim < 1) throw InvalidArgument("random field needs dim >= 1");
  if (degree < 0 || degree > 3) throw InvalidArgument("random polynomial degree must be in 0..3");
}

TensorField metric_attempt(const RandomMetricSpec& spec, int attempt, int max_order) {
  const int d = spec.dim;
  const auto monos = monomials(d, spec.degree);
  std::seed_seq sq{spec.seed, static_cast<std::uint64_t>(attempt), std::uint64_t{0x6d657472}};
  std::mt19937_64 rng(sq);
  // typical |S_ij| of order one on the box
  const double reach = std::pow(std::max(1.0, spec.box_half_width), spec.degree);
  const double scale = 1.0 / (std::sqrt(static_cast<double>(monos.size())) * reach);
  std::vector<Polynomial> upper;  // i <= j, row-major
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) upper.push_back(draw(rng, monos.size(), scale));
  const double eps = spec.epsilon;
  const int degree = spec.degree;
  return closed_form(Chart::numbered(d), 0, 2, "g", [=](std::span<const Jet> x) {
    const std::vector<Jet> s = evaluate_all(x, monos, upper, degree);
    std::vector<Jet> c(static_cast<std::size_t>(d * d), jets::constant_like(x[0], 0.0));
    std::size_t k = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j, ++k) {
        Jet v = s[k] * eps;
        if (i == j) v += 1.0;
        c[static_cast<std::size_t>(j * d + i)] = v;
        c[static_cast<std::size_t>(i * d + j)] = std::move(v);
      }
    return c;
  }, max_order);
}

}  // namespace

TensorField random_metric_field(const RandomMetricSpec& spec, int max_order) {
  validate(spec.dim, spec.degree);
  if (!(spec.epsilon >= 0.0) || !std::isfinite(spec.epsilon)) throw InvalidArgument("epsilon must be finite and >= 0");
  if (!(spec.box_half_width > 0.0)) throw InvalidArgument("box half width must be positive");
  constexpr int kAttempts = 16;
  const auto probe = fields::sample_box(fields::Box::cube(spec.dim, spec.box_half_width), 128, spec.seed ^ 0x5eedULL);
  double worst = 0.0;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    TensorField g = metric_attempt(spec, attempt, max_order);
    worst = 1e300;
    for (const Point& p : probe) worst = std::min(worst, riemann::symmetric_eigenvalues(g.value(p)).front());
    if (worst > 1e-3) return g;
  }
  throw GenerationError("random metric: no positive definite draw in " + std::to_string(kAttempts) +
                        " attempts (last smallest eigenvalue " + std::to_string(worst) + ")");
}

riemann::MetricGeometry random_metric(const RandomMetricSpec& spec, int max_order) {
  return riemann::MetricGeometry(random_metric_field(spec, max_order));
}

TensorField random_vector_field(int dim, int degree, std::uint64_t seed, int max_order) {
  validate(dim, degree);
  const auto monos = monomials(dim, degree);
  std::seed_seq sq{seed, std::uint64_t{0x76656374}};
  std::mt19937_64 rng(sq);
  std::vector<Polynomial> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(draw(rng, monos.size(), 1.0));
  return closed_form(Chart::numbered(dim), 1, 0, "V", [=](std::span<const Jet> x) {
    return evaluate_all(x, monos, comps, degree);
  }, max_order);
}

fields::ScalarField random_scalar_field(int dim, int degree, std::uint64_t seed, int max_order) {
  validate(dim, degree);
  const auto monos = monomials(dim, degree);
  std::seed_seq sq{seed, std::uint64_t{0x7363616c}};
  std::mt19937_64 rng(sq);
  std::vector<Polynomial> comps{draw(rng, monos.size(), 1.0)};
  return fields::closed_form_scalar(Chart::numbered(dim), "f", [=](std::span<const Jet> x) {
    return evaluate_all(x, monos, comps, degree)[0];
  }, max_order);
}

SuiteReport universal_suite(const riemann::MetricGeometry& geom, const TensorField& V, const fields::ScalarField& f,
                            std::span<const Point> points, double tolerance) {
  SuiteReport rep;
  rep.suite = "universal";
  rep.append_preconditions(riemann::metric_checks(geom, points, tolerance));
  if (!rep.pass()) {
    rep.notes.push_back("metric failed its sanity checks; curvature identities skipped");
    return rep;
  }
  rep.append(riemann::bianchi_checks(geom, points, tolerance));
  rep.append(riemann::commutation_check_10(geom, V, points, tolerance));
  rep.append(riemann::commutation_check_13(geom, V, points, tolerance));
  const TensorField ddf = fields::exterior_derivative(fields::differential(f));
  rep.add(make_check("d-squared", "d-squared",
                     residual_over(points, [&](const Point& p) { return fields::max_abs(ddf.value(p)); }),
                     tolerance));
  return rep;
}

}  // namespace sasaki::models
