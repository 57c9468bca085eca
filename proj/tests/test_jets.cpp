#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "sasaki/errors.hpp"
#include "sasaki/jets/jet.hpp"
#include "sasaki/jets/kernels.hpp"

using namespace sasaki;
using namespace sasaki::jets;

namespace {

Jet random_jet(const JetSpec& spec, std::mt19937_64& rng, double constant = 0.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Jet j(spec);
  for (double& c : j.coeffs()) c = u(rng);
  j.coeffs()[0] += constant;
  return j;
}

double max_diff(const Jet& a, const Jet& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) m = std::max(m, std::abs(a.coeffs()[k] - b.coeffs()[k]));
  return m;
}

bool bitwise_equal(const Jet& a, const Jet& b) {
  return a.coeffs().size() == b.coeffs().size() &&
         std::memcmp(a.coeffs().data(), b.coeffs().data(), a.coeffs().size() * sizeof(double)) == 0;
}

// A chain touching every kernel: sums, scaled sums, products, division and
// the transcendental compositions.
Jet workload(const JetSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Jet a = random_jet(spec, rng, 2.0), b = random_jet(spec, rng), c = random_jet(spec, rng, 1.5);
  Jet r = a * b + c;
  r.add_scaled(0.37, a);
  r.add_product(b, c);
  r.sub_product(a, a);
  r = r / c + sin(b) * exp(a * 0.1) - sqrt(c) * cos(a);
  return r;
}

}  // namespace

TEST_CASE("graded layout order for two variables") {
  const Layout& L = layout_for(JetSpec{2, 2});
  REQUIRE(L.size() == 6);
  CHECK(L.monomial(0) == MultiIndex{0, 0});
  CHECK(L.monomial(1) == MultiIndex{1, 0});
  CHECK(L.monomial(2) == MultiIndex{0, 1});
  CHECK(L.monomial(3) == MultiIndex{2, 0});
  CHECK(L.monomial(4) == MultiIndex{1, 1});
  CHECK(L.monomial(5) == MultiIndex{0, 2});
  CHECK(coefficient_count(JetSpec{3, 4}) == 35);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(JetSpec{0, 1}), InvalidArgument);
  CHECK_THROWS_AS(validate(JetSpec{2, kMaxOrder + 1}), InvalidArgument);
  CHECK_NOTHROW(validate(JetSpec{2, 0}));
}

TEST_CASE("ring laws hold to rounding") {
  std::mt19937_64 rng(11);
  for (int dim : {1, 3, 5}) {
    for (int order : {0, 2, 4}) {
      const JetSpec spec{dim, order};
      const Jet a = random_jet(spec, rng), b = random_jet(spec, rng), c = random_jet(spec, rng);
      CHECK(max_diff(a * (b + c), a * b + a * c) < 1e-13);
      CHECK(max_diff(a * b, b * a) < 1e-14);
      CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-13);
      CHECK(max_diff(a + b - b, a) < 1e-15);
      Jet acc = c;
      acc.add_product(a, b);
      CHECK(bitwise_equal(acc, c + a * b));
      acc.sub_product(a, b);
      CHECK(max_diff(acc, c) < 1e-14);
    }
  }
}

TEST_CASE("division and reciprocal") {
  std::mt19937_64 rng(3);
  const JetSpec spec{3, 4};
  const Jet a = random_jet(spec, rng, 3.0), b = random_jet(spec, rng);
  CHECK(max_diff((b / a) * a, b) < 1e-13);
  CHECK(max_diff(recip(a) * a, Jet::constant(spec, 1.0)) < 1e-13);
  CHECK_THROWS_AS(recip(Jet::constant(spec, 0.0)), SingularValue);
  CHECK_THROWS_AS(sqrt(Jet::constant(spec, -1.0)), SingularValue);
  CHECK_THROWS_AS(a + Jet(JetSpec{3, 2}), InvalidArgument);
}

TEST_CASE("derivatives of closed forms match calculus") {
  // f(x, y) = sin(x) e^y at (0.3, -0.4)
  const JetSpec spec{2, 4};
  const double x0 = 0.3, y0 = -0.4;
  const Jet x = Jet::variable(spec, 0, x0), y = Jet::variable(spec, 1, y0);
  const Jet f = sin(x) * exp(y);
  CHECK(f.value() == doctest::Approx(std::sin(x0) * std::exp(y0)).epsilon(1e-15));
  CHECK(f.derivative({1, 0}) == doctest::Approx(std::cos(x0) * std::exp(y0)).epsilon(1e-14));
  CHECK(f.derivative({1, 1}) == doctest::Approx(std::cos(x0) * std::exp(y0)).epsilon(1e-14));
  CHECK(f.derivative({3, 1}) == doctest::Approx(-std::cos(x0) * std::exp(y0)).epsilon(1e-13));
  CHECK(f.derivative({0, 4}) == doctest::Approx(std::sin(x0) * std::exp(y0)).epsilon(1e-13));

  // g(x) = sqrt(1 + x^2): g'' = (1 + x^2)^{-3/2}
  const Jet u = Jet::variable(JetSpec{1, 3}, 0, 0.7);
  const Jet g = sqrt(1.0 + u * u);
  CHECK(g.derivative({2}) == doctest::Approx(std::pow(1.0 + 0.49, -1.5)).epsilon(1e-13));
  // pow against repeated products
  CHECK(max_diff(pow(u + 2.0, 3), (u + 2.0) * (u + 2.0) * (u + 2.0)) < 1e-13);
  CHECK(max_diff(pow(u, 0), Jet::constant(u.spec(), 1.0)) == 0.0);
  // cos² + sin² = 1 as a jet
  CHECK(max_diff(sin(u) * sin(u) + cos(u) * cos(u), Jet::constant(u.spec(), 1.0)) < 1e-14);
}

TEST_CASE("differentiate lowers the order and agrees with derivative()") {
  const JetSpec spec{3, 4};
  const Jet x = Jet::variable(spec, 0, 0.5), y = Jet::variable(spec, 1, -0.2), z = Jet::variable(spec, 2, 1.1);
  const Jet f = exp(x * y) * cos(z) + x * x * x * z;
  const Jet fx = f.differentiate(0);
  CHECK(fx.order() == 3);
  CHECK(fx.value() == doctest::Approx(f.derivative({1, 0, 0})).epsilon(1e-15));
  CHECK(fx.derivative({0, 1, 1}) == doctest::Approx(f.derivative({1, 1, 1})).epsilon(1e-14));
  CHECK_THROWS_AS(Jet::constant(JetSpec{2, 0}, 1.0).differentiate(0), CapabilityError);
}

TEST_CASE("computing at a higher order then truncating equals computing at the lower order") {
  for (int low = 0; low <= 3; ++low) {
    auto build = [](int order) {
      const JetSpec spec{2, order};
      const Jet x = Jet::variable(spec, 0, 0.25), y = Jet::variable(spec, 1, 0.75);
      return exp(sin(x) * y) / (1.0 + x * x) + sqrt(2.0 + y);
    };
    const Jet hi = build(4).truncate(low);
    const Jet lo = build(low);
    CHECK(max_diff(hi, lo) < 1e-14);
  }
}

TEST_CASE("kernel backends agree bit for bit") {
  using kernels::Backend;
  const Backend original = kernels::active().backend;
  kernels::select(Backend::scalar);
  std::vector<Jet> reference;
  for (int dim : {1, 2, 3, 5, 7}) reference.push_back(workload(JetSpec{dim, dim > 5 ? 3 : 4}, 100 + dim));
  int compared = 0;
  for (Backend b : {Backend::avx2, Backend::neon}) {
    if (!kernels::supported(b)) continue;
    kernels::select(b);
    std::size_t k = 0;
    for (int dim : {1, 2, 3, 5, 7}) {
      CHECK(bitwise_equal(workload(JetSpec{dim, dim > 5 ? 3 : 4}, 100 + dim), reference[k++]));
    }
    ++compared;
  }
  kernels::select(original);
  MESSAGE("backends compared against scalar: " << compared);
  CHECK_THROWS_AS(kernels::select(static_cast<Backend>(99)), InvalidArgument);
}

TEST_CASE("kernel tables compute the documented operations") {
  const double a[5] = {1, 2, 3, 4, 5}, b[5] = {0.5, -1, 2, 0, 3};
  const std::uint32_t lhs[3] = {0, 4, 2}, rhs[3] = {1, 1, 4};
  for (auto backend : {kernels::Backend::scalar, kernels::Backend::avx2, kernels::Backend::neon}) {
    if (!kernels::supported(backend)) continue;
    const auto& t = kernels::table(backend);
    double out[5];
    t.add(a, b, out, 5);
    CHECK(out[4] == 8.0);
    t.sub(a, b, out, 5);
    CHECK(out[1] == 3.0);
    t.scale(a, -2.0, out, 5);
    CHECK(out[2] == -6.0);
    double y[5] = {1, 1, 1, 1, 1};
    t.axpy(2.0, a, y, 5);
    CHECK(y[4] == 11.0);
    t.gather_mul(a, b, lhs, rhs, out, 3);
    CHECK(out[0] == -1.0);
    CHECK(out[1] == -5.0);
    CHECK(out[2] == 9.0);
  }
}
