#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sasaki/errors.hpp"
#include "sasaki/fields/calculus.hpp"
#include "sasaki/models/heisenberg.hpp"
#include "sasaki/models/random.hpp"
#include "sasaki/models/specimens.hpp"
#include "support.hpp"

using namespace sasaki;
using namespace sasaki::fields;
using jets::Jet;
using jets::MultiIndex;

namespace {

// Brute force over all permutations:
//   (1/(2n+1)!) Σ_σ sgn(σ) η_{σ(0)} Π_k dη_{σ(2k−1) σ(2k)},
// with dη_ij = ½(∂_i η_j − ∂_j η_i) read straight off the jet of η.
double volume_oracle(const TensorField& eta, int n, const Point& p) {
  const int dim = 2 * n + 1;
  const JetTensor e = eta.evaluate(p, 1);
  auto d_eta = [&](int i, int j) {
    MultiIndex di(static_cast<std::size_t>(dim), 0), dj(static_cast<std::size_t>(dim), 0);
    di[static_cast<std::size_t>(i)] = 1;
    dj[static_cast<std::size_t>(j)] = 1;
    return 0.5 * (e(j).derivative(di) - e(i).derivative(dj));
  };
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0.0, count = 0.0;
  do {
    int inversions = 0;
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b) inversions += perm[a] > perm[b];
    double term = e(perm[0]).value();
    for (int k = 1; k <= n; ++k) term *= d_eta(perm[2 * k - 1], perm[2 * k]);
    sum += (inversions % 2 ? -1.0 : 1.0) * term;
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / count;
}

TensorField xy_dy(const Chart& c) {  // x ∂y
  return closed_form(c, 1, 0, "x dy", [](std::span<const Jet> x) {
    return std::vector<Jet>{jets::constant_like(x[0], 0.0), x[0]};
  });
}

TensorField yx_dx(const Chart& c) {  // y ∂x
  return closed_form(c, 1, 0, "y dx", [](std::span<const Jet> x) {
    return std::vector<Jet>{x[1], jets::constant_like(x[0], 0.0)};
  });
}

}  // namespace

TEST_CASE("sample_box is reproducible and stays inside the box") {
  const Box box{{-1.0, 0.0, 2.0}, {1.0, 0.5, 3.0}};
  const auto a = sample_box(box, 50, 9), b = sample_box(box, 50, 9), c = sample_box(box, 50, 10);
  REQUIRE(a.size() == 50);
  bool same = true, differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    same = same && a[k].coords() == b[k].coords();
    differs = differs || a[k].coords() != c[k].coords();
    CHECK(box.contains(a[k].coords()));
  }
  CHECK(same);
  CHECK(differs);
}

TEST_CASE("charts, points and field evaluation errors") {
  const Chart chart = Chart::numbered(2);
  CHECK(chart.names() == std::vector<std::string>{"x1", "x2"});
  const TensorField v = xy_dy(chart);
  CHECK_THROWS_AS(v.evaluate(Point({1.0, 2.0, 3.0}), 1), InvalidArgument);
  const TensorField shallow = closed_form(
      chart, 0, 0, "shallow", [](std::span<const Jet> x) { return std::vector<Jet>{x[0] * x[1]}; }, 1);
  CHECK_NOTHROW(shallow.evaluate(Point({1.0, 1.0}), 1));
  CHECK_THROWS_AS(shallow.evaluate(Point({1.0, 1.0}), 2), CapabilityError);
  const Chart bounded({"u"}, Box{{0.0}, {1.0}});
  const TensorField u = closed_form(bounded, 0, 0, "u", [](std::span<const Jet> x) { return std::vector<Jet>{x[0]}; });
  CHECK_THROWS_AS(u.evaluate(Point({2.0}), 0), DomainError);
}

TEST_CASE("pointwise tensor algebra") {
  const Chart chart = Chart::numbered(2);
  const TensorField a = constant_field(chart, 0, 1, "a", {1.0, 2.0});
  const TensorField b = constant_field(chart, 1, 0, "b", {3.0, -1.0});
  const Tensor ab = tensor_product(a, b).value(Point({0.0, 0.0}));
  CHECK(ab.up() == 1);
  CHECK(ab.down() == 1);
  CHECK(ab(1, 0) == -1.0);  // b^1 a_0
  CHECK(ab(0, 1) == 6.0);   // b^0 a_1
  const Tensor s = sum(a, scaled(a, 2.0)).value(Point({0.0, 0.0}));
  CHECK(s(1) == 6.0);
  CHECK(max_abs(difference(a, a).value(Point({0.0, 0.0}))) == 0.0);
}

TEST_CASE("Lie bracket of x∂y and y∂x") {
  // [x∂y, y∂x] = x∂x − y∂y
  const Chart chart = Chart::numbered(2);
  const Tensor br = lie_bracket(xy_dy(chart), yx_dx(chart)).value(Point({1.0, 2.0}));
  CHECK(br(0) == doctest::Approx(1.0));
  CHECK(br(1) == doctest::Approx(-2.0));
}

TEST_CASE("d(df) = 0 and the Jacobi identity on random fields") {
  const auto pts = test_support::cube_points(4, 12, 5);
  const ScalarField f = models::random_scalar_field(4, 3, 21);
  const TensorField ddf = exterior_derivative(differential(f));
  const TensorField X = models::random_vector_field(4, 2, 1), Y = models::random_vector_field(4, 2, 2),
                    Z = models::random_vector_field(4, 2, 3);
  const TensorField jac = sum(sum(lie_bracket(X, lie_bracket(Y, Z)), lie_bracket(Y, lie_bracket(Z, X))),
                              lie_bracket(Z, lie_bracket(X, Y)));
  for (const Point& p : pts) {
    CHECK(max_abs(ddf.value(p)) < 1e-12);
    CHECK(max_abs(jac.value(p)) < 1e-11);
  }
}

TEST_CASE("exterior derivative uses the half convention") {
  // ω = x dy: dω_01 = ½(∂_0 ω_1 − ∂_1 ω_0) = ½
  const Chart chart = Chart::numbered(2);
  const TensorField omega = closed_form(chart, 0, 1, "x dy", [](std::span<const Jet> x) {
    return std::vector<Jet>{jets::constant_like(x[0], 0.0), x[0]};
  });
  const Tensor d = exterior_derivative(omega).value(Point({0.3, -0.7}));
  CHECK(d(0, 1) == doctest::Approx(0.5));
  CHECK(d(1, 0) == doctest::Approx(-0.5));
}

TEST_CASE("volume form coefficient agrees with the permutation sum") {
  for (int n : {1, 2}) {
    const auto model = models::build_heisenberg(n);
    const auto pts = test_support::cube_points(2 * n + 1, 5, 40 + n);
    for (const Point& p : pts) {
      const double expected = volume_oracle(model.structure.eta(), n, p);
      CHECK(std::abs(expected) > 1e-6);
      CHECK(volume_form_coefficient(model.structure.eta(), n, p) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  const auto flat = models::flat_contact_candidate();
  for (const Point& p : test_support::cube_points(3, 5, 3)) {
    CHECK(volume_form_coefficient(flat.eta(), 1, p) == doctest::Approx(volume_oracle(flat.eta(), 1, p)).epsilon(1e-12));
  }
  const auto rep = volume_form_check(models::build_heisenberg(1).structure.eta(), 1, test_support::cube_points(3, 8, 1), 1e-9);
  CHECK(rep.pass);
  CHECK(rep.coefficients.size() == 8);
}

TEST_CASE("Pfaffian of small antisymmetric matrices") {
  const std::vector<double> two = {0, 3, -3, 0};
  CHECK(pfaffian(two, 2) == doctest::Approx(3.0));
  // Pf = a12 a34 − a13 a24 + a14 a23
  const std::vector<double> four = {0, 1, 2, 3, -1, 0, 4, 5, -2, -4, 0, 6, -3, -5, -6, 0};
  CHECK(pfaffian(four, 4) == doctest::Approx(1 * 6 - 2 * 5 + 3 * 4));
}
