#include <doctest.h>

#include <cmath>

#include "sasaki/errors.hpp"
#include "sasaki/models/random.hpp"
#include "sasaki/models/specimens.hpp"
#include "sasaki/riemann/geometry.hpp"
#include "support.hpp"

using namespace sasaki;
using namespace sasaki::fields;
using riemann::MetricGeometry;
using jets::Jet;

namespace {

TensorField vector_2d(const Chart& c, std::string name, std::function<std::vector<Jet>(const Jet&, const Jet&)> fn) {
  return closed_form(c, 1, 0, std::move(name), [fn](std::span<const Jet> x) { return fn(x[0], x[1]); });
}

}  // namespace

TEST_CASE("round sphere in stereographic coordinates") {
  const MetricGeometry sphere(models::stereographic_sphere_metric());
  const double e0[2] = {1.0, 0.0}, e1[2] = {0.3, 2.0};
  for (const Point& p : test_support::cube_points(2, 10, 3, 1.5)) {
    CHECK(sphere.scalar_curvature_at(p) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sphere.sectional_curvature(p, e0, e1) == doctest::Approx(1.0).epsilon(1e-12));
    // Einstein with Ric = g
    CHECK(max_abs_diff(sphere.ricci_at(p), sphere.metric().value(p)) < 1e-12);
  }
  CHECK_THROWS_AS(sphere.sectional_curvature(Point({0.1, 0.2}), e0, e0), InvalidArgument);
}

TEST_CASE("Christoffel symbols of the conformal plane") {
  // g = e^{2x} δ: Γ^x_xx = Γ^y_xy = 1, Γ^x_yy = −1, all others 0.
  const MetricGeometry plane(models::conformal_plane_metric());
  const Tensor G = plane.christoffel_at(Point({0.4, -1.2}));
  CHECK(G(0, 0, 0) == doctest::Approx(1.0));
  CHECK(G(0, 1, 1) == doctest::Approx(-1.0));
  CHECK(G(1, 0, 1) == doctest::Approx(1.0));
  CHECK(G(1, 1, 0) == doctest::Approx(1.0));
  CHECK(G(0, 0, 1) == doctest::Approx(0.0));
  CHECK(G(1, 0, 0) == doctest::Approx(0.0));
  CHECK(G(1, 1, 1) == doctest::Approx(0.0));
  // Gaussian curvature −e^{−2x}Δ(x) = 0: the plane is flat
  CHECK(max_abs(plane.riemann_at(Point({0.4, -1.2}))) < 1e-12);
}

TEST_CASE("Euclidean space is flat") {
  const MetricGeometry flat(models::euclidean_metric(4));
  const Point p({0.1, 0.2, -0.3, 0.9});
  CHECK(max_abs(flat.christoffel_at(p)) == 0.0);
  CHECK(max_abs(flat.riemann_at(p)) == 0.0);
  CHECK(flat.scalar_curvature_at(p) == 0.0);
}

TEST_CASE("singular metrics are reported") {
  const Chart chart = Chart::numbered(2);
  const TensorField g = closed_form(chart, 0, 2, "degenerate", [](std::span<const Jet> x) {
    const Jet one = jets::constant_like(x[0], 1.0);
    return std::vector<Jet>{one, one, one, one};
  });
  CHECK_THROWS_AS(MetricGeometry(g).christoffel_at(Point({0.0, 0.0})), SingularValue);
}

TEST_CASE("Lie derivatives against hand computations") {
  const Chart chart = Chart::numbered(2);
  const TensorField delta = models::euclidean_metric(2);
  const TensorField rotation = vector_2d(chart, "rotation", [](const Jet& x, const Jet& y) {
    return std::vector<Jet>{-y, x};
  });
  const TensorField dilation_x = vector_2d(chart, "x dx", [](const Jet& x, const Jet&) {
    return std::vector<Jet>{x, jets::constant_like(x, 0.0)};
  });
  const Point p({0.7, -0.4});
  CHECK(max_abs(riemann::lie_derivative(rotation, delta).value(p)) < 1e-15);
  const Tensor lx = riemann::lie_derivative(dilation_x, delta).value(p);
  CHECK(lx(0, 0) == doctest::Approx(2.0));
  CHECK(lx(0, 1) == 0.0);
  CHECK(lx(1, 1) == 0.0);
  // (2,0) tensors are outside the supported ranks
  const TensorField two_up = constant_field(chart, 2, 0, "t", {1, 0, 0, 1});
  CHECK_THROWS_AS(riemann::lie_derivative(rotation, two_up).value(p), CapabilityError);
}

TEST_CASE("Laplacian sign convention") {
  const MetricGeometry flat(models::euclidean_metric(2));
  const ScalarField r2 = closed_form_scalar(flat.chart(), "r2", [](std::span<const Jet> x) { return x[0] * x[0] + x[1] * x[1]; });
  CHECK(flat.laplacian(r2).value(Point({0.3, 0.8})) == doctest::Approx(-4.0));
  const Tensor grad = flat.gradient(r2).value(Point({0.3, 0.8}));
  CHECK(grad(0) == doctest::Approx(0.6));
  CHECK(grad(1) == doctest::Approx(1.6));
}

TEST_CASE("the two routes to the Lie derivative of the connection agree") {
  const auto geom = models::random_metric({3, 2, 0.3, 5, 1.0});
  const TensorField V = models::random_vector_field(3, 3, 8);
  const TensorField a = geom.lie_derivative_connection(V), b = geom.lie_derivative_connection_direct(V);
  for (const Point& p : test_support::cube_points(3, 6, 2)) CHECK(max_abs_diff(a.value(p), b.value(p)) < 1e-11);
}

TEST_CASE("Killing fields of the sphere leave the connection invariant") {
  // rotation about the pole is an isometry in stereographic coordinates
  const MetricGeometry sphere(models::stereographic_sphere_metric());
  const TensorField rot = vector_2d(sphere.chart(), "rotation", [](const Jet& x, const Jet& y) {
    return std::vector<Jet>{-y, x};
  });
  const Point p({0.2, 0.5});
  CHECK(max_abs(riemann::lie_derivative(rot, sphere.metric()).value(p)) < 1e-13);
  CHECK(max_abs(sphere.lie_derivative_connection(rot).value(p)) < 1e-12);
}

TEST_CASE("symmetric eigenvalues") {
  Tensor m = zeros(3, 0, 2);
  m(0, 0) = 2;
  m(0, 1) = m(1, 0) = 1;
  m(1, 1) = 2;
  m(2, 2) = -1;
  const auto ev = riemann::symmetric_eigenvalues(m);
  REQUIRE(ev.size() == 3);
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(1.0));
  CHECK(ev[2] == doctest::Approx(3.0));
}

TEST_CASE("universal identities hold on random metrics") {
  const auto pts = test_support::cube_points(3, 8, 4);
  const auto geom = models::random_metric({3, 2, 0.3, 9, 1.0});
  CHECK(riemann::metric_checks(geom, pts, 1e-9).pass());
  CHECK(riemann::bianchi_checks(geom, pts, 1e-9).pass());
}
