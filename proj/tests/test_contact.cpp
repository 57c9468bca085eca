#include <doctest.h>

#include <cmath>

#include "sasaki/contact/structure.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/models/heisenberg.hpp"
#include "sasaki/models/specimens.hpp"
#include "support.hpp"

using namespace sasaki;
using namespace sasaki::contact;
using fields::max_abs;

TEST_CASE("Heisenberg structures satisfy the axioms and identities") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const auto model = models::build_heisenberg(n);
    const auto pts = test_support::cube_points(2 * n + 1, n == 3 ? 6 : 12, 70 + n);
    CHECK(verify_axioms(model.structure, pts, 1e-9).pass());
    CHECK(identity_suite(model.structure, pts, 1e-9).pass());
    const StructureClass cls = classify(model.structure, pts, 1e-9);
    CHECK_FALSE(cls.refused);
    CHECK(cls.contact_metric);
    CHECK(cls.k_contact);
    CHECK(cls.sasakian);
    CHECK(cls.eta_einstein);
    CHECK_FALSE(cls.einstein);
    CHECK(cls.d_homothetically_fixed);
    CHECK(cls.null_eta_einstein);
    CHECK(cls.alpha == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(cls.beta == doctest::Approx(2.0 * n + 2.0).epsilon(1e-10));
    for (const auto& p : pts) {
      CHECK(max_abs(compute_h(model.structure, p)) < 1e-12);
      CHECK(std::abs(tanaka_webster_scalar(model.structure, p)) < 1e-10);
    }
  }
}

TEST_CASE("transverse Ricci tensor of the Heisenberg group") {
  const auto model = models::build_heisenberg(2);
  const auto pts = test_support::cube_points(5, 8, 2);
  CHECK(transverse_ricci_check(model.structure, pts, 1e-9).pass());
}

TEST_CASE("flat contact candidate is contact metric but not K-contact") {
  const auto s = models::flat_contact_candidate();
  const auto pts = test_support::cube_points(3, 16, 8);
  CHECK(verify_axioms(s, pts, 1e-9).pass());
  CHECK(identity_suite(s, pts, 1e-9).pass());
  const StructureClass cls = classify(s, pts, 1e-9);
  CHECK(cls.contact_metric);
  CHECK_FALSE(cls.k_contact);
  CHECK_FALSE(cls.sasakian);
  CHECK(cls.killing_residual > 0.1);
  double h_max = 0.0;
  for (const auto& p : pts) h_max = std::max(h_max, max_abs(compute_h(s, p)));
  CHECK(h_max > 0.1);
  CHECK_THROWS_AS(transverse_ricci_check(s, pts, 1e-9), PreconditionError);

  const auto gated = models::gated_flat_contact_candidate(pts, 1e-9);
  CHECK(gated.structure.has_value());
  CHECK(gated.notice.empty());
}

TEST_CASE("a structure whose metric is not associated is refused") {
  const auto h = models::build_heisenberg(1).structure;
  const ContactStructure broken(1, h.eta(), h.xi(), h.phi(), fields::scaled(h.g(), 2.0), "broken");
  const auto pts = test_support::cube_points(3, 8, 1);
  CHECK_FALSE(verify_axioms(broken, pts, 1e-9).pass());
  CHECK_FALSE(identity_suite(broken, pts, 1e-9).pass());
  const StructureClass cls = classify(broken, pts, 1e-9);
  CHECK(cls.refused);
  CHECK_FALSE(cls.contact_metric);
  CHECK_FALSE(cls.sasakian);
  CHECK(cls.reason.find("axioms fail") != std::string::npos);
}

TEST_CASE("D-homothetic deformation") {
  const auto h = models::build_heisenberg(1).structure;
  CHECK_THROWS_AS(d_homothetic_deform(h, 0.0), InvalidArgument);
  CHECK_THROWS_AS(d_homothetic_deform(h, -1.0), InvalidArgument);
  CHECK_THROWS_AS(deformed_eta_einstein(-2.0, 1, 0.0), InvalidArgument);

  // α = −2 is a fixed point of the coefficient map for every a
  for (double a : {0.5, 2.0, 3.0}) {
    const auto [alpha, beta] = deformed_eta_einstein(-2.0, 1, a);
    CHECK(alpha == doctest::Approx(-2.0));
    CHECK(beta == doctest::Approx(4.0));
  }
  for (int n = 1; n <= 2; ++n) {
    const auto model = models::build_heisenberg(n);
    const auto pts = test_support::cube_points(2 * n + 1, 8, 11);
    for (double a : {0.5, 3.0}) {
      const ContactStructure d = d_homothetic_deform(model.structure, a);
      CHECK(verify_axioms(d, pts, 1e-9).pass());
      const StructureClass cls = classify(d, pts, 1e-9);
      CHECK(cls.sasakian);
      CHECK(cls.eta_einstein);
      const auto [alpha, beta] = deformed_eta_einstein(-2.0, n, a);
      CHECK(cls.alpha == doctest::Approx(alpha).epsilon(1e-10));
      CHECK(cls.beta == doctest::Approx(beta).epsilon(1e-10));
    }
  }
}

TEST_CASE("projection onto the contact distribution") {
  const auto h = models::build_heisenberg(1).structure;
  const fields::Point p({0.3, -0.6, 0.2});
  const auto xi = h.xi().value(p);
  const double along[3] = {xi(0), xi(1), xi(2)};
  CHECK_FALSE(project_to_contact(h, p, along).has_value());
  const double v[3] = {1.0, 0.5, 0.25};
  const auto X = project_to_contact(h, p, v);
  REQUIRE(X.has_value());
  const auto eta = h.eta().value(p);
  const auto g = h.g().value(p);
  double eX = 0.0, gXX = 0.0;
  for (int i = 0; i < 3; ++i) {
    eX += eta(i) * (*X)[i];
    for (int j = 0; j < 3; ++j) gXX += g(i, j) * (*X)[i] * (*X)[j];
  }
  CHECK(std::abs(eX) < 1e-14);
  CHECK(gXX == doctest::Approx(1.0));
}

TEST_CASE("eta-Einstein coefficient fields") {
  const auto model = models::build_heisenberg(2);
  const fields::Point p({0.1, 0.2, 0.3, 0.4, 0.5});
  CHECK(eta_einstein_alpha(model.structure).value(p) == doctest::Approx(-2.0));
  CHECK(eta_einstein_beta(model.structure).value(p) == doctest::Approx(6.0));
  CHECK(sasakian_residual_at(model.structure, p) < 1e-12);
  CHECK(killing_residual_at(model.structure, p) < 1e-12);
}
