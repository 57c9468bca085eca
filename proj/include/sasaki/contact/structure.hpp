#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sasaki/report.hpp"
#include "sasaki/riemann/geometry.hpp"

namespace sasaki::contact {

using fields::Chart;
using fields::Point;
using fields::ScalarField;
using fields::Tensor;
using fields::TensorField;

/// An almost contact metric structure (η, ξ, φ, g) on a (2n+1)-dimensional
/// chart. Construction only checks shapes; whether the fields actually form a
/// contact metric structure is what verify_axioms measures.
class ContactStructure {
 public:
  ContactStructure(int n, TensorField eta, TensorField xi, TensorField phi, TensorField g,
                   std::string name = "structure");

  int n() const { return n_; }
  int dim() const { return 2 * n_ + 1; }
  const Chart& chart() const { return g_.chart(); }
  const std::string& name() const { return name_; }

  const TensorField& eta() const { return eta_; }
  const TensorField& xi() const { return xi_; }
  const TensorField& phi() const { return phi_; }
  const TensorField& g() const { return g_; }
  riemann::MetricGeometry geometry() const { return riemann::MetricGeometry(g_); }

 private:
  int n_;
  TensorField eta_, xi_, phi_, g_;
  std::string name_;
};

// η(ξ) = 1, dη(ξ,·) = 0, φ² = −I + η⊗ξ, dη(X,Y) = g(X,φY), η = g(·,ξ),
// η∧(dη)^n ≠ 0, and g positive definite.
SuiteReport verify_axioms(const ContactStructure& s, std::span<const Point> points, double tolerance);

// h = ½ £_ξ φ
TensorField h_field(const ContactStructure& s);
// l(X) = R(X,ξ)ξ
TensorField l_field(const ContactStructure& s);
Tensor compute_h(const ContactStructure& s, const Point& p);
Tensor compute_l(const ContactStructure& s, const Point& p);

// The contact metric identities
//   ∇_X ξ = −φX − φhX,  l − φlφ = −2(h² + φ²),  ∇_ξ h = φ − φl − φh²,
//   Tr l = Ric(ξ,ξ) = 2n − Tr h²,
// the algebraic facts about h (trace-free, hφ = −φh, self-adjoint), φξ = 0,
// η∘φ = 0, div φ = −2nη, and, on Sasakian inputs, the Sasakian curvature
// identities. The axiom checks are included, so a structure that is not
// contact metric fails the suite.
SuiteReport identity_suite(const ContactStructure& s, std::span<const Point> points, double tolerance);

struct StructureClass {
  // Classification is refused (all flags false) when the axioms fail.
  bool refused = false;
  std::string reason;

  bool contact_metric = false;
  bool k_contact = false;
  bool sasakian = false;
  bool eta_einstein = false;
  bool einstein = false;
  bool d_homothetically_fixed = false;
  bool null_eta_einstein = false;

  // residuals behind the flags (max over the sample)
  double killing_residual = 0.0;      // |£_ξ g|
  double sasakian_residual = 0.0;     // |(∇_X φ)Y − g(X,Y)ξ + η(Y)X|
  double eta_einstein_residual = 0.0; // |Ric − αg − βη⊗η|

  // pointwise-exact η-Einstein coefficients averaged over the sample, and
  // their max deviation from the average
  double alpha = 0.0;
  double beta = 0.0;
  double alpha_spread = 0.0;
  double beta_spread = 0.0;

  SuiteReport report;
};

StructureClass classify(const ContactStructure& s, std::span<const Point> points, double tolerance);

// α = (r − Ric(ξ,ξ))/2n and β = Ric(ξ,ξ) − α, the unique pair with
// Ric − αg − βη⊗η trace-free and vanishing on (ξ,ξ).
ScalarField eta_einstein_alpha(const ContactStructure& s);
ScalarField eta_einstein_beta(const ContactStructure& s);

// η̄ = aη, ξ̄ = ξ/a, φ̄ = φ, ḡ = ag + a(a−1)η⊗η. Throws InvalidArgument for a <= 0.
ContactStructure d_homothetic_deform(const ContactStructure& s, double a);

// Image of the η-Einstein coefficients under a D-homothetic deformation of a
// K-contact structure: ᾱ = (α + 2 − 2a)/a, β̄ = 2n − ᾱ.
std::pair<double, double> deformed_eta_einstein(double alpha, int n, double a);

// (I − η⊗ξ)v normalized in g, or nothing when the projection has g-norm
// below 1e-6 (v nearly parallel to ξ).
std::optional<std::vector<double>> project_to_contact(const ContactStructure& s, const Point& p,
                                                      std::span<const double> v);

// Ric(X,Y) + 2g(X,Y) for random X, Y in the contact distribution. Throws
// PreconditionError when the structure is not Sasakian on the sample.
SuiteReport transverse_ricci_check(const ContactStructure& s, std::span<const Point> points,
                                   double tolerance, std::uint64_t seed = 7);

// W = r − Ric(ξ,ξ) + 4n
double tanaka_webster_scalar(const ContactStructure& s, const Point& p);

// Residual of (∇_X φ)Y = g(X,Y)ξ − η(Y)X and of £_ξ g = 0 at one point.
double sasakian_residual_at(const ContactStructure& s, const Point& p);
double killing_residual_at(const ContactStructure& s, const Point& p);

}  // namespace sasaki::contact
