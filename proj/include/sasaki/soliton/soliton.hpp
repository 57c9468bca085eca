#pragma once

#include <optional>
#include <span>
#include <string>

#include "sasaki/contact/structure.hpp"
#include "sasaki/report.hpp"
#include "sasaki/riemann/geometry.hpp"

namespace sasaki::soliton {

using contact::ContactStructure;
using fields::Point;
using fields::Tensor;
using fields::TensorField;
using riemann::MetricGeometry;

/// A candidate soliton field. An empty lambda asks for it to be estimated
/// from the sample.
struct SolitonData {
  TensorField V;
  std::optional<double> lambda;
};

enum class SolitonKind { shrinking, steady, expanding, not_a_soliton };
const char* to_string(SolitonKind k);

struct LambdaFit {
  double lambda = 0.0;
  double spread = 0.0;  // max |λ_p − lambda| over the sample
};

struct SolitonReport {
  ResidualStats residual;  // of £_V g + 2Ric + 2λg, with λ given or fitted
  double lambda = 0.0;     // value the residual was computed with
  LambdaFit fit;           // trace estimator
  std::optional<LambdaFit> reeb_fit;  // ξξ estimator, contact models only
  SolitonKind kind = SolitonKind::not_a_soliton;
  bool trivial = false;  // the metric is Einstein
  SuiteReport report;
};

// £_V g + 2Ric + 2λg at p. Throws InvalidArgument when data.lambda is empty
// or V lives on another chart.
Tensor soliton_residual(const MetricGeometry& geom, const SolitonData& data, const Point& p);

// λ_p = −(½ tr_g £_V g + r)/dim per point; mean and spread.
LambdaFit fit_lambda(const MetricGeometry& geom, const TensorField& V, std::span<const Point> points);
// λ_p = −Ric(ξ,ξ) − ½(£_V g)(ξ,ξ), which is −2n − ½(£_V g)(ξ,ξ) on K-contact
// structures. Independent of the trace estimator.
LambdaFit fit_lambda_reeb(const ContactStructure& s, const TensorField& V, std::span<const Point> points);

// Residual, λ fit, shrinking/steady/expanding classification and the
// Einstein (trivial) flag, judged from the traceless Ricci tensor.
SolitonReport analyze_soliton(const MetricGeometry& geom, const SolitonData& data,
                              std::span<const Point> points, double tolerance);
// Same, plus the ξξ λ estimator as a cross-check; triviality is read off the
// η-Einstein fit (β = 0).
SolitonReport analyze_soliton(const ContactStructure& s, const SolitonData& data,
                              std::span<const Point> points, double tolerance);

// £_V r = −Δr + 2λr + 2|Q|², with |Q|² = tr(Q²) computed from Q's
// components. On constant-r samples also λr + |Q|² = 0. The contact overload
// adds, on Sasakian structures, the quadratic in λ obtained from the
// η-Einstein form Q = (n − λ/2)I + (n + λ/2)η⊗ξ: its roots are located
// numerically and the one giving an Einstein Q is labelled as such. Checks
// whose preconditions fail are reported not-applicable.
SuiteReport integrability_check(const MetricGeometry& geom, const SolitonData& data,
                                std::span<const Point> points, double tolerance);
SuiteReport integrability_check(const ContactStructure& s, const SolitonData& data,
                                std::span<const Point> points, double tolerance);

// The chain of consequences of a soliton on a Sasakian manifold, each as a
// named check: £_V∇ and £_V R along ξ, the η/ξ relations, the η-Einstein
// form of Ric, r in terms of λ, λ = 2n+4, r = −2n, the null η-Einstein Ricci
// tensor, closed forms of £_V∇, £_V Ric, £_V g, £_V η, £_V ξ, £_V φ = 0,
// W = 0 and the D-homothetically fixed classification. Preconditions
// (Sasakian, soliton fit) are checks too; when they fail the conclusions are
// reported not-applicable.
SuiteReport theorem1_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                           double tolerance);

struct Lemma1Report {
  bool hypothesis = false;  // £_V φ = 0 on the sample
  double c = 0.0;
  double c_spread = 0.0;
  SuiteReport report;
};

// If £_V φ = 0: c from (£_V η)(ξ) per point, then £_V η = cη, £_V ξ = −cξ,
// £_V g = c(g + η⊗η) and the two intermediate identities (£_V g)(X,ξ) = 2cη(X),
// (£_V g)(X,φY) = c g(X,φY).
Lemma1Report lemma1_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                          double tolerance);

struct Theorem2Report {
  bool preconditions = false;
  bool automorphism = false;       // c = 0 and £_V g, £_V η, £_V ξ vanish
  bool fixed_k_contact = false;    // α = −2 and h = 0
  double c = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double h_norm = 0.0;
  SuiteReport report;
};

// Under an η-Einstein structure with £_V φ = 0 and V r = 0, either V is an
// infinitesimal automorphism or the structure is K-contact with α = −2. Also
// checks V α = V β = 0. Throws TheoremViolation when the preconditions hold
// and neither branch does.
Theorem2Report theorem2_suite(const ContactStructure& s, const TensorField& V, std::span<const Point> points,
                              double tolerance);

}  // namespace sasaki::soliton
