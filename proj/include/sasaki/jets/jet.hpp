#pragma once

#include <span>
#include <vector>

#include "sasaki/jets/layout.hpp"

namespace sasaki::jets {

/// Truncated multivariate Taylor expansion of a scalar at a point.
///
/// Coefficient k multiplies (x - p)^monomial(k); the true partial derivative
/// is coefficient * multi-index factorial (see derivative()). Jets are plain
/// values: every operation returns a new jet and nothing is shared.
///
/// Binary operations require identical specs and throw InvalidArgument
/// otherwise; use truncate() to align orders explicitly.
class Jet {
 public:
  explicit Jet(const JetSpec& spec);

  static Jet constant(const JetSpec& spec, double value);
  // x_index seeded at `value`: constant term value, d/dx_index = 1.
  static Jet variable(const JetSpec& spec, int index, double value);

  const JetSpec& spec() const { return layout_->spec(); }
  const Layout& layout() const { return *layout_; }
  int dim() const { return spec().dim; }
  int order() const { return spec().order; }

  double value() const { return c_[0]; }
  std::span<const double> coeffs() const { return c_; }
  std::span<double> coeffs() { return c_; }

  double coeff(const MultiIndex& alpha) const;
  // Partial derivative d^|alpha| f / dx^alpha at the expansion point.
  double derivative(const MultiIndex& alpha) const;
  // First partial derivatives, one per variable.
  std::vector<double> gradient() const;

  // d/dx_var as a jet of one lower order. Throws CapabilityError on an
  // order-0 jet.
  Jet differentiate(int var) const;
  // Drops all coefficients above `order` (order <= this->order()).
  Jet truncate(int order) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& b);
  Jet& operator-=(const Jet& b);
  Jet& operator*=(const Jet& b);
  Jet& operator/=(const Jet& b);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);
  Jet& operator/=(double s);

  // this += s * b
  Jet& add_scaled(double s, const Jet& b);
  // this += a * b without materializing the product
  Jet& add_product(const Jet& a, const Jet& b);
  // this -= a * b
  Jet& sub_product(const Jet& a, const Jet& b);

 private:
  friend Jet multiply(const Jet& a, const Jet& b);
  template <bool Subtract>
  Jet& accumulate_product(const Jet& a, const Jet& b);
  const Layout* layout_;
  std::vector<double> c_;
};

Jet multiply(const Jet& a, const Jet& b);

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(const Jet& a, const Jet& b) { return multiply(a, b); }
inline Jet operator/(Jet a, const Jet& b) { return a /= b; }
inline Jet operator+(Jet a, double s) { return a += s; }
inline Jet operator+(double s, Jet a) { return a += s; }
inline Jet operator-(Jet a, double s) { return a -= s; }
inline Jet operator-(double s, const Jet& a) { return (-a) += s; }
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }
inline Jet operator/(Jet a, double s) { return a /= s; }
Jet operator/(double s, const Jet& a);

enum class ArithOp { add, sub, mul, div };
Jet arithmetic(const Jet& a, const Jet& b, ArithOp op);

enum class Transcendental { sin, cos, exp, sqrt, recip };
// Univariate Taylor composition fn(a). Throws SingularValue when the constant
// term lies outside the domain of fn (sqrt: must be positive; recip: nonzero).
Jet transcend(const Jet& a, Transcendental fn);

Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);
Jet sqrt(const Jet& a);
Jet recip(const Jet& a);
Jet pow(const Jet& a, int exponent);  // exponent >= 0

// Constant jet sharing the spec of `like`.
inline Jet constant_like(const Jet& like, double value) { return Jet::constant(like.spec(), value); }

}  // namespace sasaki::jets
