#include "sasaki/jets/jet.hpp"

#include <cmath>
#include <string>

#include "sasaki/errors.hpp"
#include "sasaki/jets/kernels.hpp"

namespace sasaki::jets {

namespace {

void require_same(const Jet& a, const Jet& b) {
  if (!(a.spec() == b.spec())) {
    throw InvalidArgument("jet spec mismatch: (dim " + std::to_string(a.dim()) + ", order " +
                          std::to_string(a.order()) + ") vs (dim " + std::to_string(b.dim()) +
                          ", order " + std::to_string(b.order()) + ")");
  }
}

// sum_k d[k] * delta^k with delta = a - a(0), evaluated by Horner's rule.
Jet compose(const Jet& a, const std::vector<double>& d) {
  Jet delta = a;
  delta.coeffs()[0] = 0.0;
  Jet r = Jet::constant(a.spec(), d.back());
  for (int k = static_cast<int>(d.size()) - 2; k >= 0; --k) {
    r = multiply(r, delta);
    r += d[k];
  }
  return r;
}

double inv_factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return 1.0 / f;
}

}  // namespace

Jet::Jet(const JetSpec& spec) : layout_(&layout_for(spec)), c_(layout_->size(), 0.0) {}

Jet Jet::constant(const JetSpec& spec, double value) {
  Jet j(spec);
  j.c_[0] = value;
  return j;
}

Jet Jet::variable(const JetSpec& spec, int index, double value) {
  if (index < 0 || index >= spec.dim) {
    throw InvalidArgument("variable index " + std::to_string(index) + " out of range for dim " +
                          std::to_string(spec.dim));
  }
  Jet j = constant(spec, value);
  if (spec.order >= 1) j.c_[1 + index] = 1.0;
  return j;
}

double Jet::coeff(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != dim()) {
    throw InvalidArgument("multi-index length does not match jet dimension");
  }
  int deg = 0;
  for (int e : alpha) {
    if (e < 0) throw InvalidArgument("negative exponent in multi-index");
    deg += e;
  }
  if (deg > order()) {
    throw InvalidArgument("multi-index degree " + std::to_string(deg) + " exceeds jet order " +
                          std::to_string(order()));
  }
  return c_[static_cast<std::size_t>(layout_->index_of(alpha))];
}

double Jet::derivative(const MultiIndex& alpha) const {
  const double c = coeff(alpha);
  return c * layout_->factorial(static_cast<std::size_t>(layout_->index_of(alpha)));
}

std::vector<double> Jet::gradient() const {
  if (order() < 1) throw CapabilityError("gradient requested from an order-0 jet");
  return {c_.begin() + 1, c_.begin() + 1 + dim()};
}

Jet Jet::differentiate(int var) const {
  if (var < 0 || var >= dim()) {
    throw InvalidArgument("derivative variable " + std::to_string(var) + " out of range");
  }
  if (order() == 0) {
    throw CapabilityError("derivative requested beyond jet order (order-0 jet)");
  }
  Jet out(JetSpec{dim(), order() - 1});
  for (std::size_t k = 0; k < out.c_.size(); ++k) {
    out.c_[k] = layout_->derivative_factor(var, k) * c_[layout_->derivative_source(var, k)];
  }
  return out;
}

Jet Jet::truncate(int new_order) const {
  if (new_order > order()) {
    throw CapabilityError("cannot raise jet order from " + std::to_string(order()) + " to " +
                          std::to_string(new_order));
  }
  if (new_order == order()) return *this;
  Jet out(JetSpec{dim(), new_order});
  std::copy(c_.begin(), c_.begin() + static_cast<long>(out.c_.size()), out.c_.begin());
  return out;
}

Jet Jet::operator-() const {
  Jet out(spec());
  kernels::active().scale(c_.data(), -1.0, out.c_.data(), c_.size());
  return out;
}

Jet& Jet::operator+=(const Jet& b) {
  require_same(*this, b);
  kernels::active().add(c_.data(), b.c_.data(), c_.data(), c_.size());
  return *this;
}

Jet& Jet::operator-=(const Jet& b) {
  require_same(*this, b);
  kernels::active().sub(c_.data(), b.c_.data(), c_.data(), c_.size());
  return *this;
}

Jet& Jet::operator*=(const Jet& b) { return *this = multiply(*this, b); }

Jet& Jet::operator/=(const Jet& b) {
  require_same(*this, b);
  return *this = multiply(*this, recip(b));
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  kernels::active().scale(c_.data(), s, c_.data(), c_.size());
  return *this;
}

Jet& Jet::operator/=(double s) {
  if (s == 0.0) throw SingularValue("jet divided by zero scalar");
  return *this *= (1.0 / s);
}

Jet& Jet::add_scaled(double s, const Jet& b) {
  require_same(*this, b);
  kernels::active().axpy(s, b.c_.data(), c_.data(), c_.size());
  return *this;
}

namespace {

// Pairwise coefficient products of a and b in product-table order.
const double* pair_products(const Layout& L, const double* a, const double* b) {
  const std::size_t np = L.pair_begin(L.size());
  thread_local std::vector<double> products;
  if (products.size() < np) products.resize(np);
  kernels::active().gather_mul(a, b, L.pair_lhs(), L.pair_rhs(), products.data(), np);
  return products.data();
}

}  // namespace

Jet multiply(const Jet& a, const Jet& b) {
  require_same(a, b);
  const Layout& L = *a.layout_;
  const double* products = pair_products(L, a.c_.data(), b.c_.data());
  Jet out(a.spec());
  for (std::size_t k = 0; k < L.size(); ++k) {
    double s = 0.0;
    for (std::size_t p = L.pair_begin(k); p < L.pair_begin(k + 1); ++p) s += products[p];
    out.c_[k] = s;
  }
  return out;
}

template <bool Subtract>
Jet& Jet::accumulate_product(const Jet& a, const Jet& b) {
  require_same(a, b);
  require_same(*this, a);
  const Layout& L = *layout_;
  const double* products = pair_products(L, a.c_.data(), b.c_.data());
  for (std::size_t k = 0; k < L.size(); ++k) {
    double s = 0.0;
    for (std::size_t p = L.pair_begin(k); p < L.pair_begin(k + 1); ++p) s += products[p];
    if constexpr (Subtract) {
      c_[k] -= s;
    } else {
      c_[k] += s;
    }
  }
  return *this;
}

Jet& Jet::add_product(const Jet& a, const Jet& b) { return accumulate_product<false>(a, b); }
Jet& Jet::sub_product(const Jet& a, const Jet& b) { return accumulate_product<true>(a, b); }

Jet operator/(double s, const Jet& a) { return recip(a) *= s; }

Jet arithmetic(const Jet& a, const Jet& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw InvalidArgument("unknown arithmetic op");
}

Jet transcend(const Jet& a, Transcendental fn) {
  const int order = a.order();
  const double x = a.value();
  std::vector<double> d(static_cast<std::size_t>(order) + 1);
  switch (fn) {
    case Transcendental::sin:
    case Transcendental::cos: {
      const double s = std::sin(x), c = std::cos(x);
      // derivatives of sin cycle through sin, cos, -sin, -cos
      const double cyc[4] = {s, c, -s, -c};
      const int shift = fn == Transcendental::sin ? 0 : 1;
      for (int k = 0; k <= order; ++k) d[k] = cyc[(k + shift) % 4] * inv_factorial(k);
      break;
    }
    case Transcendental::exp: {
      const double e = std::exp(x);
      for (int k = 0; k <= order; ++k) d[k] = e * inv_factorial(k);
      break;
    }
    case Transcendental::sqrt: {
      if (!(x > 0.0)) throw SingularValue("sqrt of a jet with non-positive constant term");
      // binom(1/2, k) * x^(1/2 - k)
      double binom = 1.0;
      double power = std::sqrt(x);
      for (int k = 0; k <= order; ++k) {
        d[k] = binom * power;
        binom *= (0.5 - k) / (k + 1);
        power /= x;
      }
      break;
    }
    case Transcendental::recip: {
      if (x == 0.0) throw SingularValue("reciprocal of a jet with zero constant term");
      double term = 1.0 / x;
      for (int k = 0; k <= order; ++k) {
        d[k] = term;
        term *= -1.0 / x;
      }
      break;
    }
  }
  return compose(a, d);
}

Jet sin(const Jet& a) { return transcend(a, Transcendental::sin); }
Jet cos(const Jet& a) { return transcend(a, Transcendental::cos); }
Jet exp(const Jet& a) { return transcend(a, Transcendental::exp); }
Jet sqrt(const Jet& a) { return transcend(a, Transcendental::sqrt); }
Jet recip(const Jet& a) { return transcend(a, Transcendental::recip); }

Jet pow(const Jet& a, int exponent) {
  if (exponent < 0) throw InvalidArgument("pow: negative exponent; use recip");
  Jet r = Jet::constant(a.spec(), 1.0);
  for (int i = 0; i < exponent; ++i) r = multiply(r, a);
  return r;
}

}  // namespace sasaki::jets
