#include "sasaki/fields/tensor.hpp"

#include <cmath>

#include "sasaki/errors.hpp"

namespace sasaki::fields {

JetTensor jet_zeros(int dim, int up, int down, const jets::JetSpec& spec) {
  return JetTensor(dim, up, down, jets::Jet(spec));
}

int order_of(const JetTensor& t) { return t[0].order(); }

Tensor values(const JetTensor& t) {
  Tensor out(t.dim(), t.up(), t.down(), 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].value();
  return out;
}

JetTensor truncate(const JetTensor& t, int order) {
  if (order == order_of(t)) return t;
  JetTensor out = jet_zeros(t.dim(), t.up(), t.down(), jets::JetSpec{t.dim(), order});
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].truncate(order);
  return out;
}

JetTensor differentiate(const JetTensor& t, int var) {
  if (order_of(t) == 0) throw CapabilityError("derivative requested beyond jet order");
  JetTensor out = jet_zeros(t.dim(), t.up(), t.down(), jets::JetSpec{t.dim(), order_of(t) - 1});
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].differentiate(var);
  return out;
}

Tensor identity(int dim) {
  Tensor I = zeros(dim, 1, 1);
  for (int i = 0; i < dim; ++i) I(i, i) = 1.0;
  return I;
}

Tensor compose(const Tensor& A, const Tensor& B) {
  if (A.up() != 1 || A.down() != 1 || B.up() != 1 || B.down() != 1 || A.dim() != B.dim()) {
    throw InvalidArgument("compose expects two (1,1) tensors of equal dimension");
  }
  const int n = A.dim();
  Tensor C = zeros(n, 1, 1);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int b = 0; b < n; ++b) C(a, b) += A(a, c) * B(c, b);
  return C;
}

double trace(const Tensor& A) {
  if (A.rank() != 2) throw InvalidArgument("trace expects a rank-2 tensor");
  double t = 0.0;
  for (int i = 0; i < A.dim(); ++i) t += A(i, i);
  return t;
}

Tensor lower(const Tensor& g, const Tensor& T) {
  if (T.up() < 1) throw InvalidArgument("lower needs a contravariant index");
  const int n = T.dim();
  Tensor out = zeros(n, T.up() - 1, T.down() + 1);
  const std::size_t block = T.size() / static_cast<std::size_t>(n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (std::size_t r = 0; r < block; ++r) {
        out[static_cast<std::size_t>(a) * block + r] += g(a, c) * T[static_cast<std::size_t>(c) * block + r];
      }
  return out;
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (double v : t.data()) {
    const double a = std::abs(v);
    if (std::isnan(a) || a > m) m = a;
  }
  return m;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
  if (a.size() != b.size()) throw InvalidArgument("tensor size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    // NaN must not hide behind std::max
    if (std::isnan(d) || d > m) m = d;
  }
  return m;
}

}  // namespace sasaki::fields
