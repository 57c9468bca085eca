#include "sasaki/jets/kernels.hpp"

namespace sasaki::jets::kernels {

namespace {

void add(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void scale(const double* a, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = s * a[i];
}

void axpy(double s, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double t = s * x[i];
    y[i] = y[i] + t;
  }
}

void gather_mul(const double* a, const double* b, const std::uint32_t* lhs,
                const std::uint32_t* rhs, double* out, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p) out[p] = a[lhs[p]] * b[rhs[p]];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable t{Backend::scalar, add, sub, scale, axpy, gather_mul};
  return t;
}

}  // namespace sasaki::jets::kernels
