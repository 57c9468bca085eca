#include <arm_neon.h>

#include "sasaki/jets/kernels.hpp"

namespace sasaki::jets::kernels {

namespace {

void add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale(const double* a, double s, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_n_f64(vld1q_f64(a + i), s));
  for (; i < n; ++i) out[i] = s * a[i];
}

void axpy(double s, const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // separate multiply and add: vmlaq/vfmaq would fuse and break bit equality
    const float64x2_t t = vmulq_n_f64(vld1q_f64(x + i), s);
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), t));
  }
  for (; i < n; ++i) {
    const double t = s * x[i];
    y[i] = y[i] + t;
  }
}

void gather_mul(const double* a, const double* b, const std::uint32_t* lhs,
                const std::uint32_t* rhs, double* out, std::size_t n) {
  std::size_t p = 0;
  for (; p + 2 <= n; p += 2) {
    const float64x2_t va = {a[lhs[p]], a[lhs[p + 1]]};
    const float64x2_t vb = {b[rhs[p]], b[rhs[p + 1]]};
    vst1q_f64(out + p, vmulq_f64(va, vb));
  }
  for (; p < n; ++p) out[p] = a[lhs[p]] * b[rhs[p]];
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable t{Backend::neon, add, sub, scale, axpy, gather_mul};
  return t;
}

}  // namespace sasaki::jets::kernels
