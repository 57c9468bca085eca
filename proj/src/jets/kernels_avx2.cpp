// Compiled with -mavx2. Nothing here may be called unless the dispatcher has
// confirmed AVX2 support at run time.
#include <immintrin.h>

#include "sasaki/jets/kernels.hpp"

namespace sasaki::jets::kernels {

namespace {

void add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale(const double* a, double s, double* out, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, _mm256_loadu_pd(a + i)));
  }
  for (; i < n; ++i) out[i] = s * a[i];
}

void axpy(double s, const double* x, double* y, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_mul_pd(vs, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), t));
  }
  for (; i < n; ++i) {
    const double t = s * x[i];
    y[i] = y[i] + t;
  }
}

void gather_mul(const double* a, const double* b, const std::uint32_t* lhs,
                const std::uint32_t* rhs, double* out, std::size_t n) {
  std::size_t p = 0;
  for (; p + 4 <= n; p += 4) {
    const __m128i il = _mm_loadu_si128(reinterpret_cast<const __m128i*>(lhs + p));
    const __m128i ir = _mm_loadu_si128(reinterpret_cast<const __m128i*>(rhs + p));
    const __m256d va = _mm256_i32gather_pd(a, il, 8);
    const __m256d vb = _mm256_i32gather_pd(b, ir, 8);
    _mm256_storeu_pd(out + p, _mm256_mul_pd(va, vb));
  }
  for (; p < n; ++p) out[p] = a[lhs[p]] * b[rhs[p]];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable t{Backend::avx2, add, sub, scale, axpy, gather_mul};
  return t;
}

}  // namespace sasaki::jets::kernels
