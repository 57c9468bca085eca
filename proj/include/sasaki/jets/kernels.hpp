#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Coefficient-level kernels behind jet arithmetic. Every backend computes
// bit-identical results: no fused multiply-add, and reductions stay in the
// scalar segment sum of the caller, so switching backends never changes a
// report.

namespace sasaki::jets::kernels {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
  Backend backend;
  // out[i] = a[i] + b[i]
  void (*add)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = a[i] - b[i]
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  // out[i] = s * a[i]
  void (*scale)(const double* a, double s, double* out, std::size_t n);
  // y[i] = y[i] + s * x[i]   (rounded product, then rounded sum)
  void (*axpy)(double s, const double* x, double* y, std::size_t n);
  // out[p] = a[lhs[p]] * b[rhs[p]]
  void (*gather_mul)(const double* a, const double* b, const std::uint32_t* lhs,
                     const std::uint32_t* rhs, double* out, std::size_t n);
};

const KernelTable& scalar_table();
#if defined(SASAKI_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(SASAKI_HAVE_NEON)
const KernelTable& neon_table();
#endif

// True when the backend was compiled in and the running CPU supports it.
bool supported(Backend b);

// The table jet arithmetic currently uses. Selected on first use: the widest
// supported backend.
const KernelTable& active();

// Forces a backend (tests use this to compare backends). Throws
// InvalidArgument if unsupported.
void select(Backend b);

const KernelTable& table(Backend b);

std::string_view name(Backend b);

}  // namespace sasaki::jets::kernels
