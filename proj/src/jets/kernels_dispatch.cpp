#include <atomic>
#include <string>

#include "sasaki/errors.hpp"
#include "sasaki/jets/kernels.hpp"

namespace sasaki::jets::kernels {

namespace {

const KernelTable* widest() {
#if defined(SASAKI_HAVE_AVX2)
  if (supported(Backend::avx2)) return &avx2_table();
#endif
#if defined(SASAKI_HAVE_NEON)
  return &neon_table();
#endif
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{widest()};
  return current;
}

}  // namespace

bool supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(SASAKI_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(SASAKI_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table(Backend b) {
  if (!supported(b)) {
    throw InvalidArgument("kernel backend '" + std::string(name(b)) + "' is not available");
  }
  switch (b) {
#if defined(SASAKI_HAVE_AVX2)
    case Backend::avx2:
      return avx2_table();
#endif
#if defined(SASAKI_HAVE_NEON)
    case Backend::neon:
      return neon_table();
#endif
    default:
      return scalar_table();
  }
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void select(Backend b) { slot().store(&table(b), std::memory_order_release); }

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace sasaki::jets::kernels
