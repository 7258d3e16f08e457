#include "sconn/pathcount.hpp"

#include <stdexcept>

namespace sconn {

namespace {

bool avx2_supported() {
#if defined(SCONN_HAVE_AVX2_BUILD) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

}  // namespace

bool kernel_available(KernelChoice choice) {
  switch (choice) {
    case KernelChoice::kAuto:
    case KernelChoice::kScalar:
      return true;
    case KernelChoice::kAvx2:
      return avx2_supported();
  }
  return false;
}

PathCountKernel pathcount_kernel(KernelChoice choice) {
  if (choice == KernelChoice::kAuto) {
    choice = avx2_supported() ? KernelChoice::kAvx2 : KernelChoice::kScalar;
  }
  switch (choice) {
    case KernelChoice::kScalar:
      return &detail::pathcount_scalar;
    case KernelChoice::kAvx2:
#if defined(SCONN_HAVE_AVX2_BUILD)
      if (avx2_supported()) return &detail::pathcount_avx2;
#endif
      throw std::runtime_error("avx2 path-count kernel unavailable on this cpu/build");
    default:
      break;
  }
  throw std::logic_error("unreachable kernel choice");
}

const char* pathcount_kernel_name(KernelChoice choice) {
  if (choice == KernelChoice::kAuto) {
    choice = avx2_supported() ? KernelChoice::kAvx2 : KernelChoice::kScalar;
  }
  return choice == KernelChoice::kAvx2 ? "avx2" : "scalar";
}

}  // namespace sconn
