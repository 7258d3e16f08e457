#pragma once

#include <cstdint>

namespace sconn {

// Saturating path-count kernel: the arithmetic core of the counting
// verifier. One call processes a batch of up to kPathCountLanes target
// vertices at once; lane l of every row accumulates the number of paths
// from the row's vertex to target l, clamped at `cap`.
//
// Walking vertices in reverse topological order, the row of u is the
// lane-wise saturating sum of its successors' rows, where a target's own
// row carries a 1 in its lane (the empty path). This inner loop is plain
// data-parallel byte arithmetic, so it ships in two equivalent variants: a
// scalar reference and an AVX2 version selected at runtime. Both produce
// bit-identical count matrices.
inline constexpr std::int32_t kPathCountLanes = 32;

struct PathCountProblem {
  std::int32_t n = 0;
  const std::int32_t* out_offsets = nullptr;  // n+1 CSR offsets
  const std::int32_t* out_heads = nullptr;    // successor per CSR position
  const std::int32_t* rev_topo = nullptr;     // all n vertices, reverse topological
  const std::int32_t* lane_of = nullptr;      // per vertex: lane in [0,32) or -1
  std::uint8_t cap = 2;                       // clamp bound, >= 1
  std::uint8_t* counts = nullptr;             // n * kPathCountLanes, fully overwritten
};

using PathCountKernel = void (*)(const PathCountProblem&);

enum class KernelChoice { kAuto, kScalar, kAvx2 };

bool kernel_available(KernelChoice choice);

// Resolves kAuto to the widest available variant. Throws if the requested
// variant is unavailable on this build/CPU.
PathCountKernel pathcount_kernel(KernelChoice choice);

// Name of the variant the choice resolves to ("scalar" / "avx2").
const char* pathcount_kernel_name(KernelChoice choice);

namespace detail {
void pathcount_scalar(const PathCountProblem& p);
#if defined(SCONN_HAVE_AVX2_BUILD)
void pathcount_avx2(const PathCountProblem& p);
#endif
}  // namespace detail

}  // namespace sconn
