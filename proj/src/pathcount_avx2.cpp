#include "sconn/pathcount.hpp"

#if defined(SCONN_HAVE_AVX2_BUILD)

#include <immintrin.h>

namespace sconn::detail {

// Same schedule as the scalar reference; rows are one __m256i of 32 u8
// lanes. adds_epu8 saturates at 255 before the min, which matches the
// scalar min(cap, a+b) for every cap <= 255 because lane values never
// exceed cap.
void pathcount_avx2(const PathCountProblem& p) {
  const __m256i capv = _mm256_set1_epi8(static_cast<char>(p.cap));
  for (std::int32_t k = 0; k < p.n; ++k) {
    const std::int32_t u = p.rev_topo[k];
    __m256i row = _mm256_setzero_si256();
    for (std::int32_t pos = p.out_offsets[u]; pos < p.out_offsets[u + 1]; ++pos) {
      const auto* src = reinterpret_cast<const __m256i*>(
          p.counts + static_cast<std::size_t>(p.out_heads[pos]) * kPathCountLanes);
      row = _mm256_min_epu8(_mm256_adds_epu8(row, _mm256_loadu_si256(src)), capv);
    }
    auto* dst = reinterpret_cast<__m256i*>(
        p.counts + static_cast<std::size_t>(u) * kPathCountLanes);
    _mm256_storeu_si256(dst, row);
    if (p.lane_of[u] >= 0) {
      p.counts[static_cast<std::size_t>(u) * kPathCountLanes + p.lane_of[u]] = 1;
    }
  }
}

}  // namespace sconn::detail

#endif  // SCONN_HAVE_AVX2_BUILD
