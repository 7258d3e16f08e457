#include "sconn/pathcount.hpp"

namespace sconn::detail {

void pathcount_scalar(const PathCountProblem& p) {
  constexpr std::int32_t kW = kPathCountLanes;
  const std::int32_t cap = p.cap;
  for (std::int32_t k = 0; k < p.n; ++k) {
    const std::int32_t u = p.rev_topo[k];
    std::uint8_t row[kW] = {};
    for (std::int32_t pos = p.out_offsets[u]; pos < p.out_offsets[u + 1]; ++pos) {
      const std::uint8_t* src = p.counts + static_cast<std::size_t>(p.out_heads[pos]) * kW;
      for (std::int32_t l = 0; l < kW; ++l) {
        const std::int32_t sum = row[l] + src[l];
        row[l] = static_cast<std::uint8_t>(sum > cap ? cap : sum);
      }
    }
    std::uint8_t* dst = p.counts + static_cast<std::size_t>(u) * kW;
    for (std::int32_t l = 0; l < kW; ++l) dst[l] = row[l];
    if (p.lane_of[u] >= 0) dst[p.lane_of[u]] = 1;
  }
}

}  // namespace sconn::detail
