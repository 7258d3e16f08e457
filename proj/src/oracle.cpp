#include "sconn/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "sconn/rng.hpp"
#include "sconn/verify.hpp"

namespace sconn {

namespace {

std::uint64_t pack_pair(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

[[noreturn]] void infeasible(const std::string& why) {
  throw std::invalid_argument("infeasible generator spec: " + why);
}

// Sample `want` distinct candidate pairs. Sparse requests use rejection;
// dense ones enumerate every candidate and shuffle. The cutover is part of
// the deterministic output contract, so it is a fixed rule, not a heuristic.
template <typename EnumerateAll, typename DrawOne>
void sample_pairs(std::int64_t want, std::int64_t universe, Rng& rng,
                  std::unordered_set<std::uint64_t>& taken,
                  std::vector<std::pair<VertexId, VertexId>>& out,
                  EnumerateAll&& enumerate_all, DrawOne&& draw_one) {
  if (2 * want >= universe) {
    std::vector<std::pair<VertexId, VertexId>> all;
    enumerate_all(all);
    std::vector<std::pair<VertexId, VertexId>> fresh;
    fresh.reserve(all.size());
    for (const auto& pr : all) {
      if (!taken.count(pack_pair(pr.first, pr.second))) fresh.push_back(pr);
    }
    rng.shuffle(fresh);
    for (std::int64_t i = 0; i < want; ++i) {
      taken.insert(pack_pair(fresh[i].first, fresh[i].second));
      out.push_back(fresh[i]);
    }
    return;
  }
  std::int64_t got = 0;
  while (got < want) {
    const auto pr = draw_one();
    if (pr.first < 0) continue;
    if (taken.insert(pack_pair(pr.first, pr.second)).second) {
      out.push_back(pr);
      ++got;
    }
  }
}

DiGraph generate_general_dag(const GenSpec& spec) {
  const VertexId n = spec.n;
  const std::int64_t max_pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (spec.m < 0 || spec.m > max_pairs) {
    infeasible("dag family needs 0 <= m <= n(n-1)/2 = " + std::to_string(max_pairs));
  }
  Rng rng(spec.seed);
  // rank r holds vertex perm[r]; edges go from lower to higher rank.
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  std::unordered_set<std::uint64_t> taken;
  std::vector<std::pair<VertexId, VertexId>> rank_pairs;
  sample_pairs(
      spec.m, max_pairs, rng, taken, rank_pairs,
      [&](std::vector<std::pair<VertexId, VertexId>>& all) {
        for (VertexId a = 0; a < n; ++a)
          for (VertexId b = a + 1; b < n; ++b) all.push_back({a, b});
      },
      [&]() -> std::pair<VertexId, VertexId> {
        const auto a = static_cast<VertexId>(rng.below(n));
        const auto b = static_cast<VertexId>(rng.below(n));
        if (a == b) return {-1, -1};
        return {std::min(a, b), std::max(a, b)};
      });

  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(rank_pairs.size());
  for (const auto& [r1, r2] : rank_pairs) edges.push_back({perm[r1], perm[r2]});
  return DiGraph::build(n, edges);
}

DiGraph generate_theorem1(const GenSpec& spec) {
  const VertexId n = spec.n;
  if (n < 3) infeasible("theorem1 family needs n >= 3");
  if (spec.m != n) infeasible("theorem1 family fixes m = n");
  Rng rng(spec.seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(n);
  std::unordered_set<std::uint64_t> taken;
  // Arborescence rooted at 0: every non-root picks a lower-id parent, which
  // keeps vertex 0 the unique source.
  for (VertexId v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(rng.below(v));
    edges.push_back({parent, v});
    taken.insert(pack_pair(parent, v));
  }
  for (;;) {
    const auto a = static_cast<VertexId>(rng.below(n));
    const auto b = static_cast<VertexId>(rng.below(n));
    if (a == b) continue;
    const VertexId lo = std::min(a, b), hi = std::max(a, b);
    if (taken.count(pack_pair(lo, hi))) continue;
    edges.push_back({lo, hi});
    break;
  }
  return DiGraph::build(n, edges);
}

DiGraph generate_layered(const GenSpec& spec) {
  const VertexId n = spec.n;
  const VertexId k = spec.sources;
  if (k < 1 || k > n) infeasible("layered family needs 1 <= sources <= n");
  const std::int64_t forced = n - k;
  const std::int64_t max_pairs =
      static_cast<std::int64_t>(n) * (n - 1) / 2 - static_cast<std::int64_t>(k) * (k - 1) / 2;
  if (spec.m < forced || spec.m > max_pairs) {
    infeasible("layered family needs n-sources <= m <= " + std::to_string(max_pairs));
  }
  Rng rng(spec.seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(spec.m));
  std::unordered_set<std::uint64_t> taken;
  // Source layer [0, k); every later vertex keeps at least one in-edge from
  // an earlier vertex, so the source count is exactly k.
  for (VertexId v = k; v < n; ++v) {
    const auto parent = static_cast<VertexId>(rng.below(v));
    edges.push_back({parent, v});
    taken.insert(pack_pair(parent, v));
  }
  sample_pairs(
      spec.m - forced, max_pairs, rng, taken, edges,
      [&](std::vector<std::pair<VertexId, VertexId>>& all) {
        for (VertexId a = 0; a < n; ++a)
          for (VertexId b = std::max(a + 1, k); b < n; ++b) all.push_back({a, b});
      },
      [&]() -> std::pair<VertexId, VertexId> {
        const auto a = static_cast<VertexId>(rng.below(n));
        const auto b = static_cast<VertexId>(rng.below(n));
        if (a == b) return {-1, -1};
        const VertexId lo = std::min(a, b), hi = std::max(a, b);
        if (hi < k) return {-1, -1};
        return {lo, hi};
      });
  return DiGraph::build(n, edges);
}

}  // namespace

const char* to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::kGeneralDag: return "dag";
    case GraphFamily::kTheorem1: return "theorem1";
    case GraphFamily::kLayered: return "layered";
  }
  return "?";
}

DiGraph generate(const GenSpec& spec) {
  if (spec.n < 0) infeasible("n must be non-negative");
  switch (spec.family) {
    case GraphFamily::kGeneralDag: return generate_general_dag(spec);
    case GraphFamily::kTheorem1: return generate_theorem1(spec);
    case GraphFamily::kLayered: return generate_layered(spec);
  }
  infeasible("unknown family");
}

BruteForceResult brute_force_min_removal(const DiGraph& g, std::int32_t budget) {
  if (!is_acyclic(g)) throw std::invalid_argument("input is not acyclic");
  const auto m = static_cast<std::int32_t>(g.edge_count());
  std::vector<EdgeId> ids;
  ids.reserve(m);
  for (const Edge& e : g.edges()) ids.push_back(e.id);

  const std::int32_t limit = std::min(budget, m);
  for (std::int32_t k = 0; k <= limit; ++k) {
    // k-combinations of ids in lexicographic order.
    std::vector<std::int32_t> pick(k);
    for (std::int32_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      std::vector<EdgeId> subset;
      subset.reserve(k);
      for (std::int32_t i : pick) subset.push_back(ids[i]);
      if (check_by_counting(remove_edges(g, subset)).singly_connected) {
        return BruteForceResult{false, k, subset};
      }
      std::int32_t i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::int32_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return BruteForceResult{true, -1, {}};
}

}  // namespace sconn
