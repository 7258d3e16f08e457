#pragma once

#include <cstdint>
#include <vector>

#include "sconn/graph.hpp"

namespace sconn {

enum class GraphFamily {
  kGeneralDag,  // random rank order, m distinct rank-increasing edges
  kTheorem1,    // one source, m = n: random arborescence plus one extra edge
  kLayered,     // exactly `sources` in-degree-0 vertices feeding a random body
};

const char* to_string(GraphFamily family);

struct GenSpec {
  GraphFamily family = GraphFamily::kGeneralDag;
  VertexId n = 0;
  std::int64_t m = 0;       // must equal n for kTheorem1
  std::uint64_t seed = 0;
  VertexId sources = 1;     // kLayered only: width of the source layer
};

// Deterministic per spec: the same GenSpec yields the same edge list on any
// platform (see Rng). Throws on an infeasible spec.
DiGraph generate(const GenSpec& spec);

struct BruteForceResult {
  bool exhausted = false;
  std::int32_t size = -1;           // valid when !exhausted
  std::vector<EdgeId> removal;      // lexicographically-first optimum
};

// Exact minimum removal set by subset enumeration: cardinality 0, 1, ... up
// to `budget`, lexicographic within a cardinality, feasibility decided by
// check_by_counting. Intended for m <= ~20. Requires an acyclic input.
BruteForceResult brute_force_min_removal(const DiGraph& g, std::int32_t budget);

}  // namespace sconn
