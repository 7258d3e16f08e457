#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sconn/graph.hpp"

namespace sconn {

// Output of one edge-removal procedure. For every algorithm except algo4's
// literal variant, `result` equals remove_edges(input, removed) and is
// singly connected, so `removed` is a feasible solution for the input.
struct RemovalResult {
  std::string algorithm;
  std::vector<EdgeId> removed;   // ascending ids of the input graph
  DiGraph result;
  std::vector<VertexId> roots;   // DFS roots in execution order
  std::int32_t dfs_runs = 0;
  std::chrono::nanoseconds elapsed{0};
  // False only for algo4's literal variant: its returned graph keeps just
  // the phase-1 non-tree edges (everything else is discarded, not
  // "removed"), so `removed` applied to the input does not reproduce
  // `result` and certifies nothing about the input.
  bool certifies_input = true;
};

enum class Algo4Variant { kProse, kLiteral };

// Special case: acyclic, exactly one source, m = n. One DFS from the source
// leaves exactly one non-tree (cross or forward) edge; removing it is
// optimal. Each violated precondition raises its own error.
RemovalResult dfs_once(const DiGraph& g);

// One independent DFS per source (ascending); removes the union of their
// cross and forward edges.
RemovalResult algo1_from_sources(const DiGraph& g);

// Like algo1, but rooted at the larger of sources/sinks; when sinks win,
// runs on the reversed graph and reports removals over the original
// orientation. Ties keep the forward orientation.
RemovalResult algo2_sources_or_sinks(const DiGraph& g);

// Phase 1 keeps only the union of per-source DFS tree edges; phase 2 is
// algo1 on that subgraph. The removal set is everything absent from the
// final graph.
RemovalResult algo3_tree_edges(const DiGraph& g);

// Phase 1 collects cross/forward edges of one independent DFS per medial
// vertex (ascending). Prose variant: removes them and applies algo1 to the
// remainder. Literal variant: builds the graph (V, collected edges), applies
// algo1 to that, and returns it (see RemovalResult::certifies_input).
RemovalResult algo4_from_medials(const DiGraph& g,
                                 Algo4Variant variant = Algo4Variant::kProse);

struct BatchOutcome {
  std::vector<RemovalResult> results;
  std::vector<std::pair<std::string, std::string>> errors;  // (algorithm, message)
};

// algo1 .. algo4 (prose), plus dfs_once when its preconditions hold.
// Per-algorithm failures land in `errors` without aborting the batch.
BatchOutcome run_all(const DiGraph& g);

}  // namespace sconn
