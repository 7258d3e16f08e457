#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sconn/graph.hpp"
#include "sconn/pathcount.hpp"

namespace sconn {

// Two distinct simple paths u -> v, each an edge-id sequence. The paths may
// share edges; differing in at least one edge is what breaks single
// connectivity.
struct ViolationWitness {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<EdgeId> path_a;
  std::vector<EdgeId> path_b;
};

struct DfsCheck {
  bool singly_connected = false;
  std::optional<ViolationWitness> witness;
};

struct CountViolation {
  VertexId u = 0;
  VertexId v = 0;
  std::uint8_t count = 0;  // saturated path count, >= 2
};

struct CountCheck {
  bool singly_connected = false;
  std::optional<CountViolation> violation;
};

// A DAG is singly connected iff every source-rooted DFS classifies all
// reachable edges as tree edges. Stops at the first offending edge and
// reconstructs a witness pair of paths from the tree parents. Requires an
// acyclic input.
DfsCheck check_by_dfs(const DiGraph& g);

// Independent arithmetic oracle: all-pairs path counts saturated at `cap`
// (>= 2), computed in reverse topological order over batches of
// kPathCountLanes target vertices. Requires an acyclic input.
CountCheck check_by_counting(const DiGraph& g, std::uint8_t cap = 2,
                             KernelChoice kernel = KernelChoice::kAuto);

// Meta-check: do both deciders return the same verdict?
bool agree(const DiGraph& g);

}  // namespace sconn
