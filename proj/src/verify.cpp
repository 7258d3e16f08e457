#include "sconn/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "sconn/dfs.hpp"

namespace sconn {

namespace {

void require_acyclic(const DiGraph& g) {
  if (!is_acyclic(g)) throw std::invalid_argument("input is not acyclic");
}

// Vertices on the tree path root -> x, in order.
std::vector<VertexId> tree_path_vertices(const DiGraph& g, const DfsScratch& scratch,
                                         VertexId x) {
  std::vector<VertexId> path{x};
  while (scratch.parent_slot(x) >= 0) {
    x = g.edge_at(scratch.parent_slot(x)).tail;
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Tree edges between consecutive entries of vertices[from..].
std::vector<EdgeId> tree_path_edges(const DiGraph& g, const DfsScratch& scratch,
                                    const std::vector<VertexId>& vertices,
                                    std::size_t from) {
  std::vector<EdgeId> ids;
  for (std::size_t i = from + 1; i < vertices.size(); ++i) {
    ids.push_back(g.edge_at(scratch.parent_slot(vertices[i])).id);
  }
  return ids;
}

ViolationWitness witness_from_nontree_edge(const DiGraph& g, const DfsScratch& scratch,
                                           std::int32_t slot) {
  const Edge& e = g.edge_at(slot);
  const auto to_tail = tree_path_vertices(g, scratch, e.tail);
  const auto to_head = tree_path_vertices(g, scratch, e.head);
  // Both run through the root; trim to the deepest common ancestor.
  std::size_t common = 0;
  while (common + 1 < to_tail.size() && common + 1 < to_head.size() &&
         to_tail[common + 1] == to_head[common + 1]) {
    ++common;
  }
  ViolationWitness w;
  w.u = to_tail[common];
  w.v = e.head;
  w.path_a = tree_path_edges(g, scratch, to_head, common);
  w.path_b = tree_path_edges(g, scratch, to_tail, common);
  w.path_b.push_back(e.id);
  return w;
}

}  // namespace

DfsCheck check_by_dfs(const DiGraph& g) {
  require_acyclic(g);
  DfsScratch scratch;
  scratch.bind(g);
  std::int32_t offending_slot = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) != 0) continue;
    scratch.new_epoch();
    scratch.run(g, v, [&](std::int32_t slot, EdgeClass cls) {
      if (cls == EdgeClass::kTree) return true;
      offending_slot = slot;
      return false;
    });
    if (offending_slot >= 0) {
      return DfsCheck{false, witness_from_nontree_edge(g, scratch, offending_slot)};
    }
  }
  return DfsCheck{true, std::nullopt};
}

CountCheck check_by_counting(const DiGraph& g, std::uint8_t cap, KernelChoice kernel) {
  if (cap < 2) throw std::invalid_argument("saturation cap must be at least 2");
  const auto topo = topological_order(g);
  if (!topo) throw std::invalid_argument("input is not acyclic");

  const VertexId n = g.vertex_count();
  std::vector<std::int32_t> rev_topo(topo->rbegin(), topo->rend());
  std::vector<std::int32_t> lane_of(n, -1);
  std::vector<std::uint8_t> counts(static_cast<std::size_t>(n) * kPathCountLanes);
  const PathCountKernel run = pathcount_kernel(kernel);

  for (VertexId base = 0; base < n; base += kPathCountLanes) {
    const VertexId width = std::min<VertexId>(kPathCountLanes, n - base);
    for (VertexId l = 0; l < width; ++l) lane_of[base + l] = l;

    PathCountProblem p;
    p.n = n;
    p.out_offsets = g.csr_offsets().data();
    p.out_heads = g.csr_heads().data();
    p.rev_topo = rev_topo.data();
    p.lane_of = lane_of.data();
    p.cap = cap;
    p.counts = counts.data();
    run(p);

    for (VertexId u = 0; u < n; ++u) {
      const std::uint8_t* row = counts.data() + static_cast<std::size_t>(u) * kPathCountLanes;
      for (VertexId l = 0; l < width; ++l) {
        if (row[l] >= 2) {
          return CountCheck{false, CountViolation{u, base + l, row[l]}};
        }
      }
    }
    for (VertexId l = 0; l < width; ++l) lane_of[base + l] = -1;
  }
  return CountCheck{true, std::nullopt};
}

bool agree(const DiGraph& g) {
  return check_by_dfs(g).singly_connected == check_by_counting(g).singly_connected;
}

}  // namespace sconn
