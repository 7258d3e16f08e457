#include "sconn/dfs.hpp"

#include <stdexcept>
#include <string>

namespace sconn {

const char* to_string(EdgeClass cls) {
  switch (cls) {
    case EdgeClass::kUnclassified: return "unclassified";
    case EdgeClass::kTree: return "tree";
    case EdgeClass::kForward: return "forward";
    case EdgeClass::kCross: return "cross";
    case EdgeClass::kBack: return "back";
  }
  return "?";
}

void DfsScratch::bind(const DiGraph& g) {
  mark_.assign(g.vertex_count(), -1);
  disc_.assign(g.vertex_count(), -1);
  fin_.assign(g.vertex_count(), -1);
  parent_.assign(g.vertex_count(), -1);
  epoch_ = 0;
  time_ = 0;
}

void DfsScratch::new_epoch() {
  ++epoch_;
  time_ = 0;
}

DfsRun classify_from_root(const DiGraph& g, VertexId root) {
  if (root < 0 || root >= g.vertex_count()) {
    throw std::invalid_argument("root out of range: " + std::to_string(root));
  }
  DfsRun run;
  run.root = root;
  run.discovery.assign(g.vertex_count(), -1);
  run.finish.assign(g.vertex_count(), -1);
  run.parent_slot.assign(g.vertex_count(), -1);
  run.edge_class.assign(static_cast<std::size_t>(g.edge_count()),
                        EdgeClass::kUnclassified);

  DfsScratch scratch;
  scratch.bind(g);
  scratch.new_epoch();
  scratch.run(g, root, [&](std::int32_t slot, EdgeClass cls) {
    run.edge_class[slot] = cls;
    return true;
  });
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!scratch.visited(v)) continue;
    run.discovery[v] = scratch.discovery(v);
    run.finish[v] = scratch.finish(v);
    run.parent_slot[v] = scratch.parent_slot(v);
    ++run.visited_count;
  }
  return run;
}

std::vector<EdgeId> nontree_cf_edges(const DiGraph& g, const DfsRun& run) {
  std::vector<EdgeId> out;
  const auto edges = g.edges();
  for (std::size_t slot = 0; slot < run.edge_class.size(); ++slot) {
    const EdgeClass cls = run.edge_class[slot];
    if (cls == EdgeClass::kCross || cls == EdgeClass::kForward) {
      out.push_back(edges[slot].id);
    }
  }
  return out;
}

}  // namespace sconn
