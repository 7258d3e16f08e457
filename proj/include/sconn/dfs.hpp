#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sconn/graph.hpp"

namespace sconn {

enum class EdgeClass : std::uint8_t { kUnclassified = 0, kTree, kForward, kCross, kBack };

const char* to_string(EdgeClass cls);

// One rooted depth-first traversal. Neighbors are explored in ascending
// head-id order; discovery and finish stamps share a single counter starting
// at 0. An edge is classified iff its tail was visited.
struct DfsRun {
  VertexId root = 0;
  std::vector<std::int32_t> discovery;    // per vertex, -1 if unvisited
  std::vector<std::int32_t> finish;       // per vertex, -1 if unvisited
  std::vector<std::int32_t> parent_slot;  // tree-edge slot, -1 for root/unvisited
  std::vector<EdgeClass> edge_class;      // per slot of g.edges()
  std::int32_t visited_count = 0;
};

// Reusable traversal state. new_epoch() forgets all visited state in O(1)
// and restarts stamps at 0; calling run() repeatedly without a new epoch
// grows a DFS forest instead (stamps keep counting, visited roots are
// skipped), which is what whole-graph back-edge removal needs.
class DfsScratch {
 public:
  void bind(const DiGraph& g);
  void new_epoch();

  bool visited(VertexId v) const { return mark_[v] == epoch_; }
  std::int32_t discovery(VertexId v) const { return disc_[v]; }
  std::int32_t finish(VertexId v) const { return fin_[v]; }
  std::int32_t parent_slot(VertexId v) const { return parent_[v]; }

  // Iterative DFS from root. visit(slot, cls) runs for every explored edge;
  // returning false aborts the traversal. No-op if root is already visited
  // in the current epoch.
  template <typename Visitor>
  void run(const DiGraph& g, VertexId root, Visitor&& visit) {
    if (mark_[root] == epoch_) return;
    mark_[root] = epoch_;
    disc_[root] = time_++;
    fin_[root] = -1;
    parent_[root] = -1;
    stack_.clear();
    stack_.push_back({root, g.out_begin(root)});
    const auto slots = g.csr_slots();
    const auto heads = g.csr_heads();
    while (!stack_.empty()) {
      auto& top = stack_.back();
      const VertexId v = top.first;
      if (top.second == g.out_end(v)) {
        fin_[v] = time_++;
        stack_.pop_back();
        continue;
      }
      const VertexId w = heads[top.second];
      const std::int32_t slot = slots[top.second++];
      EdgeClass cls;
      if (mark_[w] != epoch_) {
        cls = EdgeClass::kTree;
        mark_[w] = epoch_;
        disc_[w] = time_++;
        fin_[w] = -1;
        parent_[w] = slot;
        stack_.push_back({w, g.out_begin(w)});
      } else if (fin_[w] < 0) {
        cls = EdgeClass::kBack;
      } else {
        cls = disc_[w] > disc_[v] ? EdgeClass::kForward : EdgeClass::kCross;
      }
      if (!visit(slot, cls)) return;
    }
  }

 private:
  std::vector<std::int32_t> mark_;
  std::vector<std::int32_t> disc_;
  std::vector<std::int32_t> fin_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<VertexId, std::int32_t>> stack_;
  std::int32_t epoch_ = 0;
  std::int32_t time_ = 0;
};

// Fresh-state DFS from root with full per-edge classification.
DfsRun classify_from_root(const DiGraph& g, VertexId root);

// CROSS and FORWARD edge ids of a run, ascending.
std::vector<EdgeId> nontree_cf_edges(const DiGraph& g, const DfsRun& run);

}  // namespace sconn
