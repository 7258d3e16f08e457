#include "sconn/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sconn {

namespace {

std::uint64_t pack_pair(VertexId tail, VertexId head) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
         static_cast<std::uint32_t>(head);
}

}  // namespace

DiGraph DiGraph::build(VertexId n,
                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<Edge> list;
  list.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  EdgeId next_id = 0;
  for (const auto& [tail, head] : edges) {
    if (tail < 0 || tail >= n || head < 0 || head >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(tail) + ", " + std::to_string(head) +
                                  ") with n=" + std::to_string(n));
    }
    if (tail == head) {
      throw std::invalid_argument("self-loop rejected: (" + std::to_string(tail) +
                                  ", " + std::to_string(head) + ")");
    }
    if (!seen.insert(pack_pair(tail, head)).second) {
      throw std::invalid_argument("duplicate edge rejected: (" + std::to_string(tail) +
                                  ", " + std::to_string(head) + ")");
    }
    list.push_back(Edge{next_id++, tail, head});
  }
  return from_edges(n, std::move(list));
}

DiGraph DiGraph::build(VertexId n,
                       std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build(n, std::vector<std::pair<VertexId, VertexId>>(edges));
}

DiGraph DiGraph::from_edges(VertexId n, std::vector<Edge> edges) {
  DiGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.rebuild_adjacency();
  return g;
}

void DiGraph::rebuild_adjacency() {
  const auto m = static_cast<std::int32_t>(edges_.size());
  out_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  in_degree_.assign(n_, 0);
  out_degree_.assign(n_, 0);
  for (const Edge& e : edges_) {
    ++out_degree_[e.tail];
    ++in_degree_[e.head];
  }
  for (VertexId v = 0; v < n_; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + out_degree_[v];
  }
  // Two stable counting passes (by head, then by tail) leave each tail
  // block ascending by head; heads are unique per tail, so the order is
  // total, and no comparison sort is needed.
  std::vector<std::int32_t> cursor(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) ++cursor[e.head + 1];
  for (VertexId v = 0; v < n_; ++v) cursor[v + 1] += cursor[v];
  std::vector<std::int32_t> by_head(m);
  for (std::int32_t slot = 0; slot < m; ++slot) {
    by_head[cursor[edges_[slot].head]++] = slot;
  }
  out_slots_.resize(m);
  out_heads_.resize(m);
  cursor.assign(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::int32_t idx = 0; idx < m; ++idx) {
    const std::int32_t slot = by_head[idx];
    const std::int32_t pos = cursor[edges_[slot].tail]++;
    out_slots_[pos] = slot;
    out_heads_[pos] = edges_[slot].head;
  }
}

std::optional<std::int32_t> DiGraph::slot_of_id(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId want) { return e.id < want; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::int32_t>(it - edges_.begin());
}

DiGraph reverse(const DiGraph& g) {
  std::vector<Edge> flipped = g.edges_;
  for (Edge& e : flipped) std::swap(e.tail, e.head);
  return DiGraph::from_edges(g.n_, std::move(flipped));
}

RootSets root_sets(const DiGraph& g) {
  RootSets r;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const bool src = g.in_degree(v) == 0;
    const bool sink = g.out_degree(v) == 0;
    if (src) r.sources.push_back(v);
    if (sink) r.sinks.push_back(v);
    if (!src && !sink) r.medials.push_back(v);
  }
  return r;
}

DiGraph remove_edges(const DiGraph& g, std::span<const EdgeId> removed) {
  std::vector<bool> drop(g.edges_.size(), false);
  for (EdgeId id : removed) {
    auto slot = g.slot_of_id(id);
    if (!slot) throw std::invalid_argument("unknown edge id: " + std::to_string(id));
    drop[*slot] = true;
  }
  std::vector<Edge> kept;
  kept.reserve(g.edges_.size());
  for (std::size_t slot = 0; slot < g.edges_.size(); ++slot) {
    if (!drop[slot]) kept.push_back(g.edges_[slot]);
  }
  return DiGraph::from_edges(g.n_, std::move(kept));
}

DiGraph remove_edges(const DiGraph& g, std::initializer_list<EdgeId> removed) {
  return remove_edges(g, std::span<const EdgeId>(removed.begin(), removed.size()));
}

std::optional<std::vector<VertexId>> topological_order(const DiGraph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::int32_t> pending(g.in_degrees().begin(), g.in_degrees().end());
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::int32_t pos = g.out_begin(v); pos < g.out_end(v); ++pos) {
      const VertexId w = g.csr_heads()[pos];
      if (--pending[w] == 0) ready.push(w);
    }
  }
  if (static_cast<VertexId>(order.size()) != n) return std::nullopt;
  return order;
}

bool is_acyclic(const DiGraph& g) { return topological_order(g).has_value(); }

}  // namespace sconn
