#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sconn {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Sources (in-degree 0), sinks (out-degree 0), medials (both degrees
// positive). A degree-(0,0) vertex is both a source and a sink.
struct RootSets {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<VertexId> medials;
};

// Immutable directed graph over dense vertex ids [0, n). Edge ids are
// assigned once at build time and survive reversal and edge removal, so a
// removal set computed on a derived graph still names edges of the original
// graph. Out-adjacency of every vertex is ordered by ascending head id; all
// traversals in this library inherit that tie-breaking rule.
class DiGraph {
 public:
  DiGraph() = default;

  // Edge ids are assigned in input order. Rejects out-of-range endpoints,
  // self-loops, and duplicate (tail, head) pairs.
  static DiGraph build(VertexId n,
                       const std::vector<std::pair<VertexId, VertexId>>& edges);
  static DiGraph build(VertexId n,
                       std::initializer_list<std::pair<VertexId, VertexId>> edges);

  VertexId vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  // Live edges in ascending id order. A "slot" is an index into this span.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge_at(std::int32_t slot) const { return edges_[slot]; }

  // Slot for an edge id, or nullopt if the id is absent from this graph.
  std::optional<std::int32_t> slot_of_id(EdgeId id) const;

  std::int32_t out_begin(VertexId v) const { return out_offsets_[v]; }
  std::int32_t out_end(VertexId v) const { return out_offsets_[v + 1]; }

  // CSR arrays: positions [out_begin(v), out_end(v)) of csr_slots() hold the
  // slots of v's out-edges, ascending by head; csr_heads() mirrors the head
  // vertex per position.
  std::span<const std::int32_t> csr_offsets() const { return out_offsets_; }
  std::span<const std::int32_t> csr_slots() const { return out_slots_; }
  std::span<const VertexId> csr_heads() const { return out_heads_; }

  std::int32_t in_degree(VertexId v) const { return in_degree_[v]; }
  std::int32_t out_degree(VertexId v) const { return out_degree_[v]; }
  std::span<const std::int32_t> in_degrees() const { return in_degree_; }
  std::span<const std::int32_t> out_degrees() const { return out_degree_; }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  friend DiGraph reverse(const DiGraph& g);
  friend DiGraph remove_edges(const DiGraph& g, std::span<const EdgeId> removed);

 private:
  static DiGraph from_edges(VertexId n, std::vector<Edge> edges);
  void rebuild_adjacency();

  VertexId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> out_offsets_{0};
  std::vector<std::int32_t> out_slots_;
  std::vector<VertexId> out_heads_;
  std::vector<std::int32_t> in_degree_;
  std::vector<std::int32_t> out_degree_;
};

// Every edge (id, tail, head) becomes (id, head, tail); ids and n unchanged.
DiGraph reverse(const DiGraph& g);

RootSets root_sets(const DiGraph& g);

// Subgraph (V, E minus removed). Surviving edges keep their ids; degree
// tables and adjacency are recomputed. Duplicate ids in `removed` are
// tolerated; unknown ids are rejected.
DiGraph remove_edges(const DiGraph& g, std::span<const EdgeId> removed);
DiGraph remove_edges(const DiGraph& g, std::initializer_list<EdgeId> removed);

// Kahn's algorithm with ascending-id tie-breaking; nullopt if cyclic.
std::optional<std::vector<VertexId>> topological_order(const DiGraph& g);

bool is_acyclic(const DiGraph& g);

}  // namespace sconn
