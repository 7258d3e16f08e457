#include "sconn/algorithms.hpp"

#include <algorithm>
#include <stdexcept>

#include "sconn/dfs.hpp"

namespace sconn {

namespace {

using Clock = std::chrono::steady_clock;

void require_acyclic(const DiGraph& g, const char* algorithm) {
  if (!is_acyclic(g)) {
    throw std::invalid_argument(std::string(algorithm) + ": input is not acyclic");
  }
}

std::vector<VertexId> vertices_with_zero(std::span<const std::int32_t> degrees) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(degrees.size()); ++v) {
    if (degrees[v] == 0) out.push_back(v);
  }
  return out;
}

// Union of cross/forward edge ids over one independent DFS per root, in
// root order. Ids come out ascending.
std::vector<EdgeId> collect_cf_union(const DiGraph& g, const std::vector<VertexId>& roots,
                                     DfsScratch& scratch) {
  std::vector<bool> in_union(static_cast<std::size_t>(g.edge_count()), false);
  for (VertexId root : roots) {
    scratch.new_epoch();
    scratch.run(g, root, [&](std::int32_t slot, EdgeClass cls) {
      if (cls == EdgeClass::kCross || cls == EdgeClass::kForward) in_union[slot] = true;
      return true;
    });
  }
  std::vector<EdgeId> ids;
  for (std::size_t slot = 0; slot < in_union.size(); ++slot) {
    if (in_union[slot]) ids.push_back(g.edge_at(static_cast<std::int32_t>(slot)).id);
  }
  return ids;
}

std::vector<EdgeId> sorted_union(std::vector<EdgeId> a, const std::vector<EdgeId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

RemovalResult dfs_once(const DiGraph& g) {
  require_acyclic(g, "dfs_once");
  const auto sources = vertices_with_zero(g.in_degrees());
  if (sources.size() != 1) {
    throw std::invalid_argument("dfs_once: source count must be 1, got " +
                                std::to_string(sources.size()));
  }
  if (g.edge_count() != g.vertex_count()) {
    throw std::invalid_argument("dfs_once: requires m = n, got m=" +
                                std::to_string(g.edge_count()) + " n=" +
                                std::to_string(g.vertex_count()));
  }

  const auto start = Clock::now();
  DfsScratch scratch;
  scratch.bind(g);
  const auto removal = collect_cf_union(g, sources, scratch);
  if (removal.size() != 1) {
    throw std::logic_error("dfs_once: expected exactly one non-tree edge, found " +
                           std::to_string(removal.size()));
  }
  RemovalResult r;
  r.algorithm = "dfs_once";
  r.removed = removal;
  r.result = remove_edges(g, removal);
  r.roots = sources;
  r.dfs_runs = 1;
  r.elapsed = Clock::now() - start;
  return r;
}

RemovalResult algo1_from_sources(const DiGraph& g) {
  require_acyclic(g, "algo1");
  const auto start = Clock::now();
  const auto sources = vertices_with_zero(g.in_degrees());
  DfsScratch scratch;
  scratch.bind(g);
  RemovalResult r;
  r.algorithm = "algo1";
  r.removed = collect_cf_union(g, sources, scratch);
  r.result = remove_edges(g, r.removed);
  r.roots = sources;
  r.dfs_runs = static_cast<std::int32_t>(sources.size());
  r.elapsed = Clock::now() - start;
  return r;
}

RemovalResult algo2_sources_or_sinks(const DiGraph& g) {
  require_acyclic(g, "algo2");
  const auto start = Clock::now();
  const auto sources = vertices_with_zero(g.in_degrees());
  const auto sinks = vertices_with_zero(g.out_degrees());

  RemovalResult r;
  r.algorithm = "algo2";
  if (sinks.size() > sources.size()) {
    // Edge ids survive reversal, so removals found in the reversed graph
    // name original edges directly.
    const DiGraph rev = reverse(g);
    DfsScratch scratch;
    scratch.bind(rev);
    r.removed = collect_cf_union(rev, sinks, scratch);
    r.roots = sinks;
  } else {
    DfsScratch scratch;
    scratch.bind(g);
    r.removed = collect_cf_union(g, sources, scratch);
    r.roots = sources;
  }
  r.result = remove_edges(g, r.removed);
  r.dfs_runs = static_cast<std::int32_t>(r.roots.size());
  r.elapsed = Clock::now() - start;
  return r;
}

RemovalResult algo3_tree_edges(const DiGraph& g) {
  require_acyclic(g, "algo3");
  const auto start = Clock::now();
  const auto sources = vertices_with_zero(g.in_degrees());

  // Phase 1: union of per-source DFS tree edges.
  std::vector<bool> is_tree(static_cast<std::size_t>(g.edge_count()), false);
  DfsScratch scratch;
  scratch.bind(g);
  for (VertexId root : sources) {
    scratch.new_epoch();
    scratch.run(g, root, [&](std::int32_t slot, EdgeClass cls) {
      if (cls == EdgeClass::kTree) is_tree[slot] = true;
      return true;
    });
  }
  std::vector<EdgeId> non_tree;
  for (std::size_t slot = 0; slot < is_tree.size(); ++slot) {
    if (!is_tree[slot]) non_tree.push_back(g.edge_at(static_cast<std::int32_t>(slot)).id);
  }
  const DiGraph trees_only = remove_edges(g, non_tree);

  // Phase 2: algo1 over the tree-edge subgraph; its roots may include
  // vertices that lost all in-edges in phase 1.
  const auto phase2_sources = vertices_with_zero(trees_only.in_degrees());
  DfsScratch scratch2;
  scratch2.bind(trees_only);
  const auto phase2_removed = collect_cf_union(trees_only, phase2_sources, scratch2);

  RemovalResult r;
  r.algorithm = "algo3";
  r.removed = sorted_union(std::move(non_tree), phase2_removed);
  r.result = remove_edges(trees_only, phase2_removed);
  r.roots = sources;
  r.roots.insert(r.roots.end(), phase2_sources.begin(), phase2_sources.end());
  r.dfs_runs = static_cast<std::int32_t>(sources.size() + phase2_sources.size());
  r.elapsed = Clock::now() - start;
  return r;
}

RemovalResult algo4_from_medials(const DiGraph& g, Algo4Variant variant) {
  require_acyclic(g, variant == Algo4Variant::kProse ? "algo4" : "algo4_literal");
  const auto start = Clock::now();
  const auto rs = root_sets(g);

  DfsScratch scratch;
  scratch.bind(g);
  const auto medial_cf = collect_cf_union(g, rs.medials, scratch);

  RemovalResult r;
  r.roots = rs.medials;

  if (variant == Algo4Variant::kProse) {
    r.algorithm = "algo4";
    const DiGraph trimmed = remove_edges(g, medial_cf);
    const auto phase2_sources = vertices_with_zero(trimmed.in_degrees());
    DfsScratch scratch2;
    scratch2.bind(trimmed);
    const auto phase2_removed = collect_cf_union(trimmed, phase2_sources, scratch2);
    r.removed = sorted_union(medial_cf, phase2_removed);
    r.result = remove_edges(trimmed, phase2_removed);
    r.roots.insert(r.roots.end(), phase2_sources.begin(), phase2_sources.end());
    r.dfs_runs = static_cast<std::int32_t>(rs.medials.size() + phase2_sources.size());
  } else {
    r.algorithm = "algo4_literal";
    r.certifies_input = false;
    // TempGraph keeps only the collected non-tree edges.
    std::vector<EdgeId> complement;
    for (const Edge& e : g.edges()) {
      if (!std::binary_search(medial_cf.begin(), medial_cf.end(), e.id)) {
        complement.push_back(e.id);
      }
    }
    const DiGraph temp = remove_edges(g, complement);
    const auto phase2_sources = vertices_with_zero(temp.in_degrees());
    DfsScratch scratch2;
    scratch2.bind(temp);
    const auto phase2_removed = collect_cf_union(temp, phase2_sources, scratch2);
    r.removed = sorted_union(medial_cf, phase2_removed);
    r.result = remove_edges(temp, phase2_removed);
    r.roots.insert(r.roots.end(), phase2_sources.begin(), phase2_sources.end());
    r.dfs_runs = static_cast<std::int32_t>(rs.medials.size() + phase2_sources.size());
  }
  r.elapsed = Clock::now() - start;
  return r;
}

BatchOutcome run_all(const DiGraph& g) {
  BatchOutcome out;
  const auto attempt = [&](const char* name, auto&& fn) {
    try {
      out.results.push_back(fn());
    } catch (const std::exception& e) {
      out.errors.push_back({name, e.what()});
    }
  };
  attempt("algo1", [&] { return algo1_from_sources(g); });
  attempt("algo2", [&] { return algo2_sources_or_sinks(g); });
  attempt("algo3", [&] { return algo3_tree_edges(g); });
  attempt("algo4", [&] { return algo4_from_medials(g, Algo4Variant::kProse); });

  const bool theorem1_shape = is_acyclic(g) && g.edge_count() == g.vertex_count() &&
                              vertices_with_zero(g.in_degrees()).size() == 1;
  if (theorem1_shape) attempt("dfs_once", [&] { return dfs_once(g); });
  return out;
}

}  // namespace sconn
