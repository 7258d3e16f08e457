#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sconn/graph.hpp"
#include "sconn/oracle.hpp"
#include "testutil.hpp"

using namespace sconn;
using testutil::diamond;

namespace {

std::vector<VertexId> out_heads_of(const DiGraph& g, VertexId v) {
  std::vector<VertexId> heads;
  for (std::int32_t pos = g.out_begin(v); pos < g.out_end(v); ++pos) {
    heads.push_back(g.csr_heads()[pos]);
  }
  return heads;
}

void check_adjacency_sorted(const DiGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto heads = out_heads_of(g, v);
    CHECK(std::is_sorted(heads.begin(), heads.end()));
  }
}

std::set<std::pair<VertexId, VertexId>> edge_pairs(const DiGraph& g) {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Edge& e : g.edges()) pairs.insert({e.tail, e.head});
  return pairs;
}

}  // namespace

TEST_CASE("build: empty graph") {
  const DiGraph g = DiGraph::build(2, {});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("build: diamond adjacency is ordered by head") {
  const DiGraph g = diamond();
  CHECK(g.edge_count() == 4);
  CHECK(out_heads_of(g, 0) == std::vector<VertexId>{1, 2});
  check_adjacency_sorted(g);
}

TEST_CASE("build: rejects duplicates, self-loops, bad endpoints distinctly") {
  CHECK_THROWS_WITH_AS(DiGraph::build(3, {{0, 1}, {0, 1}}),
                       doctest::Contains("duplicate edge"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(DiGraph::build(3, {{1, 1}}), doctest::Contains("self-loop"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(DiGraph::build(2, {{0, 5}}), doctest::Contains("out of range"),
                       std::invalid_argument);
}

TEST_CASE("reverse: flips pairs and keeps edge ids") {
  const DiGraph single = DiGraph::build(2, {{0, 1}});
  const DiGraph r = reverse(single);
  CHECK(r.edges()[0] == Edge{0, 1, 0});

  const DiGraph g = diamond();
  const DiGraph rg = reverse(g);
  CHECK(edge_pairs(rg) ==
        std::set<std::pair<VertexId, VertexId>>{{1, 0}, {2, 0}, {3, 1}, {3, 2}});
  for (std::int64_t i = 0; i < g.edge_count(); ++i) {
    CHECK(rg.edges()[i].id == g.edges()[i].id);
  }
  CHECK(reverse(rg) == g);
  check_adjacency_sorted(rg);
}

TEST_CASE("root_sets: diamond, 2-cycle, isolated vertices") {
  const RootSets d = root_sets(diamond());
  CHECK(d.sources == std::vector<VertexId>{0});
  CHECK(d.sinks == std::vector<VertexId>{3});
  CHECK(d.medials == std::vector<VertexId>{1, 2});

  const RootSets c = root_sets(testutil::two_cycle());
  CHECK(c.sources.empty());
  CHECK(c.sinks.empty());
  CHECK(c.medials == std::vector<VertexId>{0, 1});

  const RootSets iso = root_sets(DiGraph::build(2, {}));
  CHECK(iso.sources == std::vector<VertexId>{0, 1});
  CHECK(iso.sinks == std::vector<VertexId>{0, 1});
  CHECK(iso.medials.empty());
}

TEST_CASE("remove_edges: survivors keep ids, degrees recomputed") {
  const DiGraph g = diamond();
  const auto cut = testutil::ids_of(g, {{2, 3}});
  const DiGraph h = remove_edges(g, cut);
  CHECK(h.edge_count() == 3);
  CHECK(h.in_degree(3) == 1);
  CHECK_FALSE(h.slot_of_id(cut[0]).has_value());

  CHECK(remove_edges(g, {}) == g);

  std::vector<EdgeId> all;
  for (const Edge& e : g.edges()) all.push_back(e.id);
  const DiGraph empty = remove_edges(g, all);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.vertex_count() == 4);

  CHECK_THROWS_WITH_AS(remove_edges(g, {99}), doctest::Contains("unknown edge id"),
                       std::invalid_argument);
}

TEST_CASE("topological_order: Kahn with ascending tie-break") {
  CHECK(*topological_order(diamond()) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK_FALSE(topological_order(testutil::two_cycle()).has_value());
  CHECK(*topological_order(DiGraph::build(3, {})) == std::vector<VertexId>{0, 1, 2});
  CHECK(is_acyclic(diamond()));
  CHECK_FALSE(is_acyclic(testutil::two_cycle()));
}

TEST_CASE("properties: reversal, composition, ordering over random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const VertexId n = 2 + seed % 17;
    const auto max_m = static_cast<std::int64_t>(n) * (n - 1);
    const DiGraph g = testutil::random_digraph(n, (seed * 7) % (max_m + 1), seed);

    const DiGraph rg = reverse(g);
    CHECK(rg.edge_count() == g.edge_count());
    const RootSets rs = root_sets(g);
    const RootSets rrs = root_sets(rg);
    CHECK(rrs.sources == rs.sinks);
    CHECK(rrs.sinks == rs.sources);
    check_adjacency_sorted(g);
    check_adjacency_sorted(rg);

    if (is_acyclic(g) && g.edge_count() >= 1) {
      CHECK_FALSE(rs.sources.empty());
      CHECK_FALSE(rs.sinks.empty());
    }

    // Split the ids and remove in one shot vs. two.
    std::vector<EdgeId> h1, h2;
    for (const Edge& e : g.edges()) {
      (e.id % 2 == 0 ? h1 : h2).push_back(e.id);
    }
    std::vector<EdgeId> merged = h1;
    merged.insert(merged.end(), h2.begin(), h2.end());
    CHECK(remove_edges(g, merged) == remove_edges(remove_edges(g, h1), h2));
    check_adjacency_sorted(remove_edges(g, h1));
  }
}
