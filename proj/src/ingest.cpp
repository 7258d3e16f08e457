#include "sconn/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "sconn/dfs.hpp"

namespace sconn {

namespace {

std::uint64_t pack_pair(VertexId tail, VertexId head) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(tail)) << 32) |
         static_cast<std::uint32_t>(head);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::int64_t parse_label(std::string_view token, std::int64_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc() || ptr != token.end()) {
    throw ParseError(line_no, "not an integer label: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Ingested parse_edge_list(std::istream& in) {
  IngestReport report;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::unordered_set<std::uint64_t> seen_pairs;

  auto dense = [&](std::int64_t label) -> VertexId {
    const auto [it, fresh] =
        report.dense_id.try_emplace(label, static_cast<VertexId>(report.external_label.size()));
    if (fresh) report.external_label.push_back(label);
    return it->second;
  };

  std::string line;
  while (std::getline(in, line)) {
    const std::int64_t line_no = ++report.raw_lines;
    std::string_view body(line);
    while (!body.empty() && is_space(body.back())) body.remove_suffix(1);
    while (!body.empty() && is_space(body.front())) body.remove_prefix(1);
    if (body.empty() || body.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && is_space(body[i])) ++i;
      if (i >= body.size()) break;
      std::size_t j = i;
      while (j < body.size() && !is_space(body[j])) ++j;
      tokens.push_back(body.substr(i, j - i));
      i = j;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two fields, got " + std::to_string(tokens.size()));
    }
    const VertexId tail = dense(parse_label(tokens[0], line_no));
    const VertexId head = dense(parse_label(tokens[1], line_no));
    ++report.parsed_edges;
    if (tail == head) {
      ++report.self_loops_dropped;
    } else if (!seen_pairs.insert(pack_pair(tail, head)).second) {
      ++report.duplicates_dropped;
    } else {
      edges.push_back({tail, head});
    }
  }

  const auto n = static_cast<VertexId>(report.external_label.size());
  return Ingested{DiGraph::build(n, edges), std::move(report)};
}

CycleRemoval remove_cycles(const DiGraph& g) {
  DfsScratch scratch;
  scratch.bind(g);
  scratch.new_epoch();
  std::vector<EdgeId> removed;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    scratch.run(g, v, [&](std::int32_t slot, EdgeClass cls) {
      if (cls == EdgeClass::kBack) removed.push_back(g.edge_at(slot).id);
      return true;
    });
  }
  std::sort(removed.begin(), removed.end());
  return CycleRemoval{remove_edges(g, removed), std::move(removed)};
}

void write_edge_list(std::ostream& out, const DiGraph& g,
                     const std::vector<std::string>& header_comments) {
  for (const std::string& c : header_comments) out << "# " << c << "\n";

  // Lines must introduce vertex ids in ascending order for a re-parse to
  // densify back to the identity mapping; ids the edge stream would reach
  // too late (or never) are pinned by a self-loop line, which the parser
  // strips while registering the label. A line introduces its tail before
  // its head, so a head that still has smaller unintroduced ids forces the
  // tail onto its own pin line first.
  const VertexId n = g.vertex_count();
  std::vector<bool> introduced(n, false);
  VertexId next_new = 0;  // smallest unintroduced id
  auto advance = [&] {
    while (next_new < n && introduced[next_new]) ++next_new;
  };
  auto pin_all_below = [&](VertexId v) {
    for (VertexId k = next_new; k < v; ++k) {
      if (!introduced[k]) {
        out << k << " " << k << "\n";
        introduced[k] = true;
      }
    }
    advance();
  };
  for (const Edge& e : g.edges()) {
    if (!introduced[e.tail]) pin_all_below(e.tail);
    if (!introduced[e.head]) {
      VertexId k = next_new;
      while (k < e.head && (introduced[k] || k == e.tail)) ++k;
      if (k < e.head) {  // a smaller id must land between tail and head
        if (!introduced[e.tail]) {
          out << e.tail << " " << e.tail << "\n";
          introduced[e.tail] = true;
          advance();
        }
        pin_all_below(e.head);
      }
    }
    out << e.tail << " " << e.head << "\n";
    introduced[e.tail] = true;
    introduced[e.head] = true;
    advance();
  }
  for (VertexId v = next_new; v < n; ++v) {
    if (!introduced[v]) out << v << " " << v << "\n";
  }
}

}  // namespace sconn
