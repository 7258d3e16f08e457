#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sconn/graph.hpp"

namespace sconn {

// Preprocessing provenance. After parse_edge_list plus remove_cycles:
//   parsed_edges = m + duplicates_dropped + self_loops_dropped
//                    + cycle_edges_removed.size()
struct IngestReport {
  std::int64_t raw_lines = 0;        // every line read, comments included
  std::int64_t parsed_edges = 0;     // lines accepted as (tail, head) pairs
  std::int64_t duplicates_dropped = 0;
  std::int64_t self_loops_dropped = 0;
  std::vector<std::int64_t> external_label;             // dense id -> label
  std::unordered_map<std::int64_t, VertexId> dense_id;  // label -> dense id
  std::vector<EdgeId> cycle_edges_removed;              // filled by remove_cycles

  std::int64_t label_of(VertexId v) const { return external_label[v]; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

struct Ingested {
  DiGraph graph;
  IngestReport report;
};

// SNAP-style edge list: '#'-prefixed lines are comments, every other
// non-empty line is "tail<ws>head" with integer labels. Self-loops and
// duplicate pairs are dropped and counted; labels are densified to [0, n)
// in first-appearance order.
Ingested parse_edge_list(std::istream& in);

struct CycleRemoval {
  DiGraph dag;
  std::vector<EdgeId> removed;
};

// Deletes the back edges of one whole-graph DFS forest grown from every
// vertex in ascending id order; the result is acyclic and an acyclic input
// loses nothing.
CycleRemoval remove_cycles(const DiGraph& g);

// Serialize in the format parse_edge_list reads, one edge per line in id
// order. Isolated vertices are written as self-loop lines, which the parser
// strips while registering the label, so a parse -> write -> parse round
// trip reproduces n, the edge list, and the identity label mapping.
void write_edge_list(std::ostream& out, const DiGraph& g,
                     const std::vector<std::string>& header_comments = {});

}  // namespace sconn
