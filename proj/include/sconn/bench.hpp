#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sconn/algorithms.hpp"
#include "sconn/oracle.hpp"

namespace sconn::bench {

// One line of the comparison table.
struct BenchRow {
  std::string dataset;
  std::int64_t n = 0;
  std::int64_t m = 0;  // post-preprocessing edge count
  std::string algorithm;
  std::int64_t edges_removed = 0;
  std::int64_t edges_remaining = 0;
  double time_ms = 0.0;  // median over repetitions
  bool verified = false; // both verifiers accepted the output
};

inline constexpr std::string_view kCsvHeader =
    "dataset,n,m,algorithm,edges_removed,edges_remaining,time_ms,verified";

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;

struct RunOptions {
  std::vector<std::string> inputs;
  std::vector<std::string> algorithms;  // empty = all applicable
  int repetitions = 3;
  Algo4Variant algo4_variant = Algo4Variant::kProse;
  // Zeroes the time_ms column so fixed inputs/flags produce byte-identical
  // CSV bodies; wall time is the one inherently nonreproducible column.
  bool no_timing = false;
  std::uint64_t seed = 0;               // provenance, echoed in the header
  std::string output_csv;               // empty = the `out` stream
  std::string output_markdown;          // optional
  std::string emit_removals_dir;        // optional
  std::string emit_normalized_dir;      // optional
};

// Ingest -> remove cycles -> run -> verify -> CSV, per dataset x algorithm.
// Parse failures abort their dataset only. Returns kExitVerificationFailure
// if any row has verified=false, else kExitInputError if any dataset
// aborted, else kExitOk.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string input;
  bool remove_cycles = false;
};

// Prints YES, or NO plus a two-path witness in external vertex labels.
// Exit code 0 iff singly connected.
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  GenSpec spec;
  std::string output;  // empty = the `out` stream
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct OracleOptions {
  std::string input;
  std::int32_t budget = 4;
  bool remove_cycles = false;
};

// Brute-force optimum (or an exhausted notice) plus each heuristic's |H|
// and its ratio to the optimum.
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

// Markdown table derived from CSV text; '#' comment lines are skipped.
std::string render_markdown_from_csv(const std::string& csv_text);

// "model name (N hardware threads)" from /proc/cpuinfo, best effort.
std::string machine_description();

}  // namespace sconn::bench
