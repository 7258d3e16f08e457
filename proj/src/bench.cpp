#include "sconn/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sconn/ingest.hpp"
#include "sconn/verify.hpp"

namespace sconn::bench {

namespace {

namespace fs = std::filesystem;

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string dataset_name(const std::string& path) {
  return fs::path(path).stem().string();
}

double median_ms(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t h = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[h];
  return (samples[h - 1] + samples[h]) / 2.0;
}

Ingested load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_edge_list(in);
}

std::string label_path(const IngestReport& report, const DiGraph& g,
                       VertexId start, const std::vector<EdgeId>& edge_ids) {
  std::ostringstream os;
  os << report.label_of(start);
  VertexId at = start;
  for (EdgeId id : edge_ids) {
    const Edge& e = g.edge_at(*g.slot_of_id(id));
    at = e.head;
    os << " -> " << report.label_of(at);
  }
  return os.str();
}

using AlgorithmFn = std::function<RemovalResult(const DiGraph&)>;

std::vector<std::pair<std::string, AlgorithmFn>> algorithm_table(Algo4Variant algo4) {
  return {
      {"algo1", [](const DiGraph& g) { return algo1_from_sources(g); }},
      {"algo2", [](const DiGraph& g) { return algo2_sources_or_sinks(g); }},
      {"algo3", [](const DiGraph& g) { return algo3_tree_edges(g); }},
      {"algo4", [algo4](const DiGraph& g) { return algo4_from_medials(g, algo4); }},
      {"dfs_once", [](const DiGraph& g) { return dfs_once(g); }},
  };
}

bool theorem1_shape(const DiGraph& g) {
  if (!is_acyclic(g) || g.edge_count() != g.vertex_count()) return false;
  std::int64_t sources = 0;
  for (std::int32_t d : g.in_degrees()) sources += d == 0;
  return sources == 1;
}

std::vector<std::string> gen_header(const GenSpec& spec) {
  std::ostringstream os;
  os << "family=" << to_string(spec.family) << " n=" << spec.n << " m=" << spec.m
     << " seed=" << spec.seed;
  if (spec.family == GraphFamily::kLayered) os << " sources=" << spec.sources;
  return {"generated by sconn gen", os.str()};
}

std::string report_comment(const std::string& dataset, const IngestReport& rep,
                           const DiGraph& dag) {
  std::ostringstream os;
  os << "dataset " << dataset << ": raw_lines=" << rep.raw_lines
     << " parsed_edges=" << rep.parsed_edges
     << " duplicates_dropped=" << rep.duplicates_dropped
     << " self_loops_dropped=" << rep.self_loops_dropped
     << " cycle_edges_removed=" << rep.cycle_edges_removed.size()
     << " n=" << dag.vertex_count() << " m=" << dag.edge_count();
  return os.str();
}

void write_rows_csv(std::ostream& os, const std::vector<std::string>& comments,
                    const std::vector<BenchRow>& rows) {
  for (const auto& c : comments) os << "# " << c << "\n";
  os << kCsvHeader << "\n";
  for (const BenchRow& r : rows) {
    os << r.dataset << "," << r.n << "," << r.m << "," << r.algorithm << ","
       << r.edges_removed << "," << r.edges_remaining << "," << format_ms(r.time_ms)
       << "," << (r.verified ? "true" : "false") << "\n";
  }
}

}  // namespace

std::string machine_description() {
  std::string model = "unknown cpu";
  std::ifstream cpuinfo("/proc/cpuinfo");
  std::string line;
  while (std::getline(cpuinfo, line)) {
    const auto pos = line.find("model name");
    if (pos == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon != std::string::npos && colon + 2 <= line.size()) {
      model = line.substr(colon + 1);
      const auto first = model.find_first_not_of(" \t");
      model = first == std::string::npos ? "unknown cpu" : model.substr(first);
    }
    break;
  }
  return model + " (" + std::to_string(std::thread::hardware_concurrency()) +
         " hardware threads)";
}

std::string render_markdown_from_csv(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::vector<std::vector<std::string>> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    table.push_back(std::move(cells));
  }
  if (table.empty()) return "";
  std::ostringstream os;
  for (std::size_t row = 0; row < table.size(); ++row) {
    os << "|";
    for (const auto& cell : table[row]) os << " " << cell << " |";
    os << "\n";
    if (row == 0) {
      os << "|";
      for (std::size_t i = 0; i < table[0].size(); ++i) os << " --- |";
      os << "\n";
    }
  }
  return os.str();
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  if (options.repetitions < 1) {
    err << "error: repetitions must be >= 1\n";
    return kExitInputError;
  }
  const auto table = algorithm_table(options.algo4_variant);
  std::vector<std::string> selected = options.algorithms;
  for (const auto& name : selected) {
    if (std::none_of(table.begin(), table.end(),
                     [&](const auto& entry) { return entry.first == name; })) {
      err << "error: unknown algorithm '" << name << "'\n";
      return kExitInputError;
    }
  }

  std::vector<BenchRow> rows;
  std::vector<std::string> comments = {
      "sconn run",
      "machine: " + machine_description(),
      "order-policy: ascending-id roots and neighbors",
      "cycle-removal: dfs-forest back edges",
      "seed: " + std::to_string(options.seed),
      "repetitions: " + std::to_string(options.repetitions),
      std::string("timing: ") + (options.no_timing ? "off" : "on"),
  };
  bool any_input_error = false;
  bool any_unverified = false;

  for (const std::string& path : options.inputs) {
    std::string dataset = dataset_name(path);
    Ingested ingested;
    try {
      ingested = load(path);
      if (ingested.report.parsed_edges == 0) throw std::runtime_error("no edges parsed");
    } catch (const std::exception& e) {
      err << "error: dataset '" << path << "' aborted: " << e.what() << "\n";
      any_input_error = true;
      continue;
    }
    auto [dag, cycle_removed] = remove_cycles(ingested.graph);
    ingested.report.cycle_edges_removed = std::move(cycle_removed);
    comments.push_back(report_comment(dataset, ingested.report, dag));

    if (!options.emit_normalized_dir.empty()) {
      fs::create_directories(options.emit_normalized_dir);
      std::ofstream os(fs::path(options.emit_normalized_dir) / (dataset + ".normalized.edges"));
      write_edge_list(os, dag, {"normalized by sconn run",
                                report_comment(dataset, ingested.report, dag)});
    }

    for (const auto& [name, fn] : table) {
      const bool requested =
          selected.empty() ? (name != "dfs_once" || theorem1_shape(dag))
                           : std::count(selected.begin(), selected.end(), name) > 0;
      if (!requested) continue;

      RemovalResult result;
      std::vector<double> times;
      try {
        result = fn(dag);
        times.push_back(std::chrono::duration<double, std::milli>(result.elapsed).count());
        for (int rep = 1; rep < options.repetitions; ++rep) {
          RemovalResult again = fn(dag);
          if (again.removed != result.removed) {
            throw std::logic_error(name + std::string(": nondeterministic removal set"));
          }
          times.push_back(std::chrono::duration<double, std::milli>(again.elapsed).count());
        }
      } catch (const std::exception& e) {
        err << "error: " << name << " on dataset '" << dataset << "': " << e.what() << "\n";
        any_input_error = true;
        continue;
      }

      BenchRow row;
      row.dataset = dataset;
      row.n = dag.vertex_count();
      row.m = dag.edge_count();
      row.algorithm = result.algorithm;
      row.edges_remaining = result.result.edge_count();
      row.edges_removed = row.m - row.edges_remaining;
      row.time_ms = options.no_timing ? 0.0 : median_ms(times);
      row.verified = check_by_dfs(result.result).singly_connected &&
                     check_by_counting(result.result).singly_connected;
      any_unverified |= !row.verified;
      rows.push_back(std::move(row));

      if (!options.emit_removals_dir.empty()) {
        fs::create_directories(options.emit_removals_dir);
        const auto base = fs::path(options.emit_removals_dir) / (dataset + "." + result.algorithm);
        std::ofstream removed(base.string() + ".removed.edges");
        removed << "# removal set: dataset=" << dataset << " algorithm=" << result.algorithm
                << " edges=" << result.removed.size() << "\n";
        for (EdgeId id : result.removed) {
          const Edge& e = dag.edge_at(*dag.slot_of_id(id));
          removed << e.tail << " " << e.head << "\n";
        }
        std::ofstream remaining(base.string() + ".remaining.edges");
        write_edge_list(remaining, result.result,
                        {"remaining subgraph: dataset=" + dataset +
                         " algorithm=" + result.algorithm});
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.dataset, a.algorithm) < std::tie(b.dataset, b.algorithm);
  });

  std::ostringstream csv;
  write_rows_csv(csv, comments, rows);
  if (options.output_csv.empty()) {
    out << csv.str();
  } else {
    std::ofstream os(options.output_csv);
    if (!os) {
      err << "error: cannot write " << options.output_csv << "\n";
      return kExitInputError;
    }
    os << csv.str();
  }
  if (!options.output_markdown.empty()) {
    std::ofstream os(options.output_markdown);
    os << render_markdown_from_csv(csv.str());
  }

  if (any_unverified) return kExitVerificationFailure;
  if (any_input_error) return kExitInputError;
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  Ingested ingested;
  try {
    ingested = load(options.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  DiGraph g = std::move(ingested.graph);
  if (!is_acyclic(g)) {
    if (!options.remove_cycles) {
      err << "error: input is not acyclic (use --remove-cycles)\n";
      return kExitInputError;
    }
    auto removal = remove_cycles(g);
    out << "# removed " << removal.removed.size() << " cycle edges before checking\n";
    g = std::move(removal.dag);
  }

  const DfsCheck dfs = check_by_dfs(g);
  const CountCheck counting = check_by_counting(g);
  if (dfs.singly_connected != counting.singly_connected) {
    err << "internal error: verifiers disagree\n";
    return kExitInputError;
  }
  if (dfs.singly_connected) {
    out << "YES\n";
    return kExitOk;
  }
  out << "NO\n";
  const ViolationWitness& w = *dfs.witness;
  out << "witness: two distinct paths from " << ingested.report.label_of(w.u) << " to "
      << ingested.report.label_of(w.v) << "\n";
  out << "  P : " << label_path(ingested.report, g, w.u, w.path_a) << "\n";
  out << "  P': " << label_path(ingested.report, g, w.u, w.path_b) << "\n";
  return kExitVerificationFailure;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  DiGraph g;
  try {
    g = generate(options.spec);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  const auto header = gen_header(options.spec);
  if (options.output.empty()) {
    write_edge_list(out, g, header);
    return kExitOk;
  }
  std::ofstream os(options.output);
  if (!os) {
    err << "error: cannot write " << options.output << "\n";
    return kExitInputError;
  }
  write_edge_list(os, g, header);
  return kExitOk;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
  Ingested ingested;
  try {
    ingested = load(options.input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  DiGraph g = std::move(ingested.graph);
  if (!is_acyclic(g)) {
    if (!options.remove_cycles) {
      err << "error: input is not acyclic (use --remove-cycles)\n";
      return kExitInputError;
    }
    auto removal = remove_cycles(g);
    out << "# removed " << removal.removed.size() << " cycle edges\n";
    g = std::move(removal.dag);
  }

  out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  const BruteForceResult best = brute_force_min_removal(g, options.budget);
  if (best.exhausted) {
    out << "optimum: EXHAUSTED at budget " << options.budget
        << " (no feasible subset within budget)\n";
  } else {
    out << "optimum=" << best.size << "\n";
    std::ostringstream edges;
    for (EdgeId id : best.removal) {
      const Edge& e = g.edge_at(*g.slot_of_id(id));
      edges << " (" << ingested.report.label_of(e.tail) << ","
            << ingested.report.label_of(e.head) << ")";
    }
    out << "removal:" << (best.removal.empty() ? " (none)" : edges.str()) << "\n";
  }

  const BatchOutcome batch = run_all(g);
  for (const auto& result : batch.results) {
    out << result.algorithm << "=" << result.removed.size();
    if (best.exhausted) {
      out << " (n/a)";
    } else if (best.size == 0) {
      out << (result.removed.empty() ? " (1.00x)" : " (inf)");
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f",
                    static_cast<double>(result.removed.size()) / best.size);
      out << " (" << buf << "x)";
    }
    out << "\n";
  }
  for (const auto& [name, message] : batch.errors) {
    err << "error: " << name << ": " << message << "\n";
  }
  return kExitOk;
}

}  // namespace sconn::bench
