#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sconn/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"singly connected subgraph toolkit"};
  app.require_subcommand(1);

  sconn::bench::RunOptions run_opts;
  std::string algo4_variant = "prose";
  auto* run = app.add_subcommand("run", "benchmark edge-removal algorithms on edge-list files");
  run->add_option("inputs", run_opts.inputs, "edge-list files")->required()->expected(-1);
  run->add_option("--algorithms", run_opts.algorithms,
                  "subset of {algo1,algo2,algo3,algo4,dfs_once}; default: all applicable")
      ->delimiter(',');
  run->add_option("--repetitions", run_opts.repetitions, "timing repetitions, median reported")
      ->default_val(3);
  run->add_option("--algo4-variant", algo4_variant, "prose|literal")
      ->check(CLI::IsMember({"prose", "literal"}))
      ->default_val("prose");
  run->add_flag("--no-timing", run_opts.no_timing,
                "zero the time_ms column for byte-reproducible output");
  run->add_option("--seed", run_opts.seed, "provenance seed echoed in the CSV header");
  run->add_option("-o,--output", run_opts.output_csv, "CSV output path (default: stdout)");
  run->add_option("--markdown", run_opts.output_markdown, "also render the CSV as a markdown table");
  run->add_option("--emit-removals", run_opts.emit_removals_dir,
                  "write per-row removed/remaining edge lists into this directory");
  run->add_option("--emit-normalized", run_opts.emit_normalized_dir,
                  "write the normalized, cycle-free dataset into this directory");

  sconn::bench::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "decide whether an edge-list graph is singly connected");
  verify->add_option("input", verify_opts.input, "edge-list file")->required();
  verify->add_flag("--remove-cycles", verify_opts.remove_cycles,
                   "delete DFS back edges first if the input is cyclic");

  sconn::bench::GenOptions gen_opts;
  std::string family = "dag";
  bool m_given = false;
  auto* gen = app.add_subcommand("gen", "generate a reproducible random graph");
  gen->add_option("--family", family, "dag|theorem1|layered")
      ->check(CLI::IsMember({"dag", "theorem1", "layered"}))
      ->default_val("dag");
  gen->add_option("--n", gen_opts.spec.n, "vertex count")->required();
  gen->add_option("--m", gen_opts.spec.m, "edge count (theorem1 fixes m=n)")
      ->each([&](const std::string&) { m_given = true; });
  gen->add_option("--sources", gen_opts.spec.sources, "source-layer width (layered family)")
      ->default_val(1);
  gen->add_option("--seed", gen_opts.spec.seed, "generator seed")->default_val(0);
  gen->add_option("-o,--output", gen_opts.output, "output path (default: stdout)");

  sconn::bench::OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "brute-force optimum vs. each heuristic");
  oracle->add_option("input", oracle_opts.input, "edge-list file")->required();
  oracle->add_option("--budget", oracle_opts.budget, "max removal-set size to enumerate")
      ->default_val(4);
  oracle->add_flag("--remove-cycles", oracle_opts.remove_cycles,
                   "delete DFS back edges first if the input is cyclic");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    run_opts.algo4_variant = algo4_variant == "literal" ? sconn::Algo4Variant::kLiteral
                                                        : sconn::Algo4Variant::kProse;
    return sconn::bench::cmd_run(run_opts, std::cout, std::cerr);
  }
  if (verify->parsed()) return sconn::bench::cmd_verify(verify_opts, std::cout, std::cerr);
  if (gen->parsed()) {
    const std::map<std::string, sconn::GraphFamily> families = {
        {"dag", sconn::GraphFamily::kGeneralDag},
        {"theorem1", sconn::GraphFamily::kTheorem1},
        {"layered", sconn::GraphFamily::kLayered},
    };
    gen_opts.spec.family = families.at(family);
    if (gen_opts.spec.family == sconn::GraphFamily::kTheorem1 && !m_given) {
      gen_opts.spec.m = gen_opts.spec.n;
    }
    return sconn::bench::cmd_gen(gen_opts, std::cout, std::cerr);
  }
  if (oracle->parsed()) return sconn::bench::cmd_oracle(oracle_opts, std::cout, std::cerr);
  return sconn::bench::kExitInputError;
}
