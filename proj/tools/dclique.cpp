// Command-line front end: enumerate, compare, generate, stats.

#include <CLI11.hpp>

#include "dclique/cli.hpp"

namespace {

using namespace dclique;
using namespace dclique::cli;

void add_run_options(CLI::App &cmd, RunSpec &spec, bool outputs) {
  cmd.add_option("input", spec.input, "link stream file: <time> <u> <v> [class_u class_v]")->required();
  cmd.add_option("--delta", spec.delta, "window length in ticks")->check(CLI::NonNegativeNumber);
  cmd.add_option_function<std::string>(
         "--order", [&spec](const std::string &v) { spec.order = v == "bfs" ? SearchOrder::bfs : SearchOrder::dfs; },
         "exploration order (default dfs)")
      ->check(CLI::IsMember({"bfs", "dfs"}));
  cmd.add_option("--tmin", spec.tmin, "explicit span start (requires --tmax)");
  cmd.add_option("--tmax", spec.tmax, "explicit span end (requires --tmin)");
  cmd.add_option("--time-scale", spec.time_scale, "multiply input times by this factor")->check(CLI::PositiveNumber);
  cmd.add_flag_function(
      "--no-interval-narrowing", [&spec](std::int64_t) { spec.interval_narrowing = false; },
      "search occurrence times over the whole interval");
  cmd.add_flag_function(
      "--no-candidate-sets", [&spec](std::int64_t) { spec.candidate_sets = false; },
      "test every outside node for extension");
  cmd.add_option("--max-states", spec.max_states, "abort once this many states have been seen");
  cmd.add_flag_function(
         "--inject-fault-skip-right", [&spec](std::int64_t) { spec.fault_skip_right_extension = true; },
         "test hook")
      ->group("");
  if (outputs) {
    cmd.add_option("--out", spec.out, "clique output file (default stdout)");
    cmd.add_option("--stats", spec.stats, "summary JSON file");
    cmd.add_option("--ccdf-sizes", spec.ccdf_sizes, "CCDF of clique sizes (TSV)");
    cmd.add_option("--ccdf-durations", spec.ccdf_durations, "CCDF of clique durations (TSV)");
    cmd.add_option("--discovery-log", spec.discovery_log, "maximal cliques found per iteration (TSV)");
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Maximal delta-clique enumeration for link streams"};
  app.require_subcommand(1);

  RunSpec run;
  auto *enumerate = app.add_subcommand("enumerate", "list all maximal delta-cliques");
  add_run_options(*enumerate, run, true);

  auto *compare = app.add_subcommand("compare", "check the engine against brute force on a small stream");
  add_run_options(*compare, run, false);
  compare->add_option("--max-nodes", run.guard.max_nodes, "brute-force node limit");
  compare->add_option("--max-links", run.guard.max_links, "brute-force link limit");

  bool stats_delta = false;
  auto *stats = app.add_subcommand("stats", "stream and static-graph statistics");
  add_run_options(*stats, run, false);
  stats->add_option("--stats", run.stats, "write JSON here instead of stdout");
  stats->callback([&] { stats_delta = stats->count("--delta") > 0; });

  GenerateSpec gen;
  auto *generate = app.add_subcommand("generate", "write a synthetic stream");
  generate
      ->add_option_function<std::string>(
          "kind",
          [&gen](const std::string &k) {
            gen.kind = k == "chain" ? GenerateKind::chain : k == "burst" ? GenerateKind::burst : GenerateKind::random;
          },
          "chain | burst | random")
      ->required()
      ->check(CLI::IsMember({"chain", "burst", "random"}));
  std::optional<std::size_t> nodes, links;
  generate->add_option("--pairs", gen.chain.pairs, "chain: number of disjoint pairs");
  generate->add_option("--links", links, "chain: links per pair; random: total links");
  generate->add_option("--spacing", gen.chain.spacing, "chain: time between consecutive links");
  generate->add_option("--nodes", nodes, "burst/random: node count");
  generate->add_option("--time-min", gen.random.t_min, "random: earliest link time");
  generate->add_option("--time-max", gen.random.t_max, "random: latest link time");
  generate->add_option("--seed", gen.random.seed, "random: generator seed");
  generate->add_option("--out", gen.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? ok : parse_error;
  }

  if (*enumerate)
    return cmd_enumerate(run);
  if (*compare)
    return cmd_compare(run);
  if (*stats)
    return cmd_stats(run, stats_delta);
  if (nodes) {
    gen.burst_nodes = *nodes;
    gen.random.nodes = *nodes;
  }
  if (links) {
    gen.chain.links = *links;
    gen.random.links = *links;
  }
  return cmd_generate(gen);
}
