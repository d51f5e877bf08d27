// Command-line front end: island extraction, island checking, model
// counting, statistics tables, and the confined local-search demo.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "islands/islands.hpp"

namespace {

using namespace islands;

std::uint64_t default_guard() {
  if (const char* env = std::getenv("ISLANDS_GUARD")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed ISLANDS_GUARD\n";
  }
  return kDefaultGuard;
}

Formula load(const std::string& path) {
  ParseResult parsed = parse_dimacs_file(path);
  for (const std::string& w : parsed.warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  if (parsed.tautologies_dropped > 0)
    std::cerr << "note: " << path << ": dropped "
              << parsed.tautologies_dropped << " tautological clause(s)\n";
  return std::move(parsed.formula);
}

void print_report_table(const std::vector<InstanceReport>& reports) {
  std::printf("%-20s %8s %12s %7s %6s %8s %6s %12s %10s %10s\n", "name", "|C|",
              "|Q|", "Q%", "vars", "|n(L)|", "n%", "|Space(Q)|", "reduction",
              "|sol(C)|");
  for (const InstanceReport& r : reports) {
    std::printf("%-20s %8llu %12llu %6.1f%% %6llu %8llu %5.1f%%",
                r.name.c_str(), (unsigned long long)r.num_clauses,
                (unsigned long long)r.island_clauses, r.coverage_pct,
                (unsigned long long)r.num_vars,
                (unsigned long long)r.confined_degree, r.confined_pct);
    if (r.island_space)
      std::printf(" %12llu", (unsigned long long)*r.island_space);
    else
      std::printf(" %12s", "-");
    if (r.reduction)
      std::printf(" %10llu", (unsigned long long)*r.reduction);
    else
      std::printf(" %10s", "-");
    if (r.model_count)
      std::printf(" %10llu", (unsigned long long)*r.model_count);
    else
      std::printf(" %10s", "-");
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"island extraction and analysis for CNF SAT instances"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::uint64_t guard = default_guard();
  app.add_option("--guard", guard,
                 "max states any enumeration may visit (env ISLANDS_GUARD)");

  std::string heuristic_name = "ratio";
  auto add_heuristic = [&](CLI::App* cmd) {
    cmd->add_option("--heuristic", heuristic_name,
                    "literal selection rule: neg|diff|ratio|nratio")
        ->check(CLI::IsMember({"neg", "diff", "ratio", "nratio"}));
  };

  bool as_json = false, as_csv = false;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "JSON lines output");
    cmd->add_flag("--csv", as_csv, "CSV output with header");
  };

  // extract
  auto* extract = app.add_subcommand("extract", "extract an island subset");
  std::string extract_file;
  extract->add_option("file", extract_file, "DIMACS CNF file")->required();
  add_heuristic(extract);
  add_format(extract);

  // check-island
  auto* check = app.add_subcommand(
      "check-island", "decide by brute force whether the formula is an island");
  std::string check_file;
  check->add_option("file", check_file, "DIMACS CNF file")->required();

  // count
  auto* count = app.add_subcommand("count", "exact model count");
  std::string count_file;
  count->add_option("file", count_file, "DIMACS CNF file")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "per-instance extraction report");
  std::vector<std::string> stats_files;
  stats->add_option("files", stats_files, "DIMACS CNF files")->required();
  bool do_enum = false;
  stats->add_flag("--enumerate", do_enum,
                  "also enumerate |Space(Q)| and |sol(C)| within the guard");
  add_heuristic(stats);
  add_format(stats);

  // solve
  auto* solve = app.add_subcommand(
      "solve", "confined local search starting from the island seed");
  std::string solve_file;
  std::uint64_t budget = 10000, rng_seed = 0;
  solve->add_option("file", solve_file, "DIMACS CNF file")->required();
  solve->add_option("--budget", budget, "max flips");
  solve->add_option("--seed", rng_seed, "RNG seed");
  add_heuristic(solve);

  // suite
  auto* suite = app.add_subcommand("suite", "run stats over a benchmark tree");
  std::vector<std::string> suite_paths;
  suite->add_option("paths", suite_paths, "files or directories")->required();
  bool suite_enum = false;
  suite->add_flag("--enumerate", suite_enum,
                  "also enumerate |Space(Q)| and |sol(C)| within the guard");
  add_heuristic(suite);
  add_format(suite);

  CLI11_PARSE(app, argc, argv);

  try {
    Heuristic h = heuristic_from_string(heuristic_name);

    if (*extract) {
      ExtractionResult res = island_extract(load(extract_file), h);
      if (as_csv) {
        std::cout << extraction_csv_header() << "\n"
                  << extraction_csv_row(res) << "\n";
      } else if (as_json) {
        std::cout << extraction_to_json(res).dump() << "\n";
      } else {
        std::cout << "instance:        " << res.instance << "\n"
                  << "clauses:         " << res.island.size() + res.removed.size()
                  << "\n"
                  << "island clauses:  " << res.island.size() << " ("
                  << res.coverage_pct() << "%)\n"
                  << "primal literals:";
        for (const Literal& l : res.primal_list)
          std::cout << " " << l.to_string();
        std::cout << "\nseed:            " << res.seed.to_string() << "\n";
      }
    } else if (*check) {
      Formula f = load(check_file);
      IslandCheck res = is_island(f, guard);
      std::cout << "solutions: " << res.num_solutions << "\n"
                << "island:    " << (res.island ? "yes" : "no") << "\n";
      if (res.witness)
        std::cout << "witness:   " << res.witness->first.to_string() << " / "
                  << res.witness->second.to_string() << "\n";
      return res.island ? 0 : 1;
    } else if (*count) {
      std::cout << count_solutions(load(count_file), guard) << "\n";
    } else if (*stats || *suite) {
      StatsOptions opt{*stats ? do_enum : suite_enum, guard};
      SuiteResult res =
          run_suite(*stats ? stats_files : suite_paths, h, opt);
      for (const auto& [path, msg] : res.errors)
        std::cerr << "error: " << path << ": " << msg << "\n";
      if (as_csv) {
        std::cout << report_csv_header() << "\n";
        for (const InstanceReport& r : res.reports)
          std::cout << report_csv_row(r) << "\n";
      } else if (as_json) {
        for (const InstanceReport& r : res.reports)
          std::cout << nlohmann::json(r).dump() << "\n";
      } else {
        print_report_table(res.reports);
        if (res.mean_coverage_pct)
          std::printf("mean coverage: %.1f%%\n", *res.mean_coverage_pct);
        else
          std::printf("mean coverage: undefined (no instances)\n");
      }
      return res.errors.empty() ? 0 : 1;
    } else if (*solve) {
      Formula f = load(solve_file);
      ExtractionResult res = island_extract(f, h);
      SearchConfig cfg;
      cfg.max_flips = budget;
      cfg.rng_seed = rng_seed;
      SearchOutcome out = confined_local_search(f, res, cfg);
      std::cout << search_outcome_to_json(out, f.name, budget, rng_seed).dump()
                << "\n";
      return out.solved ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
