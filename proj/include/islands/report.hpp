#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "islands/cnf.hpp"
#include "islands/confined.hpp"
#include "islands/dimacs.hpp"
#include "islands/enumerate.hpp"
#include "islands/extract.hpp"

namespace islands {

// |Space(Q)|: satisfying assignments of the island clauses alone, over all
// declared variables (variables absent from Q contribute a factor of 2 each).
inline std::uint64_t island_space_size(const ExtractionResult& res,
                                       std::uint64_t guard = kDefaultGuard) {
  Formula q{res.num_vars, res.island, res.instance};
  return count_solutions(q, guard);
}

// 2^num_vars / space, rounded half-up, as presented in search-space
// reduction tables.
inline std::uint64_t reduction_factor(int num_vars, std::uint64_t space) {
  std::uint64_t total = 1ull << num_vars;
  return (2 * total + space) / (2 * space);
}

struct InstanceReport {
  std::string name;
  std::uint64_t num_clauses = 0;
  std::uint64_t island_clauses = 0;
  double coverage_pct = 100.0;
  std::uint64_t num_vars = 0;
  std::uint64_t confined_degree = 0;
  double confined_pct = 100.0;
  std::optional<std::uint64_t> island_space;
  std::optional<std::uint64_t> reduction;
  std::optional<std::uint64_t> model_count;
  Heuristic heuristic = Heuristic::kRatio;
  double wall_time_s = 0.0;

  friend bool operator==(const InstanceReport&,
                         const InstanceReport&) = default;
};

struct StatsOptions {
  bool enumerate = false;
  std::uint64_t guard = kDefaultGuard;
  bool seed_default = true;
};

inline InstanceReport stats_report(const Formula& f, Heuristic h,
                                   const StatsOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  InstanceReport rep;
  rep.name = f.name;
  rep.heuristic = h;
  rep.num_clauses = f.clauses.size();
  rep.num_vars = f.num_vars;

  ExtractionResult res = island_extract(f, h, opt.seed_default);
  rep.island_clauses = res.island.size();
  rep.coverage_pct = res.coverage_pct();
  rep.confined_degree = island_neighborhood_size(res);
  rep.confined_pct =
      f.num_vars == 0 ? 100.0 : 100.0 * rep.confined_degree / f.num_vars;

  if (opt.enumerate) {
    // Enumeration refusal degrades the report instead of failing it.
    try {
      std::uint64_t space = island_space_size(res, opt.guard);
      rep.island_space = space;
      if (space > 0) rep.reduction = reduction_factor(f.num_vars, space);
      rep.model_count = count_solutions(f, opt.guard);
    } catch (const GuardExceeded&) {
    }
  }

  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// --- serialization ------------------------------------------------------

inline void to_json(nlohmann::json& j, const InstanceReport& r) {
  j = {{"name", r.name},
       {"num_clauses", r.num_clauses},
       {"island_clauses", r.island_clauses},
       {"coverage_pct", r.coverage_pct},
       {"num_vars", r.num_vars},
       {"confined_degree", r.confined_degree},
       {"confined_pct", r.confined_pct},
       {"heuristic", to_string(r.heuristic)},
       {"wall_time_s", r.wall_time_s}};
  if (r.island_space) j["island_space"] = *r.island_space;
  if (r.reduction) j["reduction"] = *r.reduction;
  if (r.model_count) j["model_count"] = *r.model_count;
}

inline void from_json(const nlohmann::json& j, InstanceReport& r) {
  j.at("name").get_to(r.name);
  j.at("num_clauses").get_to(r.num_clauses);
  j.at("island_clauses").get_to(r.island_clauses);
  j.at("coverage_pct").get_to(r.coverage_pct);
  j.at("num_vars").get_to(r.num_vars);
  j.at("confined_degree").get_to(r.confined_degree);
  j.at("confined_pct").get_to(r.confined_pct);
  r.heuristic = heuristic_from_string(j.at("heuristic").get<std::string>());
  j.at("wall_time_s").get_to(r.wall_time_s);
  r.island_space.reset();
  r.reduction.reset();
  r.model_count.reset();
  if (j.contains("island_space")) r.island_space = j["island_space"].get<std::uint64_t>();
  if (j.contains("reduction")) r.reduction = j["reduction"].get<std::uint64_t>();
  if (j.contains("model_count")) r.model_count = j["model_count"].get<std::uint64_t>();
}

// Columns mirror the extraction table first, then the enumeration extensions.
inline std::string report_csv_header() {
  return "name,num_clauses,island_clauses,coverage_pct,num_vars,"
         "confined_degree,confined_pct,island_space,reduction,model_count,"
         "heuristic,wall_time_s";
}

inline std::string report_csv_row(const InstanceReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << r.name << ',' << r.num_clauses << ',' << r.island_clauses << ','
      << r.coverage_pct << ',' << r.num_vars << ',' << r.confined_degree << ','
      << r.confined_pct << ',';
  if (r.island_space) out << *r.island_space;
  out << ',';
  if (r.reduction) out << *r.reduction;
  out << ',';
  if (r.model_count) out << *r.model_count;
  out << ',' << to_string(r.heuristic) << ',' << std::setprecision(3)
      << r.wall_time_s;
  return out.str();
}

// ExtractionResult report record: instance, |C|, |Q|, coverage, |L|,
// heuristic, seed.
inline nlohmann::json extraction_to_json(const ExtractionResult& res) {
  return {{"instance", res.instance},
          {"num_clauses", res.island.size() + res.removed.size()},
          {"island_clauses", res.island.size()},
          {"coverage_pct", res.coverage_pct()},
          {"primal_literals", res.primal_list.size()},
          {"heuristic", to_string(res.heuristic)},
          {"seed", res.seed.to_string()}};
}

inline std::string extraction_csv_header() {
  return "instance,num_clauses,island_clauses,coverage_pct,primal_literals,"
         "heuristic,seed";
}

inline std::string extraction_csv_row(const ExtractionResult& res) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << res.instance << ',' << res.island.size() + res.removed.size() << ','
      << res.island.size() << ',' << res.coverage_pct() << ','
      << res.primal_list.size() << ',' << to_string(res.heuristic) << ','
      << res.seed.to_string();
  return out.str();
}

inline nlohmann::json search_outcome_to_json(const SearchOutcome& out,
                                             const std::string& instance,
                                             std::uint64_t budget,
                                             std::uint64_t rng_seed) {
  return {{"instance", instance},
          {"solved", out.solved},
          {"flips_used", out.flips_used},
          {"budget", budget},
          {"rng_seed", rng_seed},
          {"final_state", out.final_state.to_string()}};
}

// --- suite runner -------------------------------------------------------

struct SuiteResult {
  std::vector<InstanceReport> reports;           // ordered by input path
  std::vector<std::pair<std::string, std::string>> errors;  // path, message
  std::optional<double> mean_coverage_pct;       // absent when no reports
};

inline std::vector<std::string> collect_cnf_files(
    const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      for (const auto& e : fs::recursive_directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".cnf")
          files.push_back(e.path().string());
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

inline SuiteResult run_suite(const std::vector<std::string>& paths,
                             Heuristic h, const StatsOptions& opt = {}) {
  SuiteResult out;
  for (const std::string& file : collect_cnf_files(paths)) {
    try {
      ParseResult parsed = parse_dimacs_file(file);
      out.reports.push_back(stats_report(parsed.formula, h, opt));
    } catch (const std::exception& e) {
      out.errors.push_back({file, e.what()});
    }
  }
  if (!out.reports.empty()) {
    double sum = 0;
    for (const InstanceReport& r : out.reports) sum += r.coverage_pct;
    out.mean_coverage_pct = sum / out.reports.size();
  }
  return out;
}

}  // namespace islands
