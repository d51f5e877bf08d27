#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "islands/cnf.hpp"
#include "islands/extract.hpp"
#include "islands/state.hpp"

namespace islands {

// Variables whose flip keeps every island clause satisfied, from a state
// already on the island.
struct ConfinedNeighborhood {
  State origin;
  std::vector<int> flippable;  // ascending
};

// A variable is unflippable exactly when some island clause is satisfied
// solely by its literal on that variable (a critically-satisfied clause).
inline ConfinedNeighborhood on_island_neighbors(const State& s,
                                                std::span<const Clause> island) {
  ConfinedNeighborhood out;
  out.origin = s;
  std::vector<bool> critical(s.num_vars() + 1, false);
  for (const Clause& c : island) {
    int true_count = 0;
    int sole_var = 0;
    for (const Literal& l : c.literals())
      if (l.holds_in(s)) {
        ++true_count;
        sole_var = l.variable;
      }
    if (true_count == 0)
      throw std::invalid_argument("on_island_neighbors: state not on island");
    if (true_count == 1) critical[sole_var] = true;
  }
  for (int v = 1; v <= s.num_vars(); ++v)
    if (!critical[v]) out.flippable.push_back(v);
  return out;
}

// |n(L)|: the confined-neighbor count of the extraction's seed state.
inline std::size_t island_neighborhood_size(const ExtractionResult& res) {
  return on_island_neighbors(res.seed, res.island).flippable.size();
}

struct SearchConfig {
  std::uint64_t max_flips = 10000;
  std::uint64_t rng_seed = 0;
  // 0 picks the scale-free defaults: window 10 * num_vars, walk num_vars.
  std::uint64_t stagnation_window = 0;
  std::uint64_t restart_walk_length = 0;
  // Re-checks the full island at every visited state.
  bool audit = false;
};

struct SearchOutcome {
  bool solved = false;
  State final_state;
  std::uint64_t flips_used = 0;
  // Count of unsatisfied non-island clauses, recorded at the start and after
  // every flip.
  std::vector<std::uint32_t> unsat_trace;
};

namespace detail {

// Incremental bookkeeping for one clause group: per-clause true-literal
// counters updated in O(occurrences of the flipped variable).
class ClauseTracker {
 public:
  ClauseTracker(std::span<const Clause> clauses, int num_vars)
      : clauses_(clauses), occ_(num_vars + 1), true_count_(clauses.size(), 0) {
    for (std::size_t ci = 0; ci < clauses.size(); ++ci)
      for (const Literal& l : clauses[ci].literals())
        occ_[l.variable].push_back({static_cast<std::uint32_t>(ci), l.positive});
  }

  void reset(const State& s) {
    unsat_ = 0;
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      true_count_[ci] = 0;
      for (const Literal& l : clauses_[ci].literals())
        if (l.holds_in(s)) ++true_count_[ci];
      if (true_count_[ci] == 0) ++unsat_;
    }
  }

  // Change in unsat count if var were flipped in state s.
  int flip_delta(int var, const State& s) const {
    int delta = 0;
    bool newval = !s.value(var);
    for (auto [ci, pos] : occ_[var]) {
      if (pos == newval) {
        if (true_count_[ci] == 0) --delta;
      } else {
        if (true_count_[ci] == 1) ++delta;
      }
    }
    return delta;
  }

  // Applies the flip; s must already hold the new value of var.
  void apply_flip(int var, const State& s) {
    bool newval = s.value(var);
    for (auto [ci, pos] : occ_[var]) {
      if (pos == newval) {
        if (++true_count_[ci] == 1) --unsat_;
      } else {
        if (--true_count_[ci] == 0) ++unsat_;
      }
    }
  }

  // Variable flips that would falsify no clause, i.e. no clause is
  // critically satisfied by that variable.
  std::vector<int> flippable(const State& s) const {
    std::vector<bool> critical(occ_.size(), false);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
      if (true_count_[ci] != 1) continue;
      for (const Literal& l : clauses_[ci].literals())
        if (l.holds_in(s)) {
          critical[l.variable] = true;
          break;
        }
    }
    std::vector<int> out;
    for (std::size_t v = 1; v < occ_.size(); ++v)
      if (!critical[v]) out.push_back(static_cast<int>(v));
    return out;
  }

  std::uint32_t unsat() const { return unsat_; }

 private:
  std::span<const Clause> clauses_;
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> occ_;
  std::vector<std::uint32_t> true_count_;
  std::uint32_t unsat_ = 0;
};

}  // namespace detail

// GSAT-style best-improvement search confined to the extracted island: moves
// only through flips that keep every island clause satisfied, scoring flips
// by the unsatisfied count of the remaining clauses. Sideways moves are
// allowed; after a stagnation window the search restarts with a random
// confined walk from the seed. Deterministic for a fixed rng_seed.
inline SearchOutcome confined_local_search(const Formula& f,
                                           const ExtractionResult& res,
                                           const SearchConfig& cfg = {}) {
  if (res.num_vars != f.num_vars ||
      res.island.size() + res.removed.size() != f.clauses.size())
    throw std::invalid_argument(
        "confined_local_search: extraction does not match formula");
  if (cfg.max_flips < 1)
    throw std::invalid_argument("confined_local_search: budget must be >= 1");

  const int n = f.num_vars;
  const std::uint64_t window =
      cfg.stagnation_window ? cfg.stagnation_window : 10ull * n;
  const std::uint64_t walk_length =
      cfg.restart_walk_length ? cfg.restart_walk_length : std::uint64_t(n);

  detail::ClauseTracker island(res.island, n);
  detail::ClauseTracker rest(res.removed, n);
  std::mt19937_64 rng(cfg.rng_seed);

  State cur = res.seed;
  island.reset(cur);
  rest.reset(cur);

  SearchOutcome out;
  out.unsat_trace.push_back(rest.unsat());

  auto audit_state = [&]() {
    if (cfg.audit && !evaluate(std::span<const Clause>(res.island), cur))
      throw std::logic_error("confinement violated");
  };
  audit_state();

  auto do_flip = [&](int var) {
    cur.flip(var);
    island.apply_flip(var, cur);
    rest.apply_flip(var, cur);
    ++out.flips_used;
    out.unsat_trace.push_back(rest.unsat());
    audit_state();
  };

  std::uint32_t best_seen = rest.unsat();
  std::uint64_t stagnant = 0;
  std::uint64_t walk_left = 0;

  while (rest.unsat() > 0 && out.flips_used < cfg.max_flips) {
    std::vector<int> flippable = island.flippable(cur);
    if (flippable.empty()) break;  // confined moves exhausted

    if (walk_left > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, flippable.size() - 1);
      do_flip(flippable[pick(rng)]);
      --walk_left;
      continue;
    }

    int best_delta = 0;
    std::vector<int> ties;
    bool first = true;
    for (int v : flippable) {
      int delta = rest.flip_delta(v, cur);
      if (first || delta < best_delta) {
        first = false;
        best_delta = delta;
        ties.clear();
      }
      if (delta == best_delta) ties.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
    do_flip(ties[pick(rng)]);

    if (rest.unsat() < best_seen) {
      best_seen = rest.unsat();
      stagnant = 0;
    } else if (++stagnant >= window && rest.unsat() > 0) {
      cur = res.seed;
      island.reset(cur);
      rest.reset(cur);
      audit_state();
      walk_left = walk_length;
      stagnant = 0;
      best_seen = rest.unsat();
    }
  }

  out.solved = rest.unsat() == 0;
  out.final_state = cur;
  return out;
}

}  // namespace islands
