#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "islands/cnf.hpp"
#include "islands/state.hpp"

namespace islands {

inline constexpr std::uint64_t kDefaultGuard = 1ull << 26;

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::uint64_t required, std::uint64_t guard)
      : std::runtime_error("enumeration requires " + std::to_string(required) +
                           " states, guard is " + std::to_string(guard)),
        required_budget(required) {}
  std::uint64_t required_budget;
};

namespace detail {

inline void check_guard(int num_vars, std::uint64_t guard) {
  if (num_vars >= 64 || (1ull << num_vars) > guard)
    throw GuardExceeded(num_vars >= 64 ? ~0ull : 1ull << num_vars, guard);
}

// Walks all 2^n states in Gray-code order, maintaining per-clause
// true-literal counts so each step is O(occurrences of the flipped variable).
template <typename OnSolution>
void for_each_solution(const Formula& f, OnSolution&& fn) {
  const int n = f.num_vars;
  const std::size_t m = f.clauses.size();

  // occ[v]: (clause index, polarity) pairs for variable v.
  std::vector<std::vector<std::pair<std::uint32_t, bool>>> occ(n + 1);
  for (std::size_t ci = 0; ci < m; ++ci)
    for (const Literal& l : f.clauses[ci].literals())
      occ[l.variable].push_back({static_cast<std::uint32_t>(ci), l.positive});

  std::vector<std::uint32_t> true_count(m, 0);
  std::size_t unsat = 0;
  State cur(n);  // all-false start
  for (std::size_t ci = 0; ci < m; ++ci) {
    for (const Literal& l : f.clauses[ci].literals())
      if (!l.positive) ++true_count[ci];
    if (true_count[ci] == 0) ++unsat;
  }

  const std::uint64_t total = n >= 64 ? 0 : (1ull << n);
  for (std::uint64_t i = 0;; ++i) {
    if (unsat == 0) fn(cur);
    if (i + 1 >= total) break;
    int var = std::countr_zero(i + 1) + 1;
    bool newval = !cur.value(var);
    cur.flip(var);
    for (auto [ci, pos] : occ[var]) {
      if (pos == newval) {
        if (++true_count[ci] == 1) --unsat;
      } else {
        if (--true_count[ci] == 0) ++unsat;
      }
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

struct SolutionSpace {
  std::vector<State> states;  // sorted, duplicate-free
  std::size_t size() const { return states.size(); }
};

// Exhaustive enumeration of sol(f). Refuses when 2^num_vars exceeds guard.
inline SolutionSpace enumerate_solutions(const Formula& f,
                                         std::uint64_t guard = kDefaultGuard) {
  detail::check_guard(f.num_vars, guard);
  SolutionSpace space;
  detail::for_each_solution(f, [&](const State& s) { space.states.push_back(s); });
  std::sort(space.states.begin(), space.states.end());
  return space;
}

inline std::uint64_t count_solutions(const Formula& f,
                                     std::uint64_t guard = kDefaultGuard) {
  detail::check_guard(f.num_vars, guard);
  std::uint64_t count = 0;
  detail::for_each_solution(f, [&](const State&) { ++count; });
  return count;
}

struct IslandCheck {
  bool island = false;
  std::size_t num_solutions = 0;
  // Two solutions in distinct components, present only when island is false.
  std::optional<std::pair<State, State>> witness;
};

// Decides whether sol(f) is connected under single-variable flips. The graph
// is built by probing each solution's num_vars neighbors against a hash set,
// never by pairwise comparison. |sol(f)| <= 1 is an island by definition.
inline IslandCheck is_island(const Formula& f,
                             std::uint64_t guard = kDefaultGuard) {
  SolutionSpace space = enumerate_solutions(f, guard);
  IslandCheck res;
  res.num_solutions = space.size();
  if (space.size() <= 1) {
    res.island = true;
    return res;
  }

  std::unordered_map<State, std::size_t, StateHash> index;
  index.reserve(space.size() * 2);
  for (std::size_t i = 0; i < space.size(); ++i) index.emplace(space.states[i], i);

  detail::UnionFind uf(space.size());
  State probe;
  for (std::size_t i = 0; i < space.size(); ++i) {
    probe = space.states[i];
    for (int v = 1; v <= f.num_vars; ++v) {
      probe.flip(v);
      if (auto it = index.find(probe); it != index.end()) uf.unite(i, it->second);
      probe.flip(v);
    }
  }

  std::size_t root = uf.find(0);
  for (std::size_t i = 1; i < space.size(); ++i) {
    if (uf.find(i) != root) {
      res.witness = {space.states[0], space.states[i]};
      return res;
    }
  }
  res.island = true;
  return res;
}

struct CompositionalityCheck {
  bool compositional = false;
  // Exhaustive mode is definitive; sampled mode is only a falsification
  // attempt ("no counterexample found").
  bool exhaustive = false;
  std::size_t subsets_checked = 0;
};

inline CompositionalityCheck is_compositional(const Formula& f,
                                              std::uint64_t guard = kDefaultGuard,
                                              std::size_t sample_count = 200,
                                              std::uint64_t sample_seed = 1) {
  detail::check_guard(f.num_vars, guard);
  const std::size_t m = f.clauses.size();
  CompositionalityCheck res;
  res.compositional = true;

  auto check_subset = [&](const std::vector<bool>& pick) {
    Formula sub{f.num_vars, {}, f.name};
    for (std::size_t ci = 0; ci < m; ++ci)
      if (pick[ci]) sub.clauses.push_back(f.clauses[ci]);
    ++res.subsets_checked;
    return is_island(sub, guard).island;
  };

  if (m <= 12) {
    res.exhaustive = true;
    std::vector<bool> pick(m);
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
      for (std::size_t ci = 0; ci < m; ++ci) pick[ci] = mask & (1ull << ci);
      if (!check_subset(pick)) {
        res.compositional = false;
        return res;
      }
    }
    return res;
  }

  std::mt19937_64 rng(sample_seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> pick(m);
  for (std::size_t i = 0; i < sample_count; ++i) {
    for (std::size_t ci = 0; ci < m; ++ci) pick[ci] = coin(rng);
    if (!check_subset(pick)) {
      res.compositional = false;
      return res;
    }
  }
  return res;
}

}  // namespace islands
