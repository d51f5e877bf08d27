#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "islands/cnf.hpp"
#include "islands/enumerate.hpp"
#include "islands/ordering.hpp"
#include "islands/state.hpp"

namespace islands {

// No variable occurs in both polarities anywhere across the set.
inline bool is_non_conflicting(std::span<const Clause> clauses) {
  std::set<Literal> seen;
  for (const Clause& c : clauses)
    for (const Literal& l : c.literals()) seen.insert(l);
  for (const Literal& l : seen)
    if (seen.count(l.complement())) return false;
  return true;
}

// The literal of c whose variable is least under the ordering.
inline Literal primal_literal(const Clause& c, const VariableOrdering& ord) {
  const Literal* best = nullptr;
  for (const Literal& l : c.literals()) {
    ord.rank(l.variable);  // throws on unranked variable
    if (!best || ord.rank(l.variable) < ord.rank(best->variable)) best = &l;
  }
  if (!best) throw std::invalid_argument("primal_literal: empty clause");
  return *best;
}

struct PrimalLiteralSet {
  std::vector<Literal> literals;  // sorted, duplicates collapsed
  VariableOrdering ordering;

  bool contains(const Literal& l) const {
    return std::binary_search(literals.begin(), literals.end(), l);
  }
};

inline PrimalLiteralSet primal_literal_set(std::span<const Clause> clauses,
                                           const VariableOrdering& ord) {
  PrimalLiteralSet out;
  out.ordering = ord;
  for (const Clause& c : clauses) out.literals.push_back(primal_literal(c, ord));
  std::sort(out.literals.begin(), out.literals.end());
  out.literals.erase(std::unique(out.literals.begin(), out.literals.end()),
                     out.literals.end());
  return out;
}

inline bool is_primal_non_conflicting(std::span<const Clause> clauses,
                                      const VariableOrdering& ord) {
  PrimalLiteralSet p = primal_literal_set(clauses, ord);
  for (const Literal& l : p.literals)
    if (p.contains(l.complement())) return false;
  return true;
}

// Any state extending the primal literal set satisfies the whole set; every
// other variable gets `default_value`.
inline State seed_solution(std::span<const Clause> clauses,
                           const VariableOrdering& ord, bool default_value,
                           int num_vars) {
  if (!is_primal_non_conflicting(clauses, ord))
    throw std::invalid_argument(
        "seed_solution: clause set is not primal non-conflicting");
  State s(num_vars, default_value);
  for (const Literal& l : primal_literal_set(clauses, ord).literals)
    s.set(l.variable, l.positive);
  return s;
}

inline constexpr std::uint64_t kDefaultPermutationGuard = 3628800;  // 10!

// Searches all orderings of the variables occurring in the clauses (others
// are appended after, which cannot affect primal literals) for one that makes
// the set primal non-conflicting. Definitive when it returns nullopt.
inline std::optional<VariableOrdering> exists_primal_ordering(
    std::span<const Clause> clauses, int num_vars,
    std::uint64_t guard = kDefaultPermutationGuard) {
  std::set<int> vars;
  for (const Clause& c : clauses)
    for (const Literal& l : c.literals()) vars.insert(l.variable);

  std::uint64_t permutations = 1;
  for (std::uint64_t k = 2; k <= vars.size(); ++k) {
    permutations *= k;
    if (permutations > guard) throw GuardExceeded(permutations, guard);
  }

  std::vector<int> perm(vars.begin(), vars.end());
  do {
    VariableOrdering ord = VariableOrdering::from_ranked_vars(perm, num_vars);
    if (is_primal_non_conflicting(clauses, ord)) return ord;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace islands
