#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "islands/cnf.hpp"
#include "islands/ordering.hpp"
#include "islands/primal.hpp"
#include "islands/state.hpp"

namespace islands {

// The four "best literal" selection rules. With #(l) the number of working
// clauses containing l:
//   kNegComplement   maximize -#(~l)
//   kDifference      maximize #(l) - #(~l)
//   kRatio           maximize #(l) / #(~l)
//   kNormalizedRatio maximize #(l) / (#(l) + #(~l))
enum class Heuristic { kNegComplement, kDifference, kRatio, kNormalizedRatio };

inline std::string to_string(Heuristic h) {
  switch (h) {
    case Heuristic::kNegComplement: return "neg";
    case Heuristic::kDifference: return "diff";
    case Heuristic::kRatio: return "ratio";
    case Heuristic::kNormalizedRatio: return "nratio";
  }
  throw std::invalid_argument("unknown heuristic");
}

inline Heuristic heuristic_from_string(const std::string& s) {
  if (s == "neg") return Heuristic::kNegComplement;
  if (s == "diff") return Heuristic::kDifference;
  if (s == "ratio") return Heuristic::kRatio;
  if (s == "nratio") return Heuristic::kNormalizedRatio;
  throw std::invalid_argument("unknown heuristic '" + s + "'");
}

constexpr Heuristic kAllHeuristics[] = {
    Heuristic::kNegComplement, Heuristic::kDifference, Heuristic::kRatio,
    Heuristic::kNormalizedRatio};

// Clause occurrence counts per literal. Absent literal counts 0; duplicate
// clauses count once each.
class LiteralCounts {
 public:
  void add(const Clause& c) {
    for (const Literal& l : c.literals()) ++counts_[l.encode()];
  }
  void add(const Literal& l, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("negative count");
    if (n > 0) counts_[l.encode()] += n;
  }
  void remove(const Clause& c) {
    for (const Literal& l : c.literals()) {
      auto it = counts_.find(l.encode());
      if (it == counts_.end() || it->second == 0)
        throw std::logic_error("literal count underflow");
      if (--it->second == 0) counts_.erase(it);
    }
  }
  std::int64_t count(const Literal& l) const {
    auto it = counts_.find(l.encode());
    return it == counts_.end() ? 0 : it->second;
  }
  bool empty() const { return counts_.empty(); }

  // Occurring literals in deterministic order (variable asc, positive first).
  std::vector<Literal> occurring() const {
    std::vector<Literal> out;
    out.reserve(counts_.size());
    for (const auto& [key, n] : counts_) out.push_back(Literal::decode(key));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_map<int, std::int64_t> counts_;
};

inline LiteralCounts literal_counts(std::span<const Clause> clauses) {
  LiteralCounts counts;
  for (const Clause& c : clauses) counts.add(c);
  return counts;
}

// Extended-rational heuristic score. den == 0 marks the infinite tier
// (pure literals under the ratio rules), ranked among themselves by num
// descending; all comparisons are exact integer cross-multiplications.
struct Score {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// -1, 0, 1 as a < b, a == b, a > b.
inline int compare_scores(const Score& a, const Score& b) {
  if (a.den == 0 || b.den == 0) {
    if (a.den != 0) return -1;
    if (b.den != 0) return 1;
    return a.num < b.num ? -1 : a.num > b.num ? 1 : 0;
  }
  std::int64_t lhs = a.num * b.den;
  std::int64_t rhs = b.num * a.den;
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

// Note kRatio and kNormalizedRatio share one comparison kernel:
// a1/(a1+b1) >= a2/(a2+b2) iff a1*b2 >= a2*b1 iff a1/b1 >= a2/b2, so both
// return the score as the pair (#(l), #(~l)).
inline Score heuristic_score(const Literal& l, const LiteralCounts& counts,
                             Heuristic h) {
  std::int64_t a = counts.count(l);
  std::int64_t b = counts.count(l.complement());
  if (a == 0)
    throw std::invalid_argument("heuristic_score: literal does not occur");
  switch (h) {
    case Heuristic::kNegComplement: return {-b, 1};
    case Heuristic::kDifference: return {a - b, 1};
    case Heuristic::kRatio:
    case Heuristic::kNormalizedRatio: return {a, b};
  }
  throw std::invalid_argument("unknown heuristic");
}

namespace detail {

// Ties on score break by smaller variable index, then positive polarity.
inline Literal best_from_counts(const LiteralCounts& counts, Heuristic h) {
  if (counts.empty())
    throw std::invalid_argument("best_literal: no clauses remain");
  bool have = false;
  Literal best{};
  Score best_score{};
  for (const Literal& l : counts.occurring()) {
    Score s = heuristic_score(l, counts, h);
    if (!have || compare_scores(s, best_score) > 0) {
      have = true;
      best = l;
      best_score = s;
    }
  }
  return best;
}

}  // namespace detail

inline Literal best_literal(std::span<const Clause> clauses, Heuristic h) {
  if (clauses.empty())
    throw std::invalid_argument("best_literal: empty clause set");
  return detail::best_from_counts(literal_counts(clauses), h);
}

// Output of the greedy island extraction.
struct ExtractionResult {
  std::string instance;
  int num_vars = 0;
  Heuristic heuristic = Heuristic::kRatio;
  std::vector<Clause> island;        // Q, in source order
  std::vector<Literal> primal_list;  // L, in pick order
  VariableOrdering induced_ordering;
  std::vector<Clause> removed;       // C - Q, in source order
  State seed;

  double coverage_pct() const {
    std::size_t total = island.size() + removed.size();
    return total == 0 ? 100.0 : 100.0 * island.size() / total;
  }

  friend bool operator==(const ExtractionResult&,
                         const ExtractionResult&) = default;
};

// Greedy extraction of a primal non-conflicting subset: repeatedly pick the
// best literal l, move every working clause containing l into the island,
// and drop every working clause containing l or ~l. The pick order of L
// induces the variable ordering (L's variables first, the rest ascending
// after them), and the seed extends L with default_value elsewhere.
inline ExtractionResult island_extract(const Formula& f, Heuristic h,
                                       bool default_value = true) {
  ExtractionResult res;
  res.instance = f.name;
  res.num_vars = f.num_vars;
  res.heuristic = h;

  const std::size_t m = f.clauses.size();
  std::vector<bool> alive(m, true);
  std::vector<bool> in_island(m, false);
  LiteralCounts counts = literal_counts(f.clauses);
  std::size_t remaining = m;

  while (remaining > 0) {
    Literal l = detail::best_from_counts(counts, h);
    res.primal_list.push_back(l);
    Literal lbar = l.complement();
    for (std::size_t ci = 0; ci < m; ++ci) {
      if (!alive[ci]) continue;
      const Clause& c = f.clauses[ci];
      if (c.contains(l))
        in_island[ci] = true;
      else if (!c.contains(lbar))
        continue;
      alive[ci] = false;
      counts.remove(c);
      --remaining;
    }
  }

  for (std::size_t ci = 0; ci < m; ++ci)
    (in_island[ci] ? res.island : res.removed).push_back(f.clauses[ci]);

  std::vector<int> primal_vars;
  for (const Literal& l : res.primal_list) primal_vars.push_back(l.variable);
  res.induced_ordering =
      VariableOrdering::from_ranked_vars(primal_vars, f.num_vars);
  res.seed =
      seed_solution(res.island, res.induced_ordering, default_value, f.num_vars);
  return res;
}

}  // namespace islands
