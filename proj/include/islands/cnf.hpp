#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "islands/state.hpp"

namespace islands {

// A variable (positive) or its complement (negative). Variables are 1-based.
struct Literal {
  int variable = 0;
  bool positive = true;

  Literal complement() const { return {variable, !positive}; }

  bool holds_in(const State& s) const { return s.value(variable) == positive; }

  int to_dimacs() const { return positive ? variable : -variable; }

  static Literal from_dimacs(int v) {
    if (v == 0) throw std::invalid_argument("literal cannot be 0");
    return {std::abs(v), v > 0};
  }

  // Dense key for count maps: positive literals even, negative odd.
  int encode() const { return variable * 2 + (positive ? 0 : 1); }

  static Literal decode(int key) { return {key / 2, key % 2 == 0}; }

  std::string to_string() const {
    return positive ? "x" + std::to_string(variable)
                    : "-x" + std::to_string(variable);
  }

  friend bool operator==(const Literal&, const Literal&) = default;

  // Ascending variable, positive before negative.
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.variable != b.variable) return a.variable < b.variable;
    return a.positive && !b.positive;
  }
};

// Standard-form clause: sorted, no duplicate literals, no variable in both
// polarities, nonempty.
class Clause {
 public:
  // Merges duplicates; returns nullopt when some variable occurs in both
  // polarities (the clause is a tautology). Throws on an empty input.
  static std::optional<Clause> standardize(std::vector<Literal> raw) {
    if (raw.empty()) throw std::invalid_argument("empty clause");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (std::size_t i = 1; i < raw.size(); ++i)
      if (raw[i].variable == raw[i - 1].variable) return std::nullopt;
    return Clause(std::move(raw));
  }

  const std::vector<Literal>& literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }

  bool contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  bool contains_variable(int var) const {
    return contains({var, true}) || contains({var, false});
  }

  int max_variable() const { return lits_.back().variable; }

  bool evaluate(const State& s) const {
    for (const Literal& l : lits_)
      if (l.holds_in(s)) return true;
    return false;
  }

  friend bool operator==(const Clause&, const Clause&) = default;
  friend bool operator<(const Clause& a, const Clause& b) {
    return a.lits_ < b.lits_;
  }

 private:
  explicit Clause(std::vector<Literal> sorted) : lits_(std::move(sorted)) {}
  std::vector<Literal> lits_;
};

// A parsed instance: clause order is preserved exactly as given.
struct Formula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::string name;

  bool evaluate(const State& s) const {
    if (s.num_vars() != num_vars)
      throw std::invalid_argument("evaluate: state width mismatch");
    for (const Clause& c : clauses)
      if (!c.evaluate(s)) return false;
    return true;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.num_vars == b.num_vars && a.clauses == b.clauses;
  }
};

inline bool evaluate(const Clause& c, const State& s) { return c.evaluate(s); }
inline bool evaluate(const Formula& f, const State& s) { return f.evaluate(s); }

inline bool evaluate(std::span<const Clause> clauses, const State& s) {
  for (const Clause& c : clauses)
    if (!c.evaluate(s)) return false;
  return true;
}

}  // namespace islands
