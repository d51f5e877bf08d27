#pragma once

#include <stdexcept>
#include <vector>

namespace islands {

// A total ordering on variables 1..num_vars, stored as rank per variable
// (0 = least).
class VariableOrdering {
 public:
  VariableOrdering() = default;

  static VariableOrdering natural(int num_vars) {
    VariableOrdering o;
    o.rank_.resize(num_vars + 1);
    for (int v = 1; v <= num_vars; ++v) o.rank_[v] = v - 1;
    return o;
  }

  // Listed variables take ranks 0..k-1 in list order; all remaining
  // variables follow in ascending index order.
  static VariableOrdering from_ranked_vars(const std::vector<int>& first,
                                           int num_vars) {
    VariableOrdering o;
    o.rank_.assign(num_vars + 1, -1);
    int next = 0;
    for (int v : first) {
      if (v < 1 || v > num_vars)
        throw std::invalid_argument("ordering: variable out of range");
      if (o.rank_[v] != -1)
        throw std::invalid_argument("ordering: duplicate variable");
      o.rank_[v] = next++;
    }
    for (int v = 1; v <= num_vars; ++v)
      if (o.rank_[v] == -1) o.rank_[v] = next++;
    return o;
  }

  int rank(int var) const {
    if (var < 1 || var >= static_cast<int>(rank_.size()))
      throw std::out_of_range("ordering: unranked variable");
    return rank_[var];
  }

  int num_vars() const { return static_cast<int>(rank_.size()) - 1; }

  friend bool operator==(const VariableOrdering&,
                         const VariableOrdering&) = default;

 private:
  std::vector<int> rank_;
};

}  // namespace islands
