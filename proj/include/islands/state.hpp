#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace islands {

// Total assignment over variables 1..num_vars, packed into 64-bit words.
// States are value types; equality is bit-for-bit.
class State {
 public:
  State() = default;

  explicit State(int num_vars, bool fill = false)
      : num_vars_(num_vars), words_((num_vars + 63) / 64, fill ? ~0ull : 0ull) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
    trim();
  }

  int num_vars() const { return num_vars_; }

  bool value(int var) const {
    check(var);
    return (words_[(var - 1) >> 6] >> ((var - 1) & 63)) & 1u;
  }

  void set(int var, bool v) {
    check(var);
    std::uint64_t mask = 1ull << ((var - 1) & 63);
    if (v)
      words_[(var - 1) >> 6] |= mask;
    else
      words_[(var - 1) >> 6] &= ~mask;
  }

  void flip(int var) {
    check(var);
    words_[(var - 1) >> 6] ^= 1ull << ((var - 1) & 63);
  }

  State flipped(int var) const {
    State s = *this;
    s.flip(var);
    return s;
  }

  // '0'/'1' characters, variable 1 first.
  std::string to_string() const {
    std::string out(num_vars_, '0');
    for (int v = 1; v <= num_vars_; ++v)
      if (value(v)) out[v - 1] = '1';
    return out;
  }

  static State from_string(std::string_view bits) {
    State s(static_cast<int>(bits.size()));
    for (int v = 1; v <= s.num_vars_; ++v) {
      char c = bits[v - 1];
      if (c != '0' && c != '1') throw std::invalid_argument("bad state string");
      if (c == '1') s.set(v, true);
    }
    return s;
  }

  // Bit i of index gives the value of variable i+1; requires num_vars <= 64.
  static State from_index(std::uint64_t index, int num_vars) {
    if (num_vars > 64) throw std::invalid_argument("from_index: too wide");
    State s(num_vars);
    if (!s.words_.empty()) s.words_[0] = index;
    s.trim();
    return s;
  }

  std::uint64_t to_index() const {
    if (num_vars_ > 64) throw std::invalid_argument("to_index: too wide");
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const State&, const State&) = default;

  friend bool operator<(const State& a, const State& b) {
    if (a.num_vars_ != b.num_vars_) return a.num_vars_ < b.num_vars_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(num_vars_) * 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend int hamming_distance(const State& a, const State& b) {
    if (a.num_vars_ != b.num_vars_)
      throw std::invalid_argument("hamming_distance: width mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      d += std::popcount(a.words_[i] ^ b.words_[i]);
    return d;
  }

 private:
  void check(int var) const {
    if (var < 1 || var > num_vars_)
      throw std::out_of_range("variable index out of range");
  }

  void trim() {
    int rem = num_vars_ & 63;
    if (rem != 0 && !words_.empty())
      words_.back() &= (1ull << rem) - 1;
  }

  int num_vars_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.hash(); }
};

// All states at Hamming distance 1, ascending variable index.
inline std::vector<State> neighbors(const State& s) {
  std::vector<State> out;
  out.reserve(s.num_vars());
  for (int v = 1; v <= s.num_vars(); ++v) out.push_back(s.flipped(v));
  return out;
}

using PartialValuation = std::map<int, bool>;

inline PartialValuation project(const State& s, const std::set<int>& vars) {
  PartialValuation out;
  for (int v : vars) out[v] = s.value(v);
  return out;
}

}  // namespace islands
