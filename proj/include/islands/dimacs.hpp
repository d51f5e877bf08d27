#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "islands/cnf.hpp"

namespace islands {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg)
      : std::runtime_error("dimacs: " + msg) {}
};

struct ParseResult {
  Formula formula;
  int tautologies_dropped = 0;
  std::vector<std::string> warnings;
};

// DIMACS CNF. Comment lines start with 'c', one "p cnf <nvars> <nclauses>"
// header, clauses are nonzero integers terminated by 0 and may span or share
// lines. SATLIB '%' footers are tolerated. The header clause count is
// advisory (mismatch warns). Tautologies are dropped and counted; an empty
// clause is an error.
inline ParseResult parse_dimacs(std::istream& in, std::string name = "") {
  ParseResult res;
  res.formula.name = std::move(name);

  bool have_header = false;
  int declared_clauses = 0;
  bool footer = false;
  std::vector<Literal> current;
  std::string line;

  while (std::getline(in, line)) {
    if (footer) break;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok[0] == 'c' && !have_header) continue;
    if (tok == "p") {
      if (have_header) throw ParseError("duplicate header");
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf")
        throw ParseError("malformed header: expected 'p cnf'");
      if (!(ls >> res.formula.num_vars >> declared_clauses) ||
          res.formula.num_vars < 0 || declared_clauses < 0)
        throw ParseError("malformed header counts");
      have_header = true;
      continue;
    }
    if (tok == "%") {
      footer = true;
      continue;
    }
    if (!have_header) throw ParseError("clause data before 'p cnf' header");

    // Re-scan the whole line as integers, first token included.
    std::istringstream nums(line);
    int v;
    while (nums >> v) {
      if (v == 0) {
        if (current.empty())
          throw ParseError("empty clause (instance is unsatisfiable)");
        auto clause = Clause::standardize(std::move(current));
        current.clear();
        if (clause)
          res.formula.clauses.push_back(std::move(*clause));
        else
          ++res.tautologies_dropped;
      } else {
        Literal l = Literal::from_dimacs(v);
        if (l.variable > res.formula.num_vars)
          throw ParseError("literal " + std::to_string(v) +
                           " exceeds declared variable count");
        current.push_back(l);
      }
    }
    if (!nums.eof()) {
      std::string bad;
      nums.clear();
      nums >> bad;
      if (bad == "%") {
        footer = true;
        continue;
      }
      throw ParseError("unexpected token '" + bad + "'");
    }
  }

  if (!have_header) throw ParseError("missing 'p cnf' header");
  if (!current.empty()) throw ParseError("last clause not terminated by 0");
  int seen =
      static_cast<int>(res.formula.clauses.size()) + res.tautologies_dropped;
  if (seen != declared_clauses)
    res.warnings.push_back("header declares " +
                           std::to_string(declared_clauses) + " clauses, " +
                           std::to_string(seen) + " parsed");
  return res;
}

inline ParseResult parse_dimacs(const std::string& text,
                                std::string name = "") {
  std::istringstream in(text);
  return parse_dimacs(in, std::move(name));
}

inline ParseResult parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (name.size() > 4 && name.ends_with(".cnf"))
    name = name.substr(0, name.size() - 4);
  return parse_dimacs(in, name);
}

// Header, one clause per line, literals ascending by variable, 0 terminator.
inline std::string write_dimacs(const Formula& f) {
  std::ostringstream out;
  if (!f.name.empty()) out << "c " << f.name << "\n";
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c.literals()) out << l.to_dimacs() << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace islands
