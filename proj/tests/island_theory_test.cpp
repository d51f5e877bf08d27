#include <catch_amalgamated.hpp>

#include "islands/enumerate.hpp"
#include "islands/primal.hpp"
#include "test_util.hpp"

using namespace islands;
using testutil::make_clause;
using testutil::make_formula;

namespace {

// The two-clause mirror-image set: an island, compositional, yet primal
// non-conflicting under no ordering.
Formula mirror() {
  return make_formula(3, {{1, 2, -3}, {-1, -2, 3}}, "mirror");
}

// Forces x1 = x2 = x3, leaving exactly the two solutions 000 and 111.
Formula equality_chain() {
  return make_formula(3, {{-1, 2}, {-2, 3}, {-3, 1}}, "chain");
}

}  // namespace

TEST_CASE("enumerate_solutions") {
  auto space = enumerate_solutions(make_formula(2, {{1, 2}}));
  REQUIRE(space.size() == 3);
  std::set<std::string> got;
  for (const State& s : space.states) got.insert(s.to_string());
  CHECK(got == std::set<std::string>{"11", "10", "01"});

  SECTION("matches the naive oracle on random formulas") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
      Formula f = testutil::random_formula(rng, 2 + int(rng() % 9),
                                           int(rng() % 15), 4);
      auto sols = enumerate_solutions(f).states;
      auto expect = testutil::oracle_solutions(f);
      std::sort(expect.begin(), expect.end());
      CHECK(sols == expect);
    }
  }
  SECTION("guard refusal reports the required budget") {
    Formula f{30, {}, "wide"};
    try {
      enumerate_solutions(f, 1 << 20);
      FAIL("expected GuardExceeded");
    } catch (const GuardExceeded& e) {
      CHECK(e.required_budget == (1ull << 30));
    }
  }
  SECTION("unsatisfiable formula yields the empty space") {
    Formula f = make_formula(1, {{1}, {-1}});
    CHECK(enumerate_solutions(f).size() == 0);
    CHECK(is_island(f).island);  // trivial island
  }
}

TEST_CASE("is_island") {
  SECTION("single standard-form clauses are islands") {
    testutil::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      int n = 2 + int(rng() % 11);
      Formula f{n, {testutil::random_clause(rng, n)}, "one"};
      CHECK(is_island(f).island);
    }
  }
  SECTION("mirror example is an island") {
    CHECK(is_island(mirror()).island);
  }
  SECTION("two isolated solutions with a witness") {
    auto res = is_island(equality_chain());
    CHECK_FALSE(res.island);
    CHECK(res.num_solutions == 2);
    REQUIRE(res.witness);
    std::set<std::string> w{res.witness->first.to_string(),
                            res.witness->second.to_string()};
    CHECK(w == std::set<std::string>{"000", "111"});
  }
  SECTION("agrees with BFS oracle on random formulas") {
    testutil::Rng rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      Formula f = testutil::random_formula(rng, 2 + int(rng() % 7),
                                           1 + int(rng() % 10), 3);
      CHECK(is_island(f).island == testutil::oracle_is_island(f));
    }
  }
}

TEST_CASE("is_non_conflicting") {
  std::vector<Clause> a{make_clause({1, 2}), make_clause({2, 3})};
  CHECK(is_non_conflicting(a));
  std::vector<Clause> b{make_clause({1, 2}), make_clause({-1, 3})};
  CHECK_FALSE(is_non_conflicting(b));
  CHECK(is_non_conflicting({}));
}

TEST_CASE("primal literals") {
  auto natural = VariableOrdering::natural(5);
  CHECK(primal_literal(make_clause({2, -5, 4}), natural) == Literal{2, true});
  CHECK(primal_literal(make_clause({-3}), natural) == Literal{3, false});

  auto reversed = VariableOrdering::from_ranked_vars({3, 1}, 3);
  CHECK(primal_literal(make_clause({1, 3}), reversed) == Literal{3, true});

  SECTION("worked five-variable example") {
    // pLit = {~x2, x4, ~x5}; extending it with default 1 gives 10110.
    std::vector<Clause> cs{make_clause({-2, 3}), make_clause({4, 5}),
                           make_clause({-5})};
    auto p = primal_literal_set(cs, natural);
    CHECK(p.literals == std::vector<Literal>{{2, false}, {4, true}, {5, false}});
    CHECK(is_primal_non_conflicting(cs, natural));
    State seed = seed_solution(cs, natural, true, 5);
    CHECK(seed.to_string() == "10110");
    CHECK(evaluate(std::span<const Clause>(cs), seed));
  }
  SECTION("mirror set collapses to a conflicting primal set") {
    auto f = mirror();
    auto p = primal_literal_set(f.clauses, VariableOrdering::natural(3));
    CHECK(p.literals == std::vector<Literal>{{1, true}, {1, false}});
    CHECK_FALSE(is_primal_non_conflicting(f.clauses, VariableOrdering::natural(3)));
  }
  SECTION("non-conflicting under a suitable ordering") {
    std::vector<Clause> cs{make_clause({1, 2}), make_clause({-2, 3})};
    CHECK(is_primal_non_conflicting(cs, VariableOrdering::natural(3)));
    auto p = primal_literal_set(cs, VariableOrdering::natural(3));
    CHECK(p.literals == std::vector<Literal>{{1, true}, {2, false}});
  }
}

TEST_CASE("seed_solution") {
  auto natural = VariableOrdering::natural(2);
  std::vector<Clause> cs{make_clause({-2})};
  CHECK(seed_solution(cs, natural, false, 2).to_string() == "00");

  auto f = mirror();
  CHECK_THROWS_AS(seed_solution(f.clauses, VariableOrdering::natural(3), true, 3),
                  std::invalid_argument);
}

TEST_CASE("exists_primal_ordering") {
  SECTION("mirror set has none across all 3! orderings") {
    CHECK(!exists_primal_ordering(mirror().clauses, 3));
  }
  SECTION("non-conflicting sets admit the natural ordering") {
    testutil::Rng rng(41);
    auto cs = testutil::random_non_conflicting_set(rng, 6, 8, 3);
    auto ord = exists_primal_ordering(cs, 6);
    REQUIRE(ord);
    CHECK(is_primal_non_conflicting(cs, *ord));
  }
  SECTION("conflicting-but-orderable set") {
    std::vector<Clause> cs{make_clause({1, 2}), make_clause({-1, 3})};
    auto ord = exists_primal_ordering(cs, 3);
    REQUIRE(ord);
    CHECK(is_primal_non_conflicting(cs, *ord));
  }
  SECTION("permutation guard") {
    std::vector<Clause> cs{testutil::make_clause({1, 2, 3, 4})};
    CHECK_THROWS_AS(exists_primal_ordering(cs, 4, 6), GuardExceeded);
  }
}

TEST_CASE("theorem properties on random inputs") {
  testutil::Rng rng(43);

  SECTION("non-conflicting sets form islands") {
    for (int trial = 0; trial < 100; ++trial) {
      int n = 2 + int(rng() % 9);
      auto cs = testutil::random_non_conflicting_set(rng, n, 1 + int(rng() % 8), 4);
      REQUIRE(is_non_conflicting(cs));
      Formula f{n, cs, "nc"};
      CHECK(is_island(f).island);
    }
  }

  SECTION("primal non-conflicting sets form islands and their seeds solve them") {
    int accepted = 0;
    while (accepted < 80) {
      int n = 2 + int(rng() % 9);
      Formula f = testutil::random_formula(rng, n, 1 + int(rng() % 8), 4);
      auto ord = testutil::random_ordering(rng, n);
      if (!is_primal_non_conflicting(f.clauses, ord)) continue;
      ++accepted;
      CHECK(is_island(f).island);
      for (bool def : {false, true}) {
        State seed = seed_solution(f.clauses, ord, def, n);
        CHECK(f.evaluate(seed));
      }
    }
  }

  SECTION("constructive path to the primal seed") {
    // From any solution, repeatedly flipping the least-ranked variable that
    // disagrees with pLit stays inside sol(C) and reaches a superset of pLit.
    int accepted = 0;
    while (accepted < 40) {
      int n = 2 + int(rng() % 7);
      Formula f = testutil::random_formula(rng, n, 1 + int(rng() % 6), 3);
      auto ord = testutil::random_ordering(rng, n);
      if (!is_primal_non_conflicting(f.clauses, ord)) continue;
      ++accepted;
      auto plit = primal_literal_set(f.clauses, ord);
      for (const State& start : enumerate_solutions(f).states) {
        State cur = start;
        int flips = 0;
        while (true) {
          const Literal* disagree = nullptr;
          for (const Literal& l : plit.literals)
            if (!l.holds_in(cur) &&
                (!disagree ||
                 ord.rank(l.variable) < ord.rank(disagree->variable)))
              disagree = &l;
          if (!disagree) break;
          cur.flip(disagree->variable);
          ++flips;
          REQUIRE(f.evaluate(cur));
          REQUIRE(flips <= n);
        }
        for (const Literal& l : plit.literals) CHECK(l.holds_in(cur));
      }
    }
  }

  SECTION("corollary: satisfiable non-islands admit no primal ordering") {
    int found = 0;
    for (int trial = 0; trial < 400 && found < 10; ++trial) {
      int n = 2 + int(rng() % 5);  // exhaustive ordering search up to 6 vars
      Formula f = testutil::random_formula(rng, n, 1 + int(rng() % 6), 3);
      auto check = is_island(f);
      if (check.num_solutions == 0 || check.island) continue;
      ++found;
      CHECK(!exists_primal_ordering(f.clauses, n));
    }
    CHECK(found > 0);
  }

  SECTION("subsets inherit primal non-conflict under the same ordering") {
    int accepted = 0;
    while (accepted < 40) {
      int n = 2 + int(rng() % 9);
      Formula f = testutil::random_formula(rng, n, 2 + int(rng() % 7), 4);
      auto ord = testutil::random_ordering(rng, n);
      if (!is_primal_non_conflicting(f.clauses, ord)) continue;
      ++accepted;
      std::vector<Clause> subset;
      for (const Clause& c : f.clauses)
        if (rng() & 1) subset.push_back(c);
      CHECK(is_primal_non_conflicting(subset, ord));
    }
  }
}

TEST_CASE("is_compositional") {
  SECTION("mirror example") {
    auto res = is_compositional(mirror());
    CHECK(res.compositional);
    CHECK(res.exhaustive);
    CHECK(res.subsets_checked == 4);
  }
  SECTION("empty formula") {
    Formula f{3, {}, "empty"};
    auto res = is_compositional(f);
    CHECK(res.compositional);
    CHECK(res.exhaustive);
  }
  SECTION("primal non-conflicting sets are compositional") {
    testutil::Rng rng(47);
    int accepted = 0;
    while (accepted < 10) {
      int n = 2 + int(rng() % 6);
      Formula f = testutil::random_formula(rng, n, 1 + int(rng() % 5), 3);
      if (!is_primal_non_conflicting(f.clauses, VariableOrdering::natural(n)))
        continue;
      ++accepted;
      CHECK(is_compositional(f).compositional);
    }
  }
  SECTION("sampled mode is labeled non-exhaustive") {
    testutil::Rng rng(53);
    auto cs = testutil::random_non_conflicting_set(rng, 8, 16, 3);
    Formula f{8, cs, "big"};
    auto res = is_compositional(f, kDefaultGuard, 25);
    CHECK(res.compositional);
    CHECK_FALSE(res.exhaustive);
    CHECK(res.subsets_checked <= 25);
  }
}
