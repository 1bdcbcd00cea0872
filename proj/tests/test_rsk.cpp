#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "boxball/corpus.hpp"
#include "boxball/matching.hpp"
#include "boxball/poset.hpp"
#include "boxball/rsk.hpp"
#include "boxball/state.hpp"

using namespace boxball;

TEST_CASE("insertion into the empty tableau") {
  const Tableau t = row_insert(Tableau{}, 3);
  CHECK(t.rows() == std::vector<std::vector<int>>{{3}});
}

TEST_CASE("a bumping chain cascades down the rows") {
  // 2 bumps the 3 out of row one, the 3 bumps the 5, the 5 opens a new row
  const Tableau t = row_insert(Tableau({{1, 3, 4}, {5}}), 2);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3}, {5}});
  CHECK(t.cell_count() == 5);
}

TEST_CASE("a letter at least the row maximum is appended") {
  const Tableau t = row_insert(Tableau({{1, 2}}), 3);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tableau({{2, 1}}), std::invalid_argument);       // row decreases
  CHECK_THROWS_AS(Tableau({{1, 2}, {1}}), std::invalid_argument);  // column not strict
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), std::invalid_argument);  // row lengths grow
  CHECK(Tableau::is_semistandard({{1, 1, 2}, {2, 3}}));
}

TEST_CASE("insertion tableau of the six-letter example has shape (3,2,1)") {
  const Tableau t = p_symbol({3, 1, 2, 1, 4, 3});
  CHECK(shape(t) == Partition({3, 2, 1}));
  CHECK(Tableau::is_semistandard(t.rows()));
}

TEST_CASE("insertion tableau of 13542, run by hand") {
  const Tableau t = p_symbol({1, 3, 5, 4, 2});
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 4}, {3}, {5}});
  CHECK(shape(t) == Partition({3, 1, 1}));
}

TEST_CASE("a sorted word builds a single row") {
  CHECK(p_symbol({1, 2, 2, 5}).rows() == std::vector<std::vector<int>>{{1, 2, 2, 5}});
  CHECK(shape(p_symbol({1, 1, 1, 1, 1})) == Partition({5}));
  CHECK(p_symbol({}).empty());
}

TEST_CASE("insertion keeps tableaux semistandard and grows them one cell") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<int> word = random_word(rng, 14, 6);
    Tableau t;
    for (const int letter : word) {
      const Tableau next = row_insert(t, letter);
      REQUIRE(Tableau::is_semistandard(next.rows()));
      REQUIRE(next.cell_count() == t.cell_count() + 1);
      t = next;
    }
  }
}

TEST_CASE("transpose flips partitions and is an involution") {
  CHECK(transpose(Partition({3, 2, 1})) == Partition({3, 2, 1}));
  CHECK(transpose(Partition({3, 1, 1})) == Partition({3, 1, 1}));
  CHECK(transpose(Partition({4})) == Partition({1, 1, 1, 1}));
  CHECK(transpose(Partition{}) == Partition{});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> parts;
    int cap = 8;
    while (static_cast<int>(parts.size()) < 6) {
      const int next = random_int(rng, 1, cap);
      parts.push_back(next);
      cap = next;
      if (random_below(rng, 3) == 0) break;
    }
    const Partition p(parts);
    CHECK(transpose(transpose(p)) == p);
  }
}

TEST_CASE("partition validation and 1-based part access") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
  const Partition p({3, 1});
  CHECK(p.part(1) == 3);
  CHECK(p.part(2) == 1);
  CHECK(p.part(5) == 0);
  CHECK(p.sum() == 4);
  CHECK(to_string(p) == "(3,1)");
}

TEST_CASE("insertion shape equals the chain invariants on random words") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<int> word = random_word(rng, 14, 5);
    CHECK(shape(p_symbol(word)) == lambda_of(poset_of_word(word)));
  }
}

TEST_CASE("the stack permutation's insertion shape survives evolution") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    BoxBallState p = random_state(rng, 12, 40);
    const Partition shape0 = shape(p_symbol(stack_permutation(match_stack(p)).word));
    for (int t = 0; t < 12; ++t) {
      p = evolve_tts(p);
      CHECK(shape(p_symbol(stack_permutation(match_stack(p)).word)) == shape0);
    }
  }
}
