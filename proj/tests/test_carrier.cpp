#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>

#include "boxball/carrier.hpp"
#include "boxball/corpus.hpp"
#include "boxball/matching.hpp"
#include "boxball/poset.hpp"
#include "boxball/rsk.hpp"
#include "boxball/state.hpp"

using namespace boxball;

namespace {

const BoxBallState kSample = parse_state("0010011011", 0);

}  // namespace

TEST_CASE("the four carrier step cases") {
  const RStepResult unload = r_step(Carrier(2, 1), 0);
  CHECK(unload.out == 1);
  CHECK(unload.carrier == Carrier(2, 0));
  CHECK(unload.bumped);

  const RStepResult idle = r_step(Carrier(2, 0), 0);
  CHECK(idle.out == 0);
  CHECK(idle.carrier == Carrier(2, 0));
  CHECK_FALSE(idle.bumped);

  const RStepResult full = r_step(Carrier(1, 1), 1);
  CHECK(full.out == 1);
  CHECK(full.carrier == Carrier(1, 1));
  CHECK_FALSE(full.bumped);

  const RStepResult load = r_step(Carrier(3, 1), 1);
  CHECK(load.out == 0);
  CHECK(load.carrier == Carrier(3, 2));
  CHECK_FALSE(load.bumped);
}

TEST_CASE("carrier construction bounds") {
  CHECK_THROWS_AS(Carrier(0), std::invalid_argument);
  CHECK_THROWS_AS(Carrier(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(Carrier(2, -1), std::invalid_argument);
  CHECK(Carrier(4, 1).zeros() == 3);
}

TEST_CASE("the carrier step is a bijection for small capacities") {
  for (int l = 1; l <= 6; ++l) {
    std::set<std::pair<int, int>> images;
    for (int m2 = 0; m2 <= l; ++m2) {
      for (const Cell b : {Cell{0}, Cell{1}}) {
        const RStepResult r = r_step(Carrier(l, m2), b);
        CHECK(r.carrier.capacity() == l);
        images.insert({r.out, r.carrier.ones()});
      }
    }
    CHECK(images.size() == 2 * static_cast<std::size_t>(l + 1));
  }
}

TEST_CASE("capacity-1 sweep moves a two-ball train one cell") {
  const TransferResult r = transfer(parse_state("11", 0), 1);
  CHECK(r.next == parse_state("11", 1));
  CHECK(r.energy == 1);
  CHECK(r.sites == std::vector<Position>{2});
}

TEST_CASE("capacity-2 sweep moves a two-ball train two cells") {
  const TransferResult r = transfer(parse_state("11", 0), 2);
  CHECK(r.next == parse_state("11", 2));
  CHECK(r.energy == 2);
  CHECK(r.sites == std::vector<Position>{2, 3});
}

TEST_CASE("big carriers reproduce the worked example's step") {
  const BoxBallState expected = evolve_tts(kSample);
  for (const int l : {5, 6, 9}) {
    const TransferResult r = transfer(kSample, l);
    CHECK(r.next == expected);
    CHECK(r.energy == 5);
  }
  CHECK(transfer(kSample, std::nullopt).next == expected);
  for (const int l : {3, 4, 5}) CHECK(transfer(kSample, l).energy == 5);
}

TEST_CASE("energy profile of the worked example") {
  const EnergyReport rep = energy_profile(kSample, 5);
  CHECK(rep.values.at(1) == 3);
  CHECK(rep.values.at(2) == 4);
  CHECK(rep.values.at(3) == 5);
  CHECK(rep.values.at(4) == 5);
  CHECK(rep.values.at(5) == 5);
  CHECK(rep.e_infinity == 5);
  CHECK(rep.sites.at(1) == std::vector<Position>{3, 7, 10});
  CHECK(rep.sites.at(2) == std::vector<Position>{3, 7, 10, 11});
  CHECK(rep.sites.at(3) == std::vector<Position>{3, 7, 10, 11, 12});
  CHECK(rep.sites_infinity == rep.sites.at(3));
}

TEST_CASE("the vacuum carries no energy") {
  const EnergyReport rep = energy_profile(BoxBallState{}, 3);
  for (const auto& [l, e] : rep.values) CHECK(e == 0);
  CHECK(rep.e_infinity == 0);
  CHECK(transfer(BoxBallState{}, 4).next.empty());
}

TEST_CASE("separated solitons of lengths 1,1,3 have energies 3,4,5") {
  const std::string gap(12, '0');
  const BoxBallState p = parse_state("1" + gap + "1" + gap + "111", 0);
  const EnergyReport rep = energy_profile(p, 4);
  CHECK(rep.values.at(1) == 3);
  CHECK(rep.values.at(2) == 4);
  CHECK(rep.values.at(3) == 5);
  CHECK(rep.values.at(4) == 5);
}

TEST_CASE("predicted energy sites are the shallow closing parentheses") {
  const ParenSeq seq = match_stack(kSample);
  CHECK(energy_sites_predicted(seq, 1) == std::vector<Position>{3, 7, 10});
  CHECK(energy_sites_predicted(seq, 2) == std::vector<Position>{3, 7, 10, 11});
  CHECK(energy_sites_predicted(seq, 3) == std::vector<Position>{3, 7, 10, 11, 12});
  CHECK(energy_sites_predicted(seq, 9) == energy_sites_predicted(seq, 3));
}

TEST_CASE("bump sites equal the predicted sites for every capacity") {
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 200; ++trial) {
    const BoxBallState p = random_state(rng, 12, 40);
    const ParenSeq seq = match_stack(p);
    for (int l = 1; l <= p.ball_count(); ++l) {
      const TransferResult r = transfer(p, l);
      REQUIRE(r.sites == energy_sites_predicted(seq, l));
      REQUIRE(r.energy == static_cast<int>(r.sites.size()));
    }
  }
}

TEST_CASE("a carrier of capacity >= N is the ball-moving evolution") {
  std::mt19937_64 rng(161803);
  for (int trial = 0; trial < 200; ++trial) {
    const BoxBallState p = random_state(rng, 12, 40);
    const BoxBallState expected = evolve_tts(p);
    const int n = p.ball_count();
    CHECK(transfer(p, std::max(n, 1)).next == expected);
    CHECK(transfer(p, n + 3).next == expected);
    CHECK(transfer(p, std::nullopt).next == expected);
  }
}

TEST_CASE("energies equal the brute-force chain covers") {
  std::mt19937_64 rng(141421);
  for (int trial = 0; trial < 100; ++trial) {
    const BoxBallState p = random_state(rng, 10, 30);
    const PermutationPoset poset = poset_of(stack_permutation(match_stack(p)));
    for (int l = 1; l <= p.ball_count(); ++l) {
      CHECK(transfer(p, l).energy == greene_I(poset, l));
    }
  }
}

TEST_CASE("energies are conserved across twenty steps") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 25; ++trial) {
    const BoxBallState p0 = random_state(rng, 10, 30);
    const int n = p0.ball_count();
    if (n == 0) continue;
    const EnergyReport base = energy_profile(p0, n);
    BoxBallState p = p0;
    for (int t = 0; t < 20; ++t) {
      p = evolve_tts(p);
      const EnergyReport rep = energy_profile(p, n);
      REQUIRE(rep.values == base.values);
      REQUIRE(rep.e_infinity == base.e_infinity);
    }
  }
}

TEST_CASE("energy differences recover the insertion shape") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 150; ++trial) {
    const BoxBallState p = random_state(rng, 12, 40);
    const int n = p.ball_count();
    if (n == 0) continue;
    const Partition lambda = shape(p_symbol(stack_permutation(match_stack(p)).word));
    const EnergyReport rep = energy_profile(p, n);
    int prev = 0;
    for (int l = 1; l <= n; ++l) {
      CHECK(rep.values.at(l) - prev == lambda.part(l));
      prev = rep.values.at(l);
    }
  }
}

TEST_CASE("energy reports grow monotonically and stabilize at the max depth") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const BoxBallState p = random_state(rng, 12, 40);
    const int n = p.ball_count();
    if (n == 0) continue;
    const ParenSeq seq = match_stack(p);
    const EnergyReport rep = energy_profile(p, n);
    for (int l = 2; l <= n; ++l) {
      CHECK(rep.values.at(l) >= rep.values.at(l - 1));
      const auto& small = rep.sites.at(l - 1);
      const auto& big = rep.sites.at(l);
      CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
    for (int l = seq.max_depth(); l <= n; ++l) CHECK(rep.values.at(l) == n);
  }
}

TEST_CASE("bad capacities are rejected") {
  CHECK_THROWS_AS(transfer(kSample, 0), std::invalid_argument);
  CHECK_THROWS_AS(energy_profile(kSample, 0), std::invalid_argument);
}
