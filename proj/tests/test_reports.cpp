#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "boxball/render.hpp"
#include "boxball/report.hpp"
#include "boxball/verify.hpp"

using namespace boxball;
using nlohmann::json;

TEST_CASE("states round-trip through JSON") {
  const BoxBallState p = parse_state("10011011", 3);
  CHECK(state_from_json(to_json(p)) == p);
  CHECK(state_from_json(to_json(BoxBallState{})) == BoxBallState{});
}

TEST_CASE("energy reports round-trip through JSON") {
  const EnergyReport rep = energy_profile(parse_state("0010011011", 0), 5);
  CHECK(energy_report_from_json(to_json(rep)) == rep);
}

TEST_CASE("invariant reports round-trip through JSON") {
  const InvariantReport rep = invariant_report(parse_state("0010011011", 0), 6, 5);
  const json j = to_json(rep);
  CHECK(invariant_report_from_json(j) == rep);
  CHECK(invariant_report_from_json(json::parse(j.dump())) == rep);
}

TEST_CASE("invariant verdicts hold on the worked example") {
  const InvariantReport rep = invariant_report(parse_state("0010011011", 0), 10, 3);
  REQUIRE(rep.steps.size() == 11);
  for (const StepRecord& rec : rep.steps) {
    CHECK(rec.p_shape == Partition({3, 1, 1}));
    CHECK(rec.depth_histogram == std::vector<int>{3, 1, 1});
    CHECK(rec.energy.values.at(1) == 3);
    CHECK(rec.energy.values.at(2) == 4);
    CHECK(rec.energy.values.at(3) == 5);
  }
  for (const Verdict& v : rep.verdicts) CHECK(v.passed);
}

TEST_CASE("a single ball has shape (1) and unit energies") {
  const InvariantReport rep = invariant_report(parse_state("1", 0), 5, 4);
  for (const StepRecord& rec : rep.steps) {
    CHECK(rec.p_shape == Partition({1}));
    for (const auto& [l, e] : rec.energy.values) CHECK(e == 1);
  }
}

TEST_CASE("poset JSON lists points and covering relations") {
  const json j = to_json(poset_of_word({2, 1, 3}));
  CHECK(j.at("points").size() == 3);
  // (1,2)<(3,3) and (2,1)<(3,3) are covers; (1,2) and (2,1) are incomparable
  CHECK(j.at("covers").size() == 2);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  VerifyOptions opts;
  opts.corpus.count = 30;
  opts.steps = 5;
  const auto a = run_verification(opts);
  const auto b = run_verification(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].name == b[k].name);
    CHECK(a[k].passed == b[k].passed);
    CHECK(a[k].detail == b[k].detail);
  }
  CHECK(all_passed(a));
}

TEST_CASE("the suite accepts the worked example as a one-state corpus") {
  VerifyOptions opts;
  opts.single_state = parse_state("0010011011", 0);
  opts.steps = 12;
  CHECK(all_passed(run_verification(opts)));
}

TEST_CASE("a corrupted carrier step is caught with a counterexample") {
  VerifyOptions opts;
  opts.corpus.count = 25;
  opts.steps = 4;
  opts.corrupt_r_step = true;
  const auto results = run_verification(opts);
  CHECK_FALSE(all_passed(results));
  bool found = false;
  for (const CheckResult& r : results) {
    if (!r.passed) {
      CHECK_FALSE(r.detail.empty());
      CHECK(r.detail.find("state=") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("simulation rendering aligns rows over the common range") {
  const BoxBallState p = parse_state("11", 0);
  const std::string out = render_simulation({p, evolve_tts(p)});
  CHECK(out == "positions 0..3\n"
               "t+0 : 1 1 0 0\n"
               "t+1 : 0 0 1 1\n");
  CHECK(render_simulation({BoxBallState{}}) == "t+0 : (vacuum)\n");
}

TEST_CASE("walk rendering stacks the staircase over the token lines") {
  const std::string out = render_walk(to_walk(match_stack(parse_state("1100", 0))));
  CHECK(out == " |__\n"
               "|\n");
  const std::string lines = render_paren_lines(match_stack(parse_state("1100", 0)));
  CHECK(lines == "(())\n2112\n");
}
