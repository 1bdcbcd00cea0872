#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxball/corpus.hpp"
#include "boxball/state.hpp"

namespace boxball {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;  // reported, never fails the run
  std::string detail;          // minimal counterexample: state, step, l
};

struct VerifyOptions {
  CorpusOptions corpus;
  int steps = 20;
  int asymptotic_step_cap = 200;
  std::optional<BoxBallState> single_state;  // restrict the corpus to one state
  bool corrupt_r_step = false;  // mutation hook: the suite must then fail
};

/// Runs every cross-module check over the configured corpus and returns one
/// result per check, in a fixed order. Deterministic given the options.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// True iff every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace boxball
