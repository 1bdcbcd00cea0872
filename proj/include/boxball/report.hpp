#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "boxball/carrier.hpp"
#include "boxball/matching.hpp"
#include "boxball/partition.hpp"
#include "boxball/poset.hpp"
#include "boxball/rsk.hpp"
#include "boxball/state.hpp"
#include "boxball/verify.hpp"
#include "boxball/walkpath.hpp"

namespace boxball {

struct StepRecord {
  int t = 0;
  BoxBallState state;
  StackPermutation stack_perm;
  Partition p_shape;
  std::vector<int> depth_histogram;
  EnergyReport energy;
  bool operator==(const StepRecord&) const = default;
};

struct Verdict {
  std::string check;
  bool passed = true;
  std::string detail;
  bool operator==(const Verdict&) const = default;
};

/// Per-step conserved-quantity report for one trajectory.
struct InvariantReport {
  std::vector<StepRecord> steps;
  std::vector<Verdict> verdicts;
  bool operator==(const InvariantReport&) const = default;
};

/// Evolves p for `steps` steps and records state text, stack permutation,
/// P-symbol shape, depth histogram and energies up to lmax at every step,
/// with verdicts flagging any step where a conserved quantity changed.
InvariantReport invariant_report(const BoxBallState& p, int steps, int lmax);

nlohmann::json to_json(const BoxBallState& s);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const StackPermutation& w);
nlohmann::json to_json(const ParenSeq& seq);
nlohmann::json to_json(const PermutationPoset& poset);  // points + covering relations
nlohmann::json to_json(const Tableau& t);
nlohmann::json to_json(const Walk& w);
nlohmann::json to_json(const EnergyReport& rep);
nlohmann::json to_json(const StepRecord& rec);
nlohmann::json to_json(const InvariantReport& rep);
nlohmann::json to_json(const std::vector<CheckResult>& results);

BoxBallState state_from_json(const nlohmann::json& j);
EnergyReport energy_report_from_json(const nlohmann::json& j);
InvariantReport invariant_report_from_json(const nlohmann::json& j);

}  // namespace boxball
