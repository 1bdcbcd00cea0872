#pragma once

#include <map>
#include <optional>
#include <vector>

#include "boxball/matching.hpp"
#include "boxball/state.hpp"

namespace boxball {

/// Capacity-l carrier holding `ones` balls: the nondecreasing word
/// 0^{m1} 1^{m2} with m1 + m2 = l.
class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(int capacity, int ones = 0);

  int capacity() const { return capacity_; }
  int ones() const { return ones_; }            // m2
  int zeros() const { return capacity_ - ones_; }  // m1

  bool operator==(const Carrier&) const = default;

 private:
  int capacity_ = 1;
  int ones_ = 0;
};

struct RStepResult {
  Cell out = 0;
  Carrier carrier;
  bool bumped = false;  // true exactly when a ball is dropped into an empty box
};

/// One carrier step over a cell:
///   ball,  spare room  -> pick it up               (out 0)
///   ball,  full        -> pass it through          (out 1)
///   empty, loaded      -> drop one ball and bump   (out 1)  <- the energy site
///   empty, unloaded    -> pass                     (out 0)
/// Only the bump case is forced by the counting rule; the other three are the
/// unique completion making the step a bijection on (carrier, cell) pairs that
/// reproduces the ball-moving dynamics at large capacity.
RStepResult r_step(const Carrier& c, Cell b);

struct TransferResult {
  BoxBallState next;
  int energy = 0;               // E_l
  std::vector<Position> sites;  // absolute positions of the bumps
};

/// Sweeps an initially empty carrier left to right across the state, padding
/// with zeros past the window until the carrier drains. Capacity nullopt means
/// effectively unbounded (>= ball count).
TransferResult transfer(const BoxBallState& p, std::optional<int> capacity);

using RStepFn = RStepResult (*)(const Carrier&, Cell);

/// transfer with an injectable step function (mutation hook for the verifier).
TransferResult transfer_with(const BoxBallState& p, std::optional<int> capacity, RStepFn step);

struct EnergyReport {
  std::map<int, int> values;                   // l -> E_l, l = 1..l_max
  std::map<int, std::vector<Position>> sites;  // l -> bump positions
  int e_infinity = 0;                          // capacity >= ball count
  std::vector<Position> sites_infinity;
  bool operator==(const EnergyReport&) const = default;
};

/// E_l and its bump sites for l = 1..l_max, plus the stabilized value E_inf
/// computed at unbounded capacity.
EnergyReport energy_profile(const BoxBallState& p, int l_max);

/// Absolute positions of the ')' tokens whose pair depth is <= l. By the site
/// identity these are exactly the bump positions of transfer at capacity l.
std::vector<Position> energy_sites_predicted(const ParenSeq& seq, int l);

}  // namespace boxball
