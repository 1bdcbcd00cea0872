#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace boxball {

using Position = std::int64_t;
using Cell = std::uint8_t;

/// A box-ball configuration: finitely many balls (1s) on a bi-infinite row of
/// boxes. Stored as a zero-trimmed window plus the absolute position of its
/// first cell, so the different evolution rules can be compared at absolute
/// positions rather than only up to shift.
class BoxBallState {
 public:
  BoxBallState() = default;

  /// Normalizes raw cells: trims zeros on both sides and moves the offset to
  /// the first ball. The vacuum normalizes to (offset 0, empty window).
  static BoxBallState from_cells(const std::vector<Cell>& cells, Position offset);

  bool empty() const { return window_.empty(); }
  int ball_count() const;
  Position offset() const { return offset_; }
  Position end() const { return offset_ + static_cast<Position>(window_.size()); }
  const std::vector<Cell>& window() const { return window_; }
  Cell cell(Position pos) const;
  std::vector<Position> ball_positions() const;

  std::string text() const;     // window cells as '0'/'1'
  std::string text_at() const;  // "10011011@2" form used by the CLI and reports

  bool operator==(const BoxBallState&) const = default;

 private:
  Position offset_ = 0;
  std::vector<Cell> window_;
};

/// Parses a '0'/'1' string whose first character sits at absolute `offset`.
/// Throws std::invalid_argument on any other character.
BoxBallState parse_state(std::string_view cells, Position offset);

/// Parses the CLI form "cells[@offset]" (offset defaults to 0).
BoxBallState parse_state(std::string_view text);

/// One time step: each ball, taken left to right, jumps to the leftmost empty
/// box on its right. Ball count is preserved and the result is normalized.
BoxBallState evolve_tts(const BoxBallState& p);

struct SolitonRun {
  Position start = 0;
  int length = 0;
  bool operator==(const SolitonRun&) const = default;
};

/// Maximal runs of consecutive balls, their length multiplicities N_k, and the
/// zero gaps separating consecutive runs.
struct SolitonProfile {
  std::vector<SolitonRun> runs;  // left to right
  std::map<int, int> counts;     // length k -> N_k
  std::vector<Position> gaps;
};

SolitonProfile solitons(const BoxBallState& p);

/// True iff every inter-run gap is >= threshold and the run lengths weakly
/// increase left to right, i.e. the state is an outgoing, fully separated
/// configuration. Throws std::invalid_argument for threshold < 1.
bool is_asymptotic(const BoxBallState& p, Position threshold);

}  // namespace boxball
