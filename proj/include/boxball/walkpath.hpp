#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boxball/matching.hpp"
#include "boxball/state.hpp"

namespace boxball {

enum class WalkStep : std::uint8_t { Up, Right };

/// Monotone lattice path from (-inf, 0) to (+inf, N): one Up step per '(' and
/// one Right step per '0' or ')'. Only the explicit step range is stored; the
/// walk conceptually extends with Right steps on both sides. Step s covers the
/// cell at absolute position anchor_x + s, and the first explicit vertex sits
/// at (anchor_x, 0).
class Walk {
 public:
  Walk() = default;
  Walk(Position anchor_x, std::vector<WalkStep> steps)
      : anchor_x_(anchor_x), steps_(std::move(steps)) {}

  Position anchor_x() const { return anchor_x_; }
  const std::vector<WalkStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  int up_count() const;

  bool operator==(const Walk&) const = default;

 private:
  Position anchor_x_ = 0;
  std::vector<WalkStep> steps_;
};

struct WalkGroup {
  std::size_t begin = 0;  // step range [begin, end)
  std::size_t end = 0;
  Position x0 = 0;  // start vertex
  std::int64_t y0 = 0;
  bool operator==(const WalkGroup&) const = default;
};

/// Partition of the steps: a group opens at the first free Up step and closes
/// when the walk returns to the 45-degree line through its start vertex;
/// Right steps outside every group are singles.
struct GroupPartition {
  std::vector<WalkGroup> groups;
  std::vector<std::size_t> singles;
};

Walk to_walk(const ParenSeq& seq);

/// Throws std::invalid_argument if the walk ends before an open group returns
/// to its diagonal (cannot happen for walks of valid ParenSeqs).
GroupPartition group_partition(const Walk& w);

/// Reflect every group across the diagonal through its start vertex, which
/// swaps Up and Right within the group while preserving order; singles stay.
Walk evolve_reflect(const Walk& w);

/// Up -> 1, Right -> 0, trimmed; step s lands at cell anchor_x + s.
BoxBallState walk_to_state(const Walk& w);

/// Removes both steps of every adjacent Up-Right (convex) or Right-Up
/// (concave) corner; the occurrences are step-disjoint, so one simultaneous
/// pass is well defined. One conceptual Right on each side participates, so a
/// leading Up counts as a concave corner and a trailing Up as a convex one.
Walk delete_convex(const Walk& w);
Walk delete_concave(const Walk& w);

/// Equality as bi-infinite walks: step sequences compared after trimming the
/// Right-only margins.
bool same_walk(const Walk& a, const Walk& b);

Walk parse_walk(std::string_view steps, Position anchor_x = 0);  // "URRU..."
std::string step_text(const Walk& w);

}  // namespace boxball
