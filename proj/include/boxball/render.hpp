#pragma once

#include <string>
#include <vector>

#include "boxball/matching.hpp"
#include "boxball/state.hpp"
#include "boxball/walkpath.hpp"

namespace boxball {

/// ASCII staircase of the walk, one column per step, highest row first.
std::string render_walk(const Walk& w);

/// Token line plus a depth line, one column per token; depths render as
/// base-36 digits under the parentheses and blanks under zeros.
std::string render_paren_lines(const ParenSeq& seq);

/// Aligned rows of spaced cells over the common absolute range, one row per
/// time step.
std::string render_simulation(const std::vector<BoxBallState>& steps);

}  // namespace boxball
