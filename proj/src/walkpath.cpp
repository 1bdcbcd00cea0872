#include "boxball/walkpath.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

int Walk::up_count() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), WalkStep::Up));
}

Walk to_walk(const ParenSeq& seq) {
  std::vector<WalkStep> steps;
  steps.reserve(seq.tokens().size());
  for (const Token& t : seq.tokens()) {
    steps.push_back(t.kind == TokenKind::Open ? WalkStep::Up : WalkStep::Right);
  }
  return {seq.base_offset(), std::move(steps)};
}

GroupPartition group_partition(const Walk& w) {
  GroupPartition out;
  Position x = w.anchor_x();
  std::int64_t y = 0;
  bool open = false;
  WalkGroup g;
  for (std::size_t s = 0; s < w.steps().size(); ++s) {
    if (!open) {
      if (w.steps()[s] == WalkStep::Up) {
        open = true;
        g = {s, s, x, y};
      } else {
        out.singles.push_back(s);
      }
    }
    if (w.steps()[s] == WalkStep::Up) {
      ++y;
    } else {
      ++x;
    }
    if (open && y - g.y0 == x - g.x0) {  // back on the diagonal through the start vertex
      g.end = s + 1;
      out.groups.push_back(g);
      open = false;
    }
  }
  if (open) throw std::invalid_argument("walk ends before its group returns to the diagonal");
  return out;
}

Walk evolve_reflect(const Walk& w) {
  const GroupPartition parts = group_partition(w);
  std::vector<WalkStep> steps = w.steps();
  for (const WalkGroup& g : parts.groups) {
    for (std::size_t s = g.begin; s < g.end; ++s) {
      steps[s] = steps[s] == WalkStep::Up ? WalkStep::Right : WalkStep::Up;
    }
  }
  // Steps only permute kinds in place, so step s still covers cell
  // anchor_x + s; re-reading the cells performs the origin shift.
  return {w.anchor_x(), std::move(steps)};
}

BoxBallState walk_to_state(const Walk& w) {
  std::vector<Cell> cells;
  cells.reserve(w.size());
  for (const WalkStep s : w.steps()) cells.push_back(s == WalkStep::Up ? 1 : 0);
  return BoxBallState::from_cells(cells, w.anchor_x());
}

namespace {

Walk collect_kept(const Walk& w, const std::vector<char>& keep) {
  std::vector<WalkStep> steps;
  Position anchor = w.anchor_x();
  bool first = true;
  for (std::size_t s = 0; s < w.steps().size(); ++s) {
    if (!keep[s]) continue;
    if (first) {
      anchor = w.anchor_x() + static_cast<Position>(s);
      first = false;
    }
    steps.push_back(w.steps()[s]);
  }
  return {anchor, std::move(steps)};
}

}  // namespace

Walk delete_convex(const Walk& w) {
  const auto& st = w.steps();
  std::vector<char> keep(st.size(), 1);
  for (std::size_t s = 0; s < st.size(); ++s) {
    if (st[s] != WalkStep::Up) continue;
    if (s + 1 == st.size()) {
      keep[s] = 0;  // pairs with the conceptual Right after the walk
      break;
    }
    if (st[s + 1] == WalkStep::Right) {
      keep[s] = keep[s + 1] = 0;
      ++s;
    }
  }
  return collect_kept(w, keep);
}

Walk delete_concave(const Walk& w) {
  const auto& st = w.steps();
  std::vector<char> keep(st.size(), 1);
  std::size_t s = 0;
  if (!st.empty() && st[0] == WalkStep::Up) {
    keep[0] = 0;  // pairs with the conceptual Right before the walk
    s = 1;
  }
  for (; s < st.size(); ++s) {
    if (st[s] == WalkStep::Right && s + 1 < st.size() && st[s + 1] == WalkStep::Up) {
      keep[s] = keep[s + 1] = 0;
      ++s;
    }
  }
  return collect_kept(w, keep);
}

namespace {

std::vector<WalkStep> trimmed(const Walk& w) {
  const auto& st = w.steps();
  const auto first = std::find(st.begin(), st.end(), WalkStep::Up);
  if (first == st.end()) return {};
  const auto last = std::find(st.rbegin(), st.rend(), WalkStep::Up).base();
  return {first, last};
}

}  // namespace

bool same_walk(const Walk& a, const Walk& b) { return trimmed(a) == trimmed(b); }

Walk parse_walk(std::string_view steps, Position anchor_x) {
  std::vector<WalkStep> out;
  out.reserve(steps.size());
  for (const char ch : steps) {
    if (ch == 'U') {
      out.push_back(WalkStep::Up);
    } else if (ch == 'R') {
      out.push_back(WalkStep::Right);
    } else {
      throw std::invalid_argument("walk steps must be 'U' or 'R'");
    }
  }
  return {anchor_x, std::move(out)};
}

std::string step_text(const Walk& w) {
  std::string out;
  out.reserve(w.size());
  for (const WalkStep s : w.steps()) out += s == WalkStep::Up ? 'U' : 'R';
  return out;
}

}  // namespace boxball
