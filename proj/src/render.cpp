#include "boxball/render.hpp"

#include <algorithm>

namespace boxball {
namespace {

char depth_digit(int d) {
  if (d < 10) return static_cast<char>('0' + d);
  if (d < 36) return static_cast<char>('a' + d - 10);
  return '*';
}

}  // namespace

std::string render_walk(const Walk& w) {
  const int height = w.up_count();
  std::vector<std::string> rows(static_cast<std::size_t>(height) + 1,
                                std::string(w.size(), ' '));
  int y = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w.steps()[s] == WalkStep::Up) {
      ++y;
      rows[static_cast<std::size_t>(y)][s] = '|';
    } else {
      rows[static_cast<std::size_t>(y)][s] = '_';
    }
  }
  std::string out;
  for (int r = height; r >= 0; --r) {
    std::string line = rows[static_cast<std::size_t>(r)];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    if (line.empty()) continue;
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_paren_lines(const ParenSeq& seq) {
  std::string tokens = seq.token_text();
  std::string depths(tokens.size(), ' ');
  for (const PairRecord& pr : seq.pairs()) {
    depths[pr.open_pos] = depth_digit(pr.depth);
    depths[pr.close_pos] = depth_digit(pr.depth);
  }
  while (!depths.empty() && depths.back() == ' ') depths.pop_back();
  return tokens + "\n" + depths + "\n";
}

std::string render_simulation(const std::vector<BoxBallState>& steps) {
  Position lo = 0;
  Position hi = 0;
  bool any = false;
  for (const BoxBallState& s : steps) {
    if (s.empty()) continue;
    lo = any ? std::min(lo, s.offset()) : s.offset();
    hi = any ? std::max(hi, s.end()) : s.end();
    any = true;
  }
  std::string out;
  if (any) {
    out += "positions " + std::to_string(lo) + ".." + std::to_string(hi - 1) + "\n";
  }
  for (std::size_t t = 0; t < steps.size(); ++t) {
    std::string row = "t+" + std::to_string(t) + " :";
    if (!any) {
      row += " (vacuum)";
    } else {
      for (Position pos = lo; pos < hi; ++pos) {
        row += steps[t].cell(pos) ? " 1" : " 0";
      }
    }
    out += row + "\n";
  }
  return out;
}

}  // namespace boxball
