#include "boxball/state.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace boxball {

BoxBallState BoxBallState::from_cells(const std::vector<Cell>& cells, Position offset) {
  const auto first = std::find(cells.begin(), cells.end(), Cell{1});
  if (first == cells.end()) return {};
  const auto last = std::find(cells.rbegin(), cells.rend(), Cell{1}).base();
  BoxBallState s;
  s.offset_ = offset + static_cast<Position>(first - cells.begin());
  s.window_.assign(first, last);
  return s;
}

int BoxBallState::ball_count() const {
  return static_cast<int>(std::count(window_.begin(), window_.end(), Cell{1}));
}

Cell BoxBallState::cell(Position pos) const {
  if (pos < offset_ || pos >= end()) return 0;
  return window_[static_cast<std::size_t>(pos - offset_)];
}

std::vector<Position> BoxBallState::ball_positions() const {
  std::vector<Position> out;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i]) out.push_back(offset_ + static_cast<Position>(i));
  }
  return out;
}

std::string BoxBallState::text() const {
  std::string out(window_.size(), '0');
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i]) out[i] = '1';
  }
  return out;
}

std::string BoxBallState::text_at() const { return text() + "@" + std::to_string(offset_); }

BoxBallState parse_state(std::string_view cells, Position offset) {
  std::vector<Cell> v;
  v.reserve(cells.size());
  for (const char ch : cells) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument(std::string("state text may contain only '0' and '1', got '") +
                                  ch + "'");
    }
    v.push_back(ch == '1' ? 1 : 0);
  }
  return BoxBallState::from_cells(v, offset);
}

BoxBallState parse_state(std::string_view text) {
  Position offset = 0;
  if (const auto at = text.find('@'); at != std::string_view::npos) {
    const std::string_view num = text.substr(at + 1);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), offset);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw std::invalid_argument("bad offset suffix in state \"" + std::string(text) + "\"");
    }
    text = text.substr(0, at);
  }
  return parse_state(text, offset);
}

BoxBallState evolve_tts(const BoxBallState& p) {
  if (p.empty()) return {};
  const std::size_t n = static_cast<std::size_t>(p.ball_count());
  std::vector<Cell> cells = p.window();
  // A ball lands at most n cells past the old window end.
  cells.resize(cells.size() + n, 0);

  std::vector<std::size_t> balls;
  balls.reserve(n);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) balls.push_back(i);
  }

  // Balls are numbered left to right at the start of the step; each jumps, in
  // that order, to the leftmost box empty at the moment it moves.
  for (const std::size_t b : balls) {
    std::size_t j = b + 1;
    while (cells[j]) ++j;
    cells[b] = 0;
    cells[j] = 1;
  }
  return BoxBallState::from_cells(cells, p.offset());
}

SolitonProfile solitons(const BoxBallState& p) {
  SolitonProfile out;
  const auto& w = p.window();
  std::size_t i = 0;
  while (i < w.size()) {
    if (!w[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j]) ++j;
    out.runs.push_back({p.offset() + static_cast<Position>(i), static_cast<int>(j - i)});
    ++out.counts[static_cast<int>(j - i)];
    i = j;
  }
  for (std::size_t r = 1; r < out.runs.size(); ++r) {
    const SolitonRun& prev = out.runs[r - 1];
    out.gaps.push_back(out.runs[r].start - (prev.start + prev.length));
  }
  return out;
}

bool is_asymptotic(const BoxBallState& p, Position threshold) {
  if (threshold < 1) throw std::invalid_argument("is_asymptotic threshold must be >= 1");
  const SolitonProfile prof = solitons(p);
  for (const Position g : prof.gaps) {
    if (g < threshold) return false;
  }
  for (std::size_t r = 1; r < prof.runs.size(); ++r) {
    if (prof.runs[r].length < prof.runs[r - 1].length) return false;
  }
  return true;
}

}  // namespace boxball
