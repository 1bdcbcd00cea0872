#include "boxball/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxball {

std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t n) {
  // Modulo bias is irrelevant at these ranges; avoiding std distributions
  // keeps the corpus identical across standard libraries.
  return n ? rng() % n : 0;
}

int random_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(random_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

BoxBallState random_state(std::mt19937_64& rng, int max_balls, int max_window) {
  if (max_balls < 0 || max_window < 1) throw std::invalid_argument("bad corpus bounds");
  const int n = random_int(rng, 0, std::min(max_balls, max_window));
  if (n == 0) return {};
  const int window = random_int(rng, n, max_window);
  std::vector<int> slots(static_cast<std::size_t>(window));
  for (int i = 0; i < window; ++i) slots[static_cast<std::size_t>(i)] = i;
  for (int i = window - 1; i > 0; --i) {
    std::swap(slots[static_cast<std::size_t>(i)],
              slots[random_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  std::vector<Cell> cells(static_cast<std::size_t>(window), 0);
  for (int k = 0; k < n; ++k) cells[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] = 1;
  const Position offset = random_int(rng, -25, 25);
  return BoxBallState::from_cells(cells, offset);
}

std::vector<BoxBallState> random_corpus(const CorpusOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<BoxBallState> corpus;
  corpus.reserve(static_cast<std::size_t>(opts.count));
  for (int k = 0; k < opts.count; ++k) {
    corpus.push_back(random_state(rng, opts.max_balls, opts.max_window));
  }
  return corpus;
}

std::vector<int> random_word(std::mt19937_64& rng, int max_length, int max_letter) {
  const int len = random_int(rng, 0, max_length);
  std::vector<int> word(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) word[static_cast<std::size_t>(k)] = random_int(rng, 1, max_letter);
  return word;
}

}  // namespace boxball
