#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "boxball/state.hpp"

namespace boxball {

struct CorpusOptions {
  std::uint64_t seed = 42;
  int count = 500;
  int max_balls = 12;
  int max_window = 40;
};

/// Uniform helpers over mt19937_64 with portable output (no distribution
/// objects, whose sequences differ across standard libraries).
std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t n);
int random_int(std::mt19937_64& rng, int lo, int hi);

BoxBallState random_state(std::mt19937_64& rng, int max_balls, int max_window);
std::vector<BoxBallState> random_corpus(const CorpusOptions& opts);

/// Random word over [1, max_letter] of length <= max_length (for word-level
/// poset/insertion checks).
std::vector<int> random_word(std::mt19937_64& rng, int max_length, int max_letter);

}  // namespace boxball
