#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boxball/state.hpp"

namespace boxball {

enum class TokenKind : std::uint8_t { Zero, Open, Close };

struct Token {
  TokenKind kind = TokenKind::Zero;
  int pair_id = 0;  // 1-based for Open/Close, 0 for Zero
  bool operator==(const Token&) const = default;
};

struct PairRecord {
  int pair_id = 0;           // numbered by opening position, left to right
  std::size_t open_pos = 0;  // token indices
  std::size_t close_pos = 0;
  int depth = 0;             // matching round, >= 1
  bool operator==(const PairRecord&) const = default;
};

/// A state tokenized into '0', '(' and ')' with one matched pair per ball.
/// Pair intervals are nested or disjoint, never crossing; trailing '0' tokens
/// past the last ')' are trimmed. The constructor renumbers the pairs by
/// opening position and verifies the nesting discipline.
class ParenSeq {
 public:
  ParenSeq() = default;
  ParenSeq(std::vector<PairRecord> pairs, Position base_offset);

  const std::vector<Token>& tokens() const { return tokens_; }
  /// Sorted by opening position, so pairs()[id - 1].pair_id == id.
  const std::vector<PairRecord>& pairs() const { return pairs_; }
  const PairRecord& pair(int pair_id) const { return pairs_.at(pair_id - 1); }
  Position base_offset() const { return base_offset_; }
  int ball_count() const { return static_cast<int>(pairs_.size()); }
  Position position_of(std::size_t token_index) const {
    return base_offset_ + static_cast<Position>(token_index);
  }

  std::vector<int> depth_histogram() const;  // [d - 1] = number of pairs of depth d
  int max_depth() const;
  std::string token_text() const;  // e.g. "()0(()(()))"

  bool operator==(const ParenSeq&) const = default;

 private:
  std::vector<Token> tokens_;
  std::vector<PairRecord> pairs_;
  Position base_offset_ = 0;
};

/// Round-based matching: repeatedly turn every adjacent "1 0" of the residual
/// sequence into a pair (round r = depth r) and delete it, until no ball is
/// left. The window is padded with ball_count + extra_padding trailing zeros;
/// any padding that makes every ball matched yields the same pairs.
ParenSeq match_rounds(const BoxBallState& p, int extra_padding = 0);

/// Independent single-pass oracle: each 0 matches the nearest unmatched 1 on
/// its left; depth is one plus the maximum depth of the directly nested pairs.
ParenSeq match_stack(const BoxBallState& p, int extra_padding = 0);

struct StackPermutation {
  std::vector<int> word;  // w(1..N), a bijection on [1, N]
  int size() const { return static_cast<int>(word.size()); }
  bool operator==(const StackPermutation&) const = default;
};

/// Opens are numbered 1..N left to right; the word is the matched numbering of
/// the closes, read left to right.
StackPermutation stack_permutation(const ParenSeq& seq);

std::string to_string(const StackPermutation& w);

}  // namespace boxball
