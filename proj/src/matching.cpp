#include "boxball/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boxball {
namespace {

std::vector<Cell> padded_cells(const BoxBallState& p, int extra_padding) {
  if (extra_padding < 0) throw std::invalid_argument("padding must be >= 0");
  std::vector<Cell> cells = p.window();
  cells.resize(cells.size() + static_cast<std::size_t>(p.ball_count() + extra_padding), 0);
  return cells;
}

}  // namespace

ParenSeq::ParenSeq(std::vector<PairRecord> pairs, Position base_offset)
    : base_offset_(base_offset) {
  std::sort(pairs.begin(), pairs.end(),
            [](const PairRecord& a, const PairRecord& b) { return a.open_pos < b.open_pos; });
  std::size_t length = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pairs[k].pair_id = static_cast<int>(k) + 1;
    if (pairs[k].open_pos >= pairs[k].close_pos) throw std::logic_error("pair closes before it opens");
    if (pairs[k].depth < 1) throw std::logic_error("pair depth must be >= 1");
    length = std::max(length, pairs[k].close_pos + 1);
  }
  tokens_.assign(length, Token{});
  for (const PairRecord& pr : pairs) {
    Token& open = tokens_[pr.open_pos];
    Token& close = tokens_[pr.close_pos];
    if (open.kind != TokenKind::Zero || close.kind != TokenKind::Zero) {
      throw std::logic_error("pairs overlap");
    }
    open = {TokenKind::Open, pr.pair_id};
    close = {TokenKind::Close, pr.pair_id};
  }
  pairs_ = std::move(pairs);

  // Framed-box discipline: every ')' closes the most recently opened live '('.
  std::vector<int> open_stack;
  for (const Token& t : tokens_) {
    if (t.kind == TokenKind::Open) {
      open_stack.push_back(t.pair_id);
    } else if (t.kind == TokenKind::Close) {
      if (open_stack.empty() || open_stack.back() != t.pair_id) {
        throw std::logic_error("crossing pairs");
      }
      open_stack.pop_back();
    }
  }
  if (!open_stack.empty()) throw std::logic_error("unclosed pair");
}

std::vector<int> ParenSeq::depth_histogram() const {
  std::vector<int> hist(static_cast<std::size_t>(max_depth()), 0);
  for (const PairRecord& pr : pairs_) ++hist[static_cast<std::size_t>(pr.depth) - 1];
  return hist;
}

int ParenSeq::max_depth() const {
  int d = 0;
  for (const PairRecord& pr : pairs_) d = std::max(d, pr.depth);
  return d;
}

std::string ParenSeq::token_text() const {
  std::string out;
  out.reserve(tokens_.size());
  for (const Token& t : tokens_) {
    out += t.kind == TokenKind::Zero ? '0' : (t.kind == TokenKind::Open ? '(' : ')');
  }
  return out;
}

ParenSeq match_rounds(const BoxBallState& p, int extra_padding) {
  const std::vector<Cell> cells = padded_cells(p, extra_padding);
  const int n = p.ball_count();
  std::vector<std::size_t> live(cells.size());
  std::iota(live.begin(), live.end(), std::size_t{0});

  std::vector<PairRecord> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  int depth = 0;
  while (static_cast<int>(pairs.size()) < n) {
    ++depth;
    if (depth > n) throw std::logic_error("round matching failed to terminate");
    std::vector<std::size_t> next;
    next.reserve(live.size());
    std::size_t t = 0;
    while (t < live.size()) {
      // Adjacent "1 0" occurrences of the residual never overlap, so pairing
      // them all in one sweep is well defined.
      if (t + 1 < live.size() && cells[live[t]] == 1 && cells[live[t + 1]] == 0) {
        pairs.push_back({0, live[t], live[t + 1], depth});
        t += 2;
      } else {
        next.push_back(live[t]);
        ++t;
      }
    }
    live.swap(next);
  }
  return ParenSeq(std::move(pairs), p.offset());
}

ParenSeq match_stack(const BoxBallState& p, int extra_padding) {
  const std::vector<Cell> cells = padded_cells(p, extra_padding);

  struct OpenBall {
    std::size_t pos;
    int child_depth;  // max depth of directly nested pairs closed so far
  };
  std::vector<OpenBall> stack;
  std::vector<PairRecord> pairs;
  pairs.reserve(static_cast<std::size_t>(p.ball_count()));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i]) {
      stack.push_back({i, 0});
      continue;
    }
    if (stack.empty()) continue;  // unmatched zero
    const OpenBall top = stack.back();
    stack.pop_back();
    const int depth = top.child_depth + 1;
    pairs.push_back({0, top.pos, i, depth});
    if (!stack.empty()) stack.back().child_depth = std::max(stack.back().child_depth, depth);
  }
  if (!stack.empty()) throw std::logic_error("padding left unmatched balls");
  return ParenSeq(std::move(pairs), p.offset());
}

StackPermutation stack_permutation(const ParenSeq& seq) {
  StackPermutation w;
  w.word.reserve(static_cast<std::size_t>(seq.ball_count()));
  for (const Token& t : seq.tokens()) {
    if (t.kind == TokenKind::Close) w.word.push_back(t.pair_id);
  }
  return w;
}

std::string to_string(const StackPermutation& w) {
  std::string out;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.word[i]);
  }
  return out;
}

}  // namespace boxball
