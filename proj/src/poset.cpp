#include "boxball/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace boxball {

PermutationPoset::PermutationPoset(std::vector<PosetPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](PosetPoint a, PosetPoint b) { return a.i < b.i; });
  std::vector<int> seconds;
  seconds.reserve(points_.size());
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (k > 0 && points_[k].i == points_[k - 1].i) {
      throw std::invalid_argument("poset first coordinates must be distinct");
    }
    seconds.push_back(points_[k].j);
  }
  std::sort(seconds.begin(), seconds.end());
  if (std::adjacent_find(seconds.begin(), seconds.end()) != seconds.end()) {
    throw std::invalid_argument("poset second coordinates must be distinct");
  }
}

PermutationPoset poset_of_word(const std::vector<int>& word) {
  const std::size_t n = word.size();
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&word](std::size_t a, std::size_t b) {
    return std::pair(word[a], a) < std::pair(word[b], b);
  });
  std::vector<PosetPoint> points(n);
  for (std::size_t rank = 0; rank < n; ++rank) {
    const std::size_t pos = order[rank];
    points[pos] = {static_cast<int>(pos) + 1, static_cast<int>(rank) + 1};
  }
  return PermutationPoset(std::move(points));
}

PermutationPoset poset_of(const StackPermutation& w) { return poset_of_word(w.word); }

namespace {

// Exhaustive maximization of |C_1 u ... u C_k| (disjoint chains) and its
// antichain counterpart, memoized over point subsets. The lowest-index point v
// of a subset is either skipped or belongs to one family member, which may be
// assumed to start at v because v is minimal among the remaining points.
class GreeneSolver {
 public:
  explicit GreeneSolver(const PermutationPoset& poset)
      : n_(static_cast<int>(poset.size())),
        above_(poset.size(), 0),
        below_(poset.size(), 0),
        incomp_(poset.size(), 0),
        chain_memo_(static_cast<std::size_t>(n_ + 1) << n_, -1),
        anti_memo_(static_cast<std::size_t>(n_ + 1) << n_, -1) {
    const auto& pts = poset.points();
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a == b) continue;
        if (poset_less_eq(pts[a], pts[b])) {
          above_[a] |= 1u << b;
          below_[b] |= 1u << a;
        }
      }
    }
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (a != b && !poset_comparable(pts[a], pts[b])) incomp_[a] |= 1u << b;
      }
    }
  }

  int full_mask() const { return (1 << n_) - 1; }

  int chains(std::uint32_t mask, int k) {
    if (!mask || k == 0) return 0;
    std::int8_t& memo = chain_memo_[(static_cast<std::size_t>(k) << n_) | mask];
    if (memo >= 0) return memo;
    const int v = std::countr_zero(mask);
    int best = chains(mask & (mask - 1), k);  // v uncovered
    chain_dfs(mask, k, v, 1u << v, 1, best);
    memo = static_cast<std::int8_t>(best);
    return best;
  }

  int antichains(std::uint32_t mask, int k) {
    if (!mask || k == 0) return 0;
    std::int8_t& memo = anti_memo_[(static_cast<std::size_t>(k) << n_) | mask];
    if (memo >= 0) return memo;
    const int v = std::countr_zero(mask);
    int best = antichains(mask & (mask - 1), k);
    anti_dfs(mask, k, (mask & (mask - 1)) & incomp_[v], 1u << v, 1, best);
    memo = static_cast<std::int8_t>(best);
    return best;
  }

 private:
  // Extends a chain whose current top is `top` by the minimal elements above
  // it, so exactly the maximal chains through the start point are generated
  // (non-maximal chains are dominated and can be skipped).
  void chain_dfs(std::uint32_t mask, int k, int top, std::uint32_t used, int len, int& best) {
    const std::uint32_t cand = above_[top] & mask;
    if (!cand) {
      best = std::max(best, len + chains(mask & ~used, k - 1));
      return;
    }
    std::uint32_t c = cand;
    while (c) {
      const int u = std::countr_zero(c);
      c &= c - 1;
      if ((below_[u] & cand) == 0) chain_dfs(mask, k, u, used | (1u << u), len + 1, best);
    }
  }

  // Enumerates antichains in ascending index order; `allowed` holds the points
  // after the last chosen one that are incomparable to everything chosen.
  void anti_dfs(std::uint32_t mask, int k, std::uint32_t allowed, std::uint32_t used, int len,
                int& best) {
    best = std::max(best, len + antichains(mask & ~used, k - 1));
    std::uint32_t c = allowed;
    while (c) {
      const int u = std::countr_zero(c);
      c &= c - 1;
      anti_dfs(mask, k, c & incomp_[u], used | (1u << u), len + 1, best);
    }
  }

  int n_;
  std::vector<std::uint32_t> above_;
  std::vector<std::uint32_t> below_;
  std::vector<std::uint32_t> incomp_;
  std::vector<std::int8_t> chain_memo_;
  std::vector<std::int8_t> anti_memo_;
};

void check_size(const PermutationPoset& poset) {
  if (poset.size() > kGreeneSizeBound) {
    throw std::length_error("poset exceeds the brute-force size bound of " +
                            std::to_string(kGreeneSizeBound) + " points");
  }
}

int check_k(const PermutationPoset& poset, int k) {
  if (k < 0) throw std::invalid_argument("family size k must be >= 0");
  return std::min(k, static_cast<int>(poset.size()));
}

Partition differences(GreeneSolver& solver, int n, bool chain_side) {
  std::vector<int> parts;
  int prev = 0;
  for (int k = 1; k <= n && prev < n; ++k) {
    const int cur = chain_side ? solver.chains(solver.full_mask(), k)
                               : solver.antichains(solver.full_mask(), k);
    parts.push_back(cur - prev);  // the Partition ctor rejects any non-monotone slip
    prev = cur;
  }
  return Partition(std::move(parts));
}

}  // namespace

int greene_I(const PermutationPoset& poset, int k) {
  check_size(poset);
  k = check_k(poset, k);
  if (k == 0 || poset.size() == 0) return 0;
  GreeneSolver solver(poset);
  return solver.chains(solver.full_mask(), k);
}

int greene_D(const PermutationPoset& poset, int k) {
  check_size(poset);
  k = check_k(poset, k);
  if (k == 0 || poset.size() == 0) return 0;
  GreeneSolver solver(poset);
  return solver.antichains(solver.full_mask(), k);
}

Partition lambda_of(const PermutationPoset& poset) {
  check_size(poset);
  if (poset.size() == 0) return {};
  GreeneSolver solver(poset);
  return differences(solver, static_cast<int>(poset.size()), true);
}

Partition lambda_prime_of(const PermutationPoset& poset) {
  check_size(poset);
  if (poset.size() == 0) return {};
  GreeneSolver solver(poset);
  return differences(solver, static_cast<int>(poset.size()), false);
}

std::vector<PosetPoint> pair_vertices(const ParenSeq& seq) {
  std::vector<PosetPoint> verts(static_cast<std::size_t>(seq.ball_count()));
  int rank = 0;
  for (const Token& t : seq.tokens()) {
    if (t.kind == TokenKind::Close) {
      ++rank;
      verts[static_cast<std::size_t>(t.pair_id) - 1] = {rank, t.pair_id};
    }
  }
  return verts;
}

ChainFamily depth_chains(const ParenSeq& seq) {
  const std::vector<PosetPoint> verts = pair_vertices(seq);
  ChainFamily fam;
  fam.chains.resize(static_cast<std::size_t>(seq.max_depth()));
  for (const PairRecord& pr : seq.pairs()) {
    fam.chains[static_cast<std::size_t>(pr.depth) - 1].push_back(
        verts[static_cast<std::size_t>(pr.pair_id) - 1]);
  }
  for (auto& chain : fam.chains) {
    std::sort(chain.begin(), chain.end(), [](PosetPoint a, PosetPoint b) { return a.i < b.i; });
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (!poset_less_eq(chain[k - 1], chain[k])) {
        throw std::logic_error("vertices of equal depth failed to form a chain");
      }
    }
  }
  return fam;
}

AntichainFamily antichain_decomposition(const ParenSeq& seq) {
  const std::vector<PosetPoint> verts = pair_vertices(seq);
  const int max_depth = seq.max_depth();
  std::vector<std::vector<int>> by_depth(static_cast<std::size_t>(max_depth) + 1);
  for (const PairRecord& pr : seq.pairs()) {
    by_depth[static_cast<std::size_t>(pr.depth)].push_back(pr.pair_id);  // open order
  }

  AntichainFamily fam;
  std::vector<int> antichain_of(static_cast<std::size_t>(seq.ball_count()) + 1, -1);
  std::vector<char> claimed(static_cast<std::size_t>(seq.ball_count()) + 1, 0);
  for (int d = 1; d <= max_depth; ++d) {
    for (const int id : by_depth[static_cast<std::size_t>(d)]) {
      const PairRecord& pr = seq.pair(id);
      if (d == 1) {
        antichain_of[static_cast<std::size_t>(id)] = static_cast<int>(fam.antichains.size());
        fam.antichains.push_back({verts[static_cast<std::size_t>(id) - 1]});
        continue;
      }
      int host = -1;  // leftmost unclaimed depth-(d-1) pair nested inside
      for (const int qid : by_depth[static_cast<std::size_t>(d) - 1]) {
        const PairRecord& q = seq.pair(qid);
        if (claimed[static_cast<std::size_t>(qid)]) continue;
        if (pr.open_pos < q.open_pos && q.close_pos < pr.close_pos) {
          host = qid;
          break;
        }
      }
      if (host < 0) throw std::logic_error("no unclaimed nested pair of the previous depth");
      claimed[static_cast<std::size_t>(host)] = 1;
      const int a = antichain_of[static_cast<std::size_t>(host)];
      antichain_of[static_cast<std::size_t>(id)] = a;
      fam.antichains[static_cast<std::size_t>(a)].push_back(
          verts[static_cast<std::size_t>(id) - 1]);
    }
  }
  return fam;
}

}  // namespace boxball
