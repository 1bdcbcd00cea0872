#pragma once

#include <cstddef>
#include <vector>

#include "boxball/matching.hpp"
#include "boxball/partition.hpp"

namespace boxball {

struct PosetPoint {
  int i = 0;
  int j = 0;
  bool operator==(const PosetPoint&) const = default;
};

inline bool poset_less_eq(PosetPoint a, PosetPoint b) { return a.i <= b.i && a.j <= b.j; }
inline bool poset_comparable(PosetPoint a, PosetPoint b) {
  return poset_less_eq(a, b) || poset_less_eq(b, a);
}

/// Points (i, w(i)) under the product order; all first coordinates distinct,
/// all second coordinates distinct. Chains are increasing subsequences,
/// antichains decreasing ones.
class PermutationPoset {
 public:
  PermutationPoset() = default;
  explicit PermutationPoset(std::vector<PosetPoint> points);  // sorts by i, validates

  std::size_t size() const { return points_.size(); }
  const std::vector<PosetPoint>& points() const { return points_; }  // sorted by i

  bool operator==(const PermutationPoset&) const = default;

 private:
  std::vector<PosetPoint> points_;
};

/// Poset of a word over [1, r]: position i is paired with the rank of
/// (letter, position) in lexicographic order, so equal letters are ordered by
/// position. A permutation word yields the points (i, w(i)) literally.
PermutationPoset poset_of_word(const std::vector<int>& word);
PermutationPoset poset_of(const StackPermutation& w);

/// Hard cap for the brute-force Greene searches below.
inline constexpr std::size_t kGreeneSizeBound = 14;

/// Exact maximum number of points covered by k disjoint chains (I_k) or
/// k disjoint antichains (D_k), by exhaustive search with memoization over
/// point subsets. Throws std::length_error above kGreeneSizeBound.
int greene_I(const PermutationPoset& poset, int k);
int greene_D(const PermutationPoset& poset, int k);

/// Successive differences of I_k (resp. D_k), trailing zeros dropped.
Partition lambda_of(const PermutationPoset& poset);
Partition lambda_prime_of(const PermutationPoset& poset);

struct ChainFamily {
  std::vector<std::vector<PosetPoint>> chains;  // chains[k - 1]: depth-k pairs
};

struct AntichainFamily {
  std::vector<std::vector<PosetPoint>> antichains;
};

/// Poset vertex of each matched pair, indexed by pair_id - 1: first coordinate
/// is the rank of the pair's ')' among all ')', second its opening number.
std::vector<PosetPoint> pair_vertices(const ParenSeq& seq);

/// Chain k = vertices of the pairs of depth k. Verifies the chain property
/// and throws std::logic_error if it fails (which would be an internal bug).
ChainFamily depth_chains(const ParenSeq& seq);

/// Partitions the vertices into antichains whose depth multisets are
/// {1, ..., l}: each depth-k pair joins the antichain of the leftmost
/// not-yet-claimed depth-(k-1) pair nested inside it.
AntichainFamily antichain_decomposition(const ParenSeq& seq);

}  // namespace boxball
