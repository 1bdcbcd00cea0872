#include "boxball/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "boxball/carrier.hpp"
#include "boxball/matching.hpp"
#include "boxball/poset.hpp"
#include "boxball/rsk.hpp"
#include "boxball/walkpath.hpp"

namespace boxball {
namespace {

class CheckSet {
 public:
  CheckResult& add(std::string name, bool informational = false) {
    results_.push_back({std::move(name), true, informational, ""});
    index_[results_.back().name] = results_.size() - 1;
    return results_.back();
  }

  // Keeps the first counterexample so reruns point at the same state.
  void fail(const std::string& name, const std::string& detail) {
    CheckResult& r = results_[index_.at(name)];
    if (!r.passed) return;
    r.passed = false;
    r.detail = detail;
  }

  void require(bool ok, const std::string& name, const std::string& detail) {
    if (!ok) fail(name, detail);
  }

  CheckResult& at(const std::string& name) { return results_[index_.at(name)]; }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Mutation hook: the unload that drains the carrier forgets to report its
// bump, so energies and site sets come out short while the dynamics stay
// intact. The suite has to catch this.
RStepResult corrupted_r_step(const Carrier& c, Cell b) {
  RStepResult r = r_step(c, b);
  if (r.bumped && r.carrier.ones() == 0) r.bumped = false;
  return r;
}

std::string where(const BoxBallState& initial, int t, const BoxBallState& now) {
  std::string s = "state=" + initial.text_at() + " step=" + std::to_string(t);
  if (t > 0) s += " evolved=" + now.text_at();
  return s;
}

bool identity_word(const std::vector<int>& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

void check_r_step_table(CheckSet& checks, RStepFn step) {
  for (int l = 1; l <= 6; ++l) {
    std::set<std::pair<int, int>> images;
    for (int m2 = 0; m2 <= l; ++m2) {
      for (const Cell b : {Cell{0}, Cell{1}}) {
        const RStepResult r = step(Carrier(l, m2), b);
        checks.require(r.carrier.capacity() == l, "r_step_bijective",
                       "capacity changed at l=" + std::to_string(l));
        images.insert({r.out, r.carrier.ones()});
      }
    }
    checks.require(static_cast<int>(images.size()) == 2 * (l + 1), "r_step_bijective",
                   "step table not injective at l=" + std::to_string(l));
  }
}

void check_pair_structure(CheckSet& checks, const ParenSeq& seq, const std::string& ctx) {
  const auto& pairs = seq.pairs();
  const std::vector<PosetPoint> verts = pair_vertices(seq);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      // pairs are sorted by opening position, so open_a < open_b
      const bool nested = pairs[b].close_pos < pairs[a].close_pos;
      const bool disjoint = pairs[a].close_pos < pairs[b].open_pos;
      checks.require(nested || disjoint, "pairs_noncrossing",
                     ctx + " pairs " + std::to_string(pairs[a].pair_id) + "," +
                         std::to_string(pairs[b].pair_id));
      const bool comparable = poset_comparable(verts[a], verts[b]);
      checks.require(comparable == disjoint, "pair_relations_match_order",
                     ctx + " pairs " + std::to_string(pairs[a].pair_id) + "," +
                         std::to_string(pairs[b].pair_id));
    }
  }

  const std::vector<int> hist = seq.depth_histogram();
  for (std::size_t d = 1; d < hist.size(); ++d) {
    checks.require(hist[d] <= hist[d - 1], "depth_histogram_decreasing",
                   ctx + " depth=" + std::to_string(d + 1));
  }
}

void check_antichains(CheckSet& checks, const ParenSeq& seq, const std::string& ctx) {
  AntichainFamily fam;
  try {
    fam = antichain_decomposition(seq);
  } catch (const std::logic_error& e) {
    checks.fail("antichain_decomposition_valid", ctx + " " + e.what());
    return;
  }
  std::set<std::pair<int, int>> seen;
  std::size_t total = 0;
  for (const auto& antichain : fam.antichains) {
    std::vector<int> depths;
    for (std::size_t a = 0; a < antichain.size(); ++a) {
      seen.insert({antichain[a].i, antichain[a].j});
      ++total;
      depths.push_back(seq.pair(antichain[a].j).depth);
      for (std::size_t b = a + 1; b < antichain.size(); ++b) {
        checks.require(!poset_comparable(antichain[a], antichain[b]),
                       "antichain_decomposition_valid", ctx + " comparable points in antichain");
      }
    }
    std::sort(depths.begin(), depths.end());
    for (std::size_t d = 0; d < depths.size(); ++d) {
      checks.require(depths[d] == static_cast<int>(d) + 1, "antichain_decomposition_valid",
                     ctx + " depths not consecutive from 1");
    }
  }
  checks.require(total == seq.pairs().size() && seen.size() == seq.pairs().size(),
                 "antichain_decomposition_valid", ctx + " not a partition of the vertices");
}

void check_walks(CheckSet& checks, const ParenSeq& seq, const BoxBallState& next_tts,
                 const std::string& ctx) {
  const Walk walk = to_walk(seq);
  GroupPartition parts;
  try {
    parts = group_partition(walk);
  } catch (const std::invalid_argument& e) {
    checks.fail("walk_groups_balanced", ctx + " " + e.what());
    return;
  }
  for (const WalkGroup& g : parts.groups) {
    int ups = 0;
    int rights = 0;
    for (std::size_t s = g.begin; s < g.end; ++s) {
      if (walk.steps()[s] == WalkStep::Up) {
        ++ups;
      } else {
        ++rights;
        checks.require(seq.tokens()[s].kind == TokenKind::Close, "walk_group_rights_are_closes",
                       ctx + " token " + std::to_string(s));
      }
    }
    checks.require(ups == rights && ups > 0, "walk_groups_balanced", ctx);
  }

  const BoxBallState via_walk = walk_to_state(evolve_reflect(walk));
  checks.require(via_walk == next_tts, "reflect_matches_ball_moving",
                 ctx + " reflected=" + via_walk.text_at() + " expected=" + next_tts.text_at());

  checks.require(same_walk(delete_convex(walk), delete_concave(walk)), "corner_deletions_agree",
                 ctx);
}

void check_brute_force(CheckSet& checks, const BoxBallState& p, const ParenSeq& seq,
                       const StackPermutation& w, const ChainFamily& chains,
                       const Partition& rsk_shape, const std::map<int, int>& energies,
                       const std::string& ctx) {
  if (static_cast<int>(chains.chains.size()) != seq.max_depth()) return;  // failed upstream
  const PermutationPoset poset = poset_of(w);
  const int n = static_cast<int>(poset.size());
  if (poset.size() > kGreeneSizeBound) return;  // oversized states skip only the brute force

  const Partition lambda = lambda_of(poset);
  checks.require(rsk_shape == lambda, "p_symbol_shape_equals_lambda",
                 ctx + " shape=" + to_string(rsk_shape) + " lambda=" + to_string(lambda));
  checks.require(lambda_prime_of(poset) == transpose(lambda), "greene_duality", ctx);

  int chain_prefix = 0;
  int shape_prefix = 0;
  for (int k = 1; k <= seq.max_depth(); ++k) {
    chain_prefix += static_cast<int>(chains.chains[static_cast<std::size_t>(k) - 1].size());
    shape_prefix += rsk_shape.part(k);
    const int brute = greene_I(poset, k);
    checks.require(brute == chain_prefix, "depth_chains_optimal",
                   ctx + " k=" + std::to_string(k) + " chains=" + std::to_string(chain_prefix) +
                       " brute=" + std::to_string(brute));
    checks.require(brute == shape_prefix && brute == chain_prefix, "triple_equality",
                   ctx + " k=" + std::to_string(k));
  }

  for (int l = 1; l <= n; ++l) {
    const int e = energies.at(l);
    const int brute = greene_I(poset, l);
    checks.require(e == brute, "energy_equals_chain_cover",
                   ctx + " l=" + std::to_string(l) + " E=" + std::to_string(e) +
                       " I=" + std::to_string(brute));
  }

  // Recursion behind the conservation law: the depth-k chain of p has the size
  // of the depth-1 chain after k-1 rounds of corner deletion, and the walk is
  // exhausted after max_depth rounds.
  BoxBallState cur = p;
  for (int k = 1; k <= seq.max_depth(); ++k) {
    const ParenSeq sk = match_stack(cur);
    const ChainFamily cfk = depth_chains(sk);
    const std::size_t c1 = cfk.chains.empty() ? 0 : cfk.chains[0].size();
    checks.require(c1 == chains.chains[static_cast<std::size_t>(k) - 1].size(),
                   "corner_deletion_recursion", ctx + " k=" + std::to_string(k));
    cur = walk_to_state(delete_convex(to_walk(sk)));
  }
  checks.require(cur.empty(), "corner_deletion_recursion", ctx + " leftover after max depth");
}

struct AsymptoticTally {
  int separated = 0;
  int not_separated = 0;
  int not_persistent = 0;
  std::string first_failure;
};

void check_asymptotic(CheckSet& checks, const BoxBallState& p0, const VerifyOptions& opts,
                      RStepFn step_fn, AsymptoticTally& tally) {
  const int n = p0.ball_count();
  const Position threshold = std::max<Position>(n, 1);
  BoxBallState q = p0;
  int t = 0;
  while (t < opts.asymptotic_step_cap && !is_asymptotic(q, threshold)) {
    q = evolve_tts(q);
    ++t;
  }
  if (!is_asymptotic(q, threshold)) {
    // Equal-length solitons keep a constant gap, so some states never reach
    // the regime; they are counted here, not failed.
    ++tally.not_separated;
    if (tally.first_failure.empty()) {
      tally.first_failure = "never separated: " + p0.text_at();
    }
    return;
  }
  ++tally.separated;

  BoxBallState probe = q;
  for (int extra = 0; extra < 3; ++extra) {
    probe = evolve_tts(probe);
    if (!is_asymptotic(probe, threshold)) {
      ++tally.not_persistent;
      if (tally.first_failure.empty()) {
        tally.first_failure = "separation not persistent: " + p0.text_at();
      }
      return;
    }
  }

  const std::string ctx = "state=" + p0.text_at() + " separated=" + q.text_at();
  const SolitonProfile prof = solitons(q);
  for (int l = 1; l <= n; ++l) {
    int expected = 0;
    for (const auto& [k, count] : prof.counts) expected += std::min(l, k) * count;
    const int e = transfer_with(q, l, step_fn).energy;
    checks.require(e == expected, "asymptotic_formula",
                   ctx + " l=" + std::to_string(l) + " E=" + std::to_string(e) +
                       " expected=" + std::to_string(expected));
  }

  // The shape's columns are the soliton lengths.
  const Partition lambda = shape(p_symbol(stack_permutation(match_stack(q)).word));
  std::vector<int> run_lengths;
  for (const SolitonRun& run : prof.runs) run_lengths.push_back(run.length);
  std::sort(run_lengths.rbegin(), run_lengths.rend());
  checks.require(transpose(lambda).parts() == run_lengths, "asymptotic_formula",
                 ctx + " lambda=" + to_string(lambda));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const RStepFn step_fn = opts.corrupt_r_step ? &corrupted_r_step : &r_step;
  const std::vector<BoxBallState> corpus =
      opts.single_state ? std::vector<BoxBallState>{*opts.single_state}
                        : random_corpus(opts.corpus);

  CheckSet checks;
  for (const char* name :
       {"ball_count_conserved", "offset_advances", "match_rounds_equals_stack",
        "match_padding_invariance", "pairs_noncrossing", "depth_histogram_decreasing",
        "depth_one_identity_permutation", "pair_relations_match_order", "depth_chains_optimal",
        "triple_equality", "greene_duality", "antichain_decomposition_valid",
        "p_symbol_shape_equals_lambda", "p_symbol_shape_conserved", "walk_groups_balanced",
        "walk_group_rights_are_closes", "reflect_matches_ball_moving",
        "carrier_matches_ball_moving", "corner_deletions_agree", "corner_deletion_recursion",
        "r_step_bijective", "energy_sites_match_depths", "energy_profile_monotone",
        "energy_conserved", "energy_lambda_difference", "energy_equals_chain_cover",
        "asymptotic_formula"}) {
    checks.add(name);
  }
  checks.add("asymptotic_reached", /*informational=*/true);

  check_r_step_table(checks, step_fn);

  AsymptoticTally tally;
  for (const BoxBallState& p0 : corpus) {
    BoxBallState p = p0;
    Partition shape0;
    std::map<int, int> energies0;

    for (int t = 0; t <= opts.steps; ++t) {
      const std::string ctx = where(p0, t, p);
      const int n = p.ball_count();

      const ParenSeq seq = match_stack(p);
      checks.require(match_rounds(p) == seq, "match_rounds_equals_stack", ctx);
      checks.require(match_stack(p, 5) == seq && match_rounds(p, 5) == seq,
                     "match_padding_invariance", ctx);

      check_pair_structure(checks, seq, ctx);

      const StackPermutation w = stack_permutation(seq);
      if (seq.max_depth() <= 1) {
        checks.require(identity_word(w.word), "depth_one_identity_permutation", ctx);
      }

      check_antichains(checks, seq, ctx);

      ChainFamily chains;
      try {
        chains = depth_chains(seq);
      } catch (const std::logic_error& e) {
        checks.fail("depth_chains_optimal", ctx + " " + e.what());
      }

      const Partition rsk_shape = shape(p_symbol(w.word));
      if (t == 0) {
        shape0 = rsk_shape;
      } else {
        checks.require(rsk_shape == shape0, "p_symbol_shape_conserved",
                       ctx + " shape=" + to_string(rsk_shape) + " was=" + to_string(shape0));
      }

      const BoxBallState next = evolve_tts(p);
      check_walks(checks, seq, next, ctx);

      std::map<int, int> energies;
      std::vector<Position> prev_sites;
      for (int l = 1; l <= n; ++l) {
        TransferResult tr = transfer_with(p, l, step_fn);
        energies[l] = tr.energy;
        checks.require(tr.sites == energy_sites_predicted(seq, l), "energy_sites_match_depths",
                       ctx + " l=" + std::to_string(l));
        if (l > 1) {
          checks.require(energies[l] >= energies[l - 1] &&
                             std::includes(tr.sites.begin(), tr.sites.end(), prev_sites.begin(),
                                           prev_sites.end()),
                         "energy_profile_monotone", ctx + " l=" + std::to_string(l));
        }
        if (l >= seq.max_depth()) {
          checks.require(tr.energy == n, "energy_profile_monotone",
                         ctx + " l=" + std::to_string(l) + " not stabilized");
        }
        prev_sites = std::move(tr.sites);
      }

      if (n > 0) {
        const BoxBallState by_carrier = transfer_with(p, n, step_fn).next;
        const BoxBallState by_big_carrier = transfer_with(p, n + 2, step_fn).next;
        checks.require(by_carrier == next && by_big_carrier == next, "carrier_matches_ball_moving",
                       ctx + " carrier=" + by_carrier.text_at() + " expected=" + next.text_at());
      }

      if (t == 0) {
        energies0 = energies;
      } else {
        checks.require(energies == energies0, "energy_conserved", ctx);
      }

      for (int l = 1; l <= n; ++l) {
        const int prev = l == 1 ? 0 : energies[l - 1];
        checks.require(energies[l] - prev == rsk_shape.part(l), "energy_lambda_difference",
                       ctx + " l=" + std::to_string(l));
      }

      if (t == 0) {
        try {
          check_brute_force(checks, p, seq, w, chains, rsk_shape, energies, ctx);
        } catch (const std::exception& e) {
          checks.fail("triple_equality", ctx + " exception: " + e.what());
        }
      }

      if (t == opts.steps) break;
      checks.require(next.ball_count() == p.ball_count(), "ball_count_conserved", ctx);
      if (!p.empty()) {
        checks.require(next.offset() > p.offset(), "offset_advances", ctx);
      }
      p = next;
    }

    check_asymptotic(checks, p0, opts, step_fn, tally);
  }

  CheckResult& reached = checks.at("asymptotic_reached");
  reached.detail = std::to_string(tally.separated) + " of " +
                   std::to_string(static_cast<int>(corpus.size())) +
                   " states separated within " + std::to_string(opts.asymptotic_step_cap) +
                   " steps";
  if (tally.not_separated > 0 || tally.not_persistent > 0) {
    reached.detail += "; " + std::to_string(tally.not_separated + tally.not_persistent) +
                      " reported (" + tally.first_failure + ")";
  }

  return checks.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.informational && !r.passed) return false;
  }
  return true;
}

}  // namespace boxball
