// Command-line harness: simulate evolutions, report conserved quantities,
// run the cross-model verification suite, and render states as walks.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "boxball/corpus.hpp"
#include "boxball/matching.hpp"
#include "boxball/poset.hpp"
#include "boxball/render.hpp"
#include "boxball/report.hpp"
#include "boxball/state.hpp"
#include "boxball/verify.hpp"
#include "boxball/walkpath.hpp"

namespace {

using namespace boxball;
using nlohmann::json;

struct CommonArgs {
  std::string state_text;
  std::uint64_t seed = 42;
  int count = 1;
  int max_balls = 12;
  int max_window = 40;
  int steps = 1;
  int lmax = 0;  // 0 = one per ball
  std::string format = "text";
};

void add_state_options(CLI::App* cmd, CommonArgs& args) {
  auto* state = cmd->add_option("--state", args.state_text, "State as '0'/'1' cells[@offset]");
  auto* seed = cmd->add_option("--seed", args.seed, "RNG seed for generated states");
  auto* count = cmd->add_option("--count", args.count, "Number of generated states")
                    ->check(CLI::Range(0, 100000));
  auto* balls = cmd->add_option("--max-balls", args.max_balls, "Ball cap for generated states")
                    ->check(CLI::Range(0, 12));
  auto* window =
      cmd->add_option("--max-window", args.max_window, "Window cap for generated states")
          ->check(CLI::Range(1, 40));
  for (auto* opt : {seed, count, balls, window}) state->excludes(opt);
}

void add_format_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

std::vector<BoxBallState> pick_states(const CommonArgs& args) {
  if (!args.state_text.empty()) return {parse_state(args.state_text)};
  CorpusOptions opts{args.seed, args.count, args.max_balls, args.max_window};
  return random_corpus(opts);
}

int auto_lmax(const CommonArgs& args, const BoxBallState& p) {
  return args.lmax > 0 ? args.lmax : std::max(1, p.ball_count());
}

int run_simulate(const CommonArgs& args) {
  json runs = json::array();
  bool first = true;
  for (const BoxBallState& p0 : pick_states(args)) {
    std::vector<BoxBallState> trajectory{p0};
    for (int t = 0; t < args.steps; ++t) trajectory.push_back(evolve_tts(trajectory.back()));
    if (args.format == "json") {
      json states = json::array();
      for (std::size_t t = 0; t < trajectory.size(); ++t) {
        json js = to_json(trajectory[t]);
        js["t"] = t;
        states.push_back(std::move(js));
      }
      runs.push_back({{"initial", to_json(p0)}, {"states", states}});
    } else {
      if (!first) std::cout << "\n";
      std::cout << render_simulation(trajectory);
      first = false;
    }
  }
  if (args.format == "json") std::cout << json{{"runs", runs}}.dump(2) << "\n";
  return 0;
}

int run_invariants(const CommonArgs& args) {
  bool ok = true;
  json reports = json::array();
  bool first = true;
  for (const BoxBallState& p0 : pick_states(args)) {
    const InvariantReport rep = invariant_report(p0, args.steps, auto_lmax(args, p0));
    for (const Verdict& v : rep.verdicts) ok = ok && v.passed;
    if (args.format == "json") {
      reports.push_back(to_json(rep));
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    for (const StepRecord& rec : rep.steps) {
      std::cout << "t+" << rec.t << " : " << rec.state.text_at()
                << "  w = " << to_string(rec.stack_perm)
                << "  shape = " << to_string(rec.p_shape) << "  E =";
      for (const auto& [l, e] : rec.energy.values) std::cout << " " << e;
      std::cout << "\n";
    }
    for (const Verdict& v : rep.verdicts) {
      std::cout << (v.passed ? "  ok   " : "  FAIL ") << v.check;
      if (!v.detail.empty()) std::cout << "  [" << v.detail << "]";
      std::cout << "\n";
    }
  }
  if (args.format == "json") std::cout << json{{"reports", reports}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_verify(const CommonArgs& args, bool corrupt) {
  VerifyOptions opts;
  opts.corpus = {args.seed, args.count, args.max_balls, args.max_window};
  opts.steps = args.steps;
  opts.corrupt_r_step = corrupt;
  if (!args.state_text.empty()) opts.single_state = parse_state(args.state_text);
  const std::vector<CheckResult> results = run_verification(opts);
  if (args.format == "json") {
    std::cout << to_json(results).dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      const char* tag = r.informational ? "info" : (r.passed ? "PASS" : "FAIL");
      std::cout << tag << "  " << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
    }
  }
  return all_passed(results) ? 0 : 1;
}

int run_render(const CommonArgs& args) {
  const BoxBallState p = parse_state(args.state_text);
  const ParenSeq seq = match_stack(p);
  const Walk walk = to_walk(seq);
  if (args.format == "json") {
    const GroupPartition parts = group_partition(walk);
    json groups = json::array();
    for (const WalkGroup& g : parts.groups) {
      groups.push_back({{"begin", g.begin}, {"end", g.end}, {"x0", g.x0}, {"y0", g.y0}});
    }
    std::cout << json{{"state", to_json(p)},
                      {"parens", to_json(seq)},
                      {"poset", to_json(poset_of(stack_permutation(seq)))},
                      {"walk", to_json(walk)},
                      {"groups", groups},
                      {"singles", parts.singles}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "base position: " << seq.base_offset() << "\n";
  std::cout << render_walk(walk);
  std::cout << render_paren_lines(seq);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"box-ball automaton: evolution, conserved quantities, verification"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Print a state's evolution");
  add_state_options(sim, sim_args);
  sim->add_option("--steps", sim_args.steps, "Evolution steps")->check(CLI::Range(0, 100000));
  add_format_option(sim, sim_args);

  CommonArgs inv_args;
  inv_args.steps = 20;
  auto* inv = app.add_subcommand("invariants", "Track conserved quantities over time");
  add_state_options(inv, inv_args);
  inv->add_option("--steps", inv_args.steps, "Evolution steps")->check(CLI::Range(0, 100000));
  inv->add_option("--lmax", inv_args.lmax, "Largest carrier capacity to report")
      ->check(CLI::Range(1, 64));
  add_format_option(inv, inv_args);

  CommonArgs ver_args;
  ver_args.count = 500;
  ver_args.steps = 20;
  bool corrupt = false;
  auto* ver = app.add_subcommand("verify", "Run the cross-model verification suite");
  add_state_options(ver, ver_args);
  ver->add_option("--steps", ver_args.steps, "Evolution steps per state")
      ->check(CLI::Range(0, 100000));
  ver->add_flag("--corrupt-r-step", corrupt,
                "Corrupt the carrier step on purpose; the suite must catch it");
  add_format_option(ver, ver_args);

  CommonArgs ren_args;
  auto* ren = app.add_subcommand("render", "Draw the walk and parenthesis diagram");
  ren->add_option("--state", ren_args.state_text, "State as '0'/'1' cells[@offset]")->required();
  add_format_option(ren, ren_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sim->parsed()) return run_simulate(sim_args);
    if (inv->parsed()) return run_invariants(inv_args);
    if (ver->parsed()) return run_verify(ver_args, corrupt);
    if (ren->parsed()) return run_render(ren_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
