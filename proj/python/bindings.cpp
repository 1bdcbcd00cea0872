#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "boxball/carrier.hpp"
#include "boxball/matching.hpp"
#include "boxball/partition.hpp"
#include "boxball/poset.hpp"
#include "boxball/render.hpp"
#include "boxball/rsk.hpp"
#include "boxball/state.hpp"
#include "boxball/verify.hpp"
#include "boxball/walkpath.hpp"

namespace py = pybind11;
using namespace boxball;

namespace {

std::vector<std::vector<std::pair<int, int>>> as_tuples(
    const std::vector<std::vector<PosetPoint>>& families) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& family : families) {
    std::vector<std::pair<int, int>> pts;
    for (const PosetPoint& p : family) pts.emplace_back(p.i, p.j);
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_boxball, m) {
  m.doc() = "Box-ball automaton: evolution rules, stack permutations, chain "
            "invariants, insertion tableaux, carrier energies and the "
            "cross-model verification suite.";

  py::class_<BoxBallState>(m, "BoxBallState")
      .def(py::init<>())
      .def_property_readonly("text", &BoxBallState::text)
      .def_property_readonly("offset", &BoxBallState::offset)
      .def_property_readonly("ball_count", &BoxBallState::ball_count)
      .def_property_readonly("empty", &BoxBallState::empty)
      .def("cell", &BoxBallState::cell)
      .def("ball_positions", &BoxBallState::ball_positions)
      .def("__eq__", [](const BoxBallState& a, const BoxBallState& b) { return a == b; })
      .def("__repr__", &BoxBallState::text_at)
      .def("__str__", &BoxBallState::text_at);

  m.def("parse_state", py::overload_cast<std::string_view>(&parse_state),
        "Parse '0'/'1' cells with an optional @offset suffix", py::arg("text"));
  m.def("parse_state", py::overload_cast<std::string_view, Position>(&parse_state),
        py::arg("cells"), py::arg("offset"));
  m.def("evolve_tts", &evolve_tts, "One ball-moving evolution step", py::arg("state"));

  py::class_<SolitonRun>(m, "SolitonRun")
      .def_readonly("start", &SolitonRun::start)
      .def_readonly("length", &SolitonRun::length)
      .def("__repr__", [](const SolitonRun& r) {
        return "SolitonRun(start=" + std::to_string(r.start) +
               ", length=" + std::to_string(r.length) + ")";
      });
  py::class_<SolitonProfile>(m, "SolitonProfile")
      .def_readonly("runs", &SolitonProfile::runs)
      .def_readonly("counts", &SolitonProfile::counts)
      .def_readonly("gaps", &SolitonProfile::gaps);
  m.def("solitons", &solitons, py::arg("state"));
  m.def("is_asymptotic", &is_asymptotic, py::arg("state"), py::arg("threshold"));

  py::class_<PairRecord>(m, "PairRecord")
      .def_readonly("pair_id", &PairRecord::pair_id)
      .def_readonly("open_pos", &PairRecord::open_pos)
      .def_readonly("close_pos", &PairRecord::close_pos)
      .def_readonly("depth", &PairRecord::depth);
  py::class_<ParenSeq>(m, "ParenSeq")
      .def_property_readonly("tokens", &ParenSeq::token_text)
      .def_property_readonly("base_offset", &ParenSeq::base_offset)
      .def_property_readonly("ball_count", &ParenSeq::ball_count)
      .def_property_readonly("pairs", [](const ParenSeq& s) { return s.pairs(); })
      .def("position_of", &ParenSeq::position_of)
      .def("depth_histogram", &ParenSeq::depth_histogram)
      .def("max_depth", &ParenSeq::max_depth)
      .def("__eq__", [](const ParenSeq& a, const ParenSeq& b) { return a == b; })
      .def("__repr__", &ParenSeq::token_text);
  m.def("match_rounds", &match_rounds, py::arg("state"), py::arg("extra_padding") = 0);
  m.def("match_stack", &match_stack, py::arg("state"), py::arg("extra_padding") = 0);
  m.def(
      "stack_permutation",
      [](const ParenSeq& seq) { return stack_permutation(seq).word; }, py::arg("seq"));

  m.def(
      "row_insert",
      [](const std::vector<std::vector<int>>& rows, int letter) {
        return row_insert(Tableau(rows), letter).rows();
      },
      py::arg("rows"), py::arg("letter"));
  m.def(
      "p_symbol", [](const std::vector<int>& word) { return p_symbol(word).rows(); },
      py::arg("word"));
  m.def(
      "p_shape", [](const std::vector<int>& word) { return shape(p_symbol(word)).parts(); },
      "Shape of the insertion tableau of the word", py::arg("word"));
  m.def(
      "transpose",
      [](const std::vector<int>& parts) { return transpose(Partition(parts)).parts(); },
      py::arg("partition"));

  m.def(
      "greene_i",
      [](const std::vector<int>& word, int k) { return greene_I(poset_of_word(word), k); },
      "Max points of the word's poset covered by k disjoint chains", py::arg("word"),
      py::arg("k"));
  m.def(
      "greene_d",
      [](const std::vector<int>& word, int k) { return greene_D(poset_of_word(word), k); },
      "Max points covered by k disjoint antichains", py::arg("word"), py::arg("k"));
  m.def(
      "lambda_of",
      [](const std::vector<int>& word) { return lambda_of(poset_of_word(word)).parts(); },
      py::arg("word"));
  m.def(
      "lambda_prime_of",
      [](const std::vector<int>& word) { return lambda_prime_of(poset_of_word(word)).parts(); },
      py::arg("word"));
  m.def(
      "depth_chains", [](const ParenSeq& seq) { return as_tuples(depth_chains(seq).chains); },
      py::arg("seq"));
  m.def(
      "antichain_decomposition",
      [](const ParenSeq& seq) { return as_tuples(antichain_decomposition(seq).antichains); },
      py::arg("seq"));

  py::class_<Walk>(m, "Walk")
      .def_property_readonly("anchor_x", &Walk::anchor_x)
      .def_property_readonly("steps", [](const Walk& w) { return step_text(w); })
      .def_property_readonly("up_count", &Walk::up_count)
      .def("__eq__", [](const Walk& a, const Walk& b) { return a == b; })
      .def("__repr__", [](const Walk& w) {
        return step_text(w) + "@" + std::to_string(w.anchor_x());
      });
  m.def("to_walk", &to_walk, py::arg("seq"));
  m.def("parse_walk", &parse_walk, py::arg("steps"), py::arg("anchor_x") = 0);
  m.def("evolve_reflect", &evolve_reflect, py::arg("walk"));
  m.def("walk_to_state", &walk_to_state, py::arg("walk"));
  m.def("delete_convex", &delete_convex, py::arg("walk"));
  m.def("delete_concave", &delete_concave, py::arg("walk"));
  m.def("same_walk", &same_walk, py::arg("a"), py::arg("b"));
  m.def("render_walk", &render_walk, py::arg("walk"));
  m.def("render_paren_lines", &render_paren_lines, py::arg("seq"));

  py::class_<Carrier>(m, "Carrier")
      .def(py::init<int, int>(), py::arg("capacity"), py::arg("ones") = 0)
      .def_property_readonly("capacity", &Carrier::capacity)
      .def_property_readonly("ones", &Carrier::ones)
      .def_property_readonly("zeros", &Carrier::zeros)
      .def("__eq__", [](const Carrier& a, const Carrier& b) { return a == b; });
  py::class_<RStepResult>(m, "RStepResult")
      .def_readonly("out", &RStepResult::out)
      .def_readonly("carrier", &RStepResult::carrier)
      .def_readonly("bumped", &RStepResult::bumped);
  m.def("r_step", &r_step, py::arg("carrier"), py::arg("cell"));

  py::class_<TransferResult>(m, "TransferResult")
      .def_readonly("next", &TransferResult::next)
      .def_readonly("energy", &TransferResult::energy)
      .def_readonly("sites", &TransferResult::sites);
  m.def("transfer", &transfer, py::arg("state"), py::arg("capacity") = std::nullopt,
        "Sweep a carrier across the state; capacity None = unbounded");

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_readonly("values", &EnergyReport::values)
      .def_readonly("sites", &EnergyReport::sites)
      .def_readonly("e_infinity", &EnergyReport::e_infinity)
      .def_readonly("sites_infinity", &EnergyReport::sites_infinity);
  m.def("energy_profile", &energy_profile, py::arg("state"), py::arg("l_max"));
  m.def("energy_sites_predicted", &energy_sites_predicted, py::arg("seq"), py::arg("l"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("informational", &CheckResult::informational)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& r) {
        return std::string(r.passed ? "PASS " : "FAIL ") + r.name;
      });
  m.def(
      "run_verification",
      [](std::uint64_t seed, int count, int max_balls, int max_window, int steps,
         std::optional<BoxBallState> state, bool corrupt_r_step) {
        VerifyOptions opts;
        opts.corpus = {seed, count, max_balls, max_window};
        opts.steps = steps;
        opts.single_state = std::move(state);
        opts.corrupt_r_step = corrupt_r_step;
        return run_verification(opts);
      },
      py::arg("seed") = 42, py::arg("count") = 500, py::arg("max_balls") = 12,
      py::arg("max_window") = 40, py::arg("steps") = 20, py::arg("state") = std::nullopt,
      py::arg("corrupt_r_step") = false);
  m.def("all_passed", &all_passed, py::arg("results"));
}
