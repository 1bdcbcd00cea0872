#include "boxball/report.hpp"

#include <algorithm>

namespace boxball {

using nlohmann::json;

InvariantReport invariant_report(const BoxBallState& p0, int steps, int lmax) {
  InvariantReport rep;
  BoxBallState p = p0;
  for (int t = 0; t <= steps; ++t) {
    StepRecord rec;
    rec.t = t;
    rec.state = p;
    const ParenSeq seq = match_stack(p);
    rec.stack_perm = stack_permutation(seq);
    rec.p_shape = shape(p_symbol(rec.stack_perm.word));
    rec.depth_histogram = seq.depth_histogram();
    rec.energy = energy_profile(p, lmax);
    rep.steps.push_back(std::move(rec));
    if (t < steps) p = evolve_tts(p);
  }

  const auto flag = [&rep](const std::string& check, auto field) {
    Verdict v{check, true, ""};
    for (std::size_t t = 1; t < rep.steps.size(); ++t) {
      if (field(rep.steps[t]) != field(rep.steps[0])) {
        v.passed = false;
        v.detail = "state=" + rep.steps[0].state.text_at() + " step=" + std::to_string(t) +
                   " state_t=" + rep.steps[t].state.text_at();
        break;
      }
    }
    rep.verdicts.push_back(std::move(v));
  };
  flag("ball_count_conserved", [](const StepRecord& r) { return r.state.ball_count(); });
  flag("p_symbol_shape_conserved", [](const StepRecord& r) { return r.p_shape; });
  flag("depth_histogram_conserved", [](const StepRecord& r) { return r.depth_histogram; });
  flag("energy_conserved", [](const StepRecord& r) { return r.energy.values; });

  // Point the energy verdict at the first capacity that drifted.
  Verdict& energy_verdict = rep.verdicts.back();
  if (!energy_verdict.passed) {
    for (std::size_t t = 1; t < rep.steps.size(); ++t) {
      for (const auto& [l, e] : rep.steps[0].energy.values) {
        const auto it = rep.steps[t].energy.values.find(l);
        if (it == rep.steps[t].energy.values.end() || it->second != e) {
          energy_verdict.detail += " l=" + std::to_string(l);
          return rep;
        }
      }
    }
  }
  return rep;
}

json to_json(const BoxBallState& s) { return {{"text", s.text()}, {"offset", s.offset()}}; }

json to_json(const Partition& p) { return p.parts(); }

json to_json(const StackPermutation& w) { return w.word; }

json to_json(const ParenSeq& seq) {
  json pairs = json::array();
  for (const PairRecord& pr : seq.pairs()) {
    pairs.push_back({{"id", pr.pair_id},
                     {"open", seq.position_of(pr.open_pos)},
                     {"close", seq.position_of(pr.close_pos)},
                     {"depth", pr.depth}});
  }
  return {{"tokens", seq.token_text()}, {"base_offset", seq.base_offset()}, {"pairs", pairs}};
}

json to_json(const PermutationPoset& poset) {
  const auto& pts = poset.points();
  json points = json::array();
  for (const PosetPoint& pt : pts) points.push_back({pt.i, pt.j});
  json covers = json::array();
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b || !poset_less_eq(pts[a], pts[b])) continue;
      bool covering = true;
      for (std::size_t c = 0; c < pts.size() && covering; ++c) {
        if (c != a && c != b && poset_less_eq(pts[a], pts[c]) && poset_less_eq(pts[c], pts[b])) {
          covering = false;
        }
      }
      if (covering) covers.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
  }
  return {{"points", points}, {"covers", covers}};
}

json to_json(const Tableau& t) { return t.rows(); }

json to_json(const Walk& w) { return {{"anchor_x", w.anchor_x()}, {"steps", step_text(w)}}; }

json to_json(const EnergyReport& rep) {
  json values = json::object();
  for (const auto& [l, v] : rep.values) values[std::to_string(l)] = v;
  json sites = json::object();
  for (const auto& [l, s] : rep.sites) sites[std::to_string(l)] = s;
  return {{"E", values},
          {"sites", sites},
          {"E_inf", rep.e_infinity},
          {"sites_inf", rep.sites_infinity}};
}

json to_json(const StepRecord& rec) {
  return {{"t", rec.t},
          {"state", to_json(rec.state)},
          {"stack_permutation", to_json(rec.stack_perm)},
          {"p_shape", to_json(rec.p_shape)},
          {"depth_histogram", rec.depth_histogram},
          {"energy", to_json(rec.energy)}};
}

json to_json(const InvariantReport& rep) {
  json steps = json::array();
  for (const StepRecord& rec : rep.steps) steps.push_back(to_json(rec));
  json verdicts = json::array();
  for (const Verdict& v : rep.verdicts) {
    verdicts.push_back({{"check", v.check}, {"passed", v.passed}, {"detail", v.detail}});
  }
  return {{"steps", steps}, {"verdicts", verdicts}};
}

json to_json(const std::vector<CheckResult>& results) {
  json out = json::array();
  for (const CheckResult& r : results) {
    out.push_back({{"check", r.name},
                   {"passed", r.passed},
                   {"informational", r.informational},
                   {"detail", r.detail}});
  }
  return out;
}

BoxBallState state_from_json(const json& j) {
  return parse_state(j.at("text").get<std::string>(), j.at("offset").get<Position>());
}

EnergyReport energy_report_from_json(const json& j) {
  EnergyReport rep;
  for (const auto& [key, value] : j.at("E").items()) rep.values[std::stoi(key)] = value.get<int>();
  for (const auto& [key, value] : j.at("sites").items()) {
    rep.sites[std::stoi(key)] = value.get<std::vector<Position>>();
  }
  rep.e_infinity = j.at("E_inf").get<int>();
  rep.sites_infinity = j.at("sites_inf").get<std::vector<Position>>();
  return rep;
}

InvariantReport invariant_report_from_json(const json& j) {
  InvariantReport rep;
  for (const json& js : j.at("steps")) {
    StepRecord rec;
    rec.t = js.at("t").get<int>();
    rec.state = state_from_json(js.at("state"));
    rec.stack_perm.word = js.at("stack_permutation").get<std::vector<int>>();
    rec.p_shape = Partition(js.at("p_shape").get<std::vector<int>>());
    rec.depth_histogram = js.at("depth_histogram").get<std::vector<int>>();
    rec.energy = energy_report_from_json(js.at("energy"));
    rep.steps.push_back(std::move(rec));
  }
  for (const json& jv : j.at("verdicts")) {
    rep.verdicts.push_back({jv.at("check").get<std::string>(), jv.at("passed").get<bool>(),
                            jv.at("detail").get<std::string>()});
  }
  return rep;
}

}  // namespace boxball
