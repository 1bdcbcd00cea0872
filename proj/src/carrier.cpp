#include "boxball/carrier.hpp"

#include <stdexcept>

namespace boxball {

Carrier::Carrier(int capacity, int ones) : capacity_(capacity), ones_(ones) {
  if (capacity < 1) throw std::invalid_argument("carrier capacity must be >= 1");
  if (ones < 0 || ones > capacity) throw std::invalid_argument("carrier load out of range");
}

RStepResult r_step(const Carrier& c, Cell b) {
  if (b) {
    if (c.zeros() >= 1) return {0, Carrier(c.capacity(), c.ones() + 1), false};  // load
    return {1, c, false};  // full carrier passes the ball through
  }
  if (c.ones() >= 1) return {1, Carrier(c.capacity(), c.ones() - 1), true};  // unload, bump
  return {0, c, false};
}

TransferResult transfer_with(const BoxBallState& p, std::optional<int> capacity, RStepFn step) {
  const int n = p.ball_count();
  const int l = capacity.value_or(std::max(n, 1));
  Carrier c(l);
  const auto& window = p.window();
  std::vector<Cell> out;
  out.reserve(window.size() + static_cast<std::size_t>(n));
  std::vector<Position> sites;
  std::size_t idx = 0;
  while (idx < window.size() || c.ones() > 0) {
    if (idx > window.size() + static_cast<std::size_t>(n) + 1) {
      throw std::logic_error("carrier failed to drain");
    }
    const Cell b = idx < window.size() ? window[idx] : Cell{0};
    const RStepResult r = step(c, b);
    out.push_back(r.out);
    if (r.bumped) sites.push_back(p.offset() + static_cast<Position>(idx));
    c = r.carrier;
    ++idx;
  }
  TransferResult res;
  res.next = BoxBallState::from_cells(out, p.offset());
  res.energy = static_cast<int>(sites.size());
  res.sites = std::move(sites);
  return res;
}

TransferResult transfer(const BoxBallState& p, std::optional<int> capacity) {
  return transfer_with(p, capacity, &r_step);
}

EnergyReport energy_profile(const BoxBallState& p, int l_max) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  EnergyReport rep;
  for (int l = 1; l <= l_max; ++l) {
    TransferResult r = transfer(p, l);
    rep.values[l] = r.energy;
    rep.sites[l] = std::move(r.sites);
  }
  TransferResult inf = transfer(p, std::nullopt);
  rep.e_infinity = inf.energy;
  rep.sites_infinity = std::move(inf.sites);
  return rep;
}

std::vector<Position> energy_sites_predicted(const ParenSeq& seq, int l) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < seq.tokens().size(); ++i) {
    const Token& t = seq.tokens()[i];
    if (t.kind == TokenKind::Close && seq.pair(t.pair_id).depth <= l) {
      out.push_back(seq.position_of(i));
    }
  }
  return out;
}

}  // namespace boxball
