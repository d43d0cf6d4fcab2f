#include "legsat/moves.hpp"

namespace legsat {

FrontDiagram random_front(std::mt19937_64& rng, const RandomFrontOptions& opt) {
  auto uni = [&](int lo, int hi) {  // inclusive
    return lo + (int)(rng() % (uint64_t)(hi - lo + 1));
  };
  for (int attempt = 0; attempt < 4096; ++attempt) {
    FrontDiagram d;
    d.arity = opt.arity;
    int m = opt.arity, crossings = 0;
    std::vector<FrontEvent>& ev = d.events;
    while (true) {
      int remaining = opt.max_events - (int)ev.size();
      int need_to_close = (m - opt.arity) / 2;
      if (remaining <= need_to_close) break;
      if (m == 0) {
        if (!ev.empty() && uni(0, 2) == 0) break;  // done
        ev.push_back(ev_l(1));
        m += 2;
        continue;
      }
      int roll = uni(0, 9);
      if (m >= 2 && roll < 4 && crossings < opt.max_crossings) {
        ev.push_back(ev_x(uni(1, m - 1)));
        ++crossings;
      } else if (m >= 2 && roll < 7 && m > opt.arity) {
        ev.push_back(ev_r(uni(1, m - 1)));
        m -= 2;
      } else if (m <= 8) {
        ev.push_back(ev_l(uni(1, m + 1)));
        m += 2;
      }
    }
    while (m > opt.arity) {
      ev.push_back(ev_r(m >= 2 ? uni(1, m - 1) : 1));
      m -= 2;
    }
    if (ev.empty()) continue;
    try {
      auto v = validate(d);
      if (opt.require_knot && v.comps.n_components != 1) continue;
      d.orientations.assign(v.comps.n_components, '+');
      for (auto& o : d.orientations)
        if (rng() & 1) o = '-';
      validate(d);
      return d;
    } catch (const FrontError&) {
      continue;
    }
  }
  throw FrontError("random front generation failed");
}

}  // namespace legsat
