#pragma once

// Test-only Kauffman bracket / Jones polynomial for corpus sanity checks.
// The front's underlying diagram has one crossing per x event (descending
// strand in front); cusps are smooth turning points.

#include <map>

#include "legsat/front.hpp"

namespace legsat_test {

using Laurent = std::map<int, long long>;  // exponent of A -> coefficient

inline Laurent lmul(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline int loop_count(const legsat::FrontDiagram& base,
                      const std::vector<legsat::FrontEvent>& events) {
  legsat::FrontDiagram d;
  d.arity = base.arity;
  d.events = events;
  auto v = legsat::validate(d);
  return v.comps.n_components;
}

// Kauffman bracket of the underlying diagram.
inline Laurent bracket(const legsat::FrontDiagram& d) {
  std::vector<int> xidx;
  for (int i = 0; i < (int)d.events.size(); ++i)
    if (d.events[i].kind == legsat::EventKind::Crossing) xidx.push_back(i);
  int c = (int)xidx.size();
  Laurent total;
  for (int mask = 0; mask < (1 << c); ++mask) {
    std::vector<legsat::FrontEvent> ev;
    int a_count = 0;
    int xi = 0;
    for (int i = 0; i < (int)d.events.size(); ++i) {
      if (d.events[i].kind != legsat::EventKind::Crossing) {
        ev.push_back(d.events[i]);
        continue;
      }
      bool a_smoothing = (mask >> xi) & 1;
      ++xi;
      if (a_smoothing) {
        ++a_count;  // horizontal smoothing: strands pass without crossing
      } else {
        ev.push_back(legsat::ev_r(d.events[i].pos));
        ev.push_back(legsat::ev_l(d.events[i].pos));
      }
    }
    int loops = loop_count(d, ev);
    Laurent term{{2 * a_count - c + (c - a_count) * 0, 0}};
    // A^(a-b) * delta^(loops-1), delta = -A^2 - A^-2
    term = Laurent{{a_count - (c - a_count), 1}};
    Laurent delta{{2, -1}, {-2, -1}};
    for (int i = 1; i < loops; ++i) term = lmul(term, delta);
    for (auto [e, co] : term) total[e] += co;
  }
  for (auto it = total.begin(); it != total.end();)
    it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

// f = (-A^3)^(-writhe) * bracket; Jones V(t) with t = A^-4.
inline Laurent jones_in_A(const legsat::FrontDiagram& d) {
  auto inv = legsat::classical_invariants(d);
  int right_cusps = 0;
  for (auto& e : d.events)
    if (e.kind == legsat::EventKind::RightCusp) ++right_cusps;
  int writhe = inv.tb + right_cusps;
  Laurent f = bracket(d);
  Laurent unit{{-3 * writhe, (writhe % 2 == 0) ? 1LL : -1LL}};
  return lmul(f, unit);
}

// which A-exponents / coefficients: unknot {0:1}; right trefoil
// V = -t^4+t^3+t -> exponents {-16:-1,-12:1,-4:1}; figure eight
// V = t^2-t+1-t^-1+t^-2 -> {-8:1,-4:-1,0:1,4:-1,8:1}.
inline bool is_unknot_jones(const Laurent& j) { return j == Laurent{{0, 1}}; }
inline bool is_right_trefoil_jones(const Laurent& j) {
  return j == Laurent{{-16, -1}, {-12, 1}, {-4, 1}};
}
inline bool is_fig8_jones(const Laurent& j) {
  return j == Laurent{{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}};
}

}  // namespace legsat_test
