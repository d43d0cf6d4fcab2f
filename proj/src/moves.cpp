#include "legsat/moves.hpp"

#include <algorithm>
#include <cassert>

namespace legsat {

namespace {

constexpr long kTop = -1, kBot = -2;

// Row-identity simulation used to commute events generically.
struct RowSim {
  std::vector<long> rows;
  long next = 0;
  explicit RowSim(int m) {
    for (int i = 0; i < m; ++i) rows.push_back(next++);
  }
  // returns ids created (l) or touched (r/x)
  std::pair<long, long> apply(const FrontEvent& e) {
    int i = e.pos;
    switch (e.kind) {
      case EventKind::LeftCusp: {
        long a = next++, b = next++;
        rows.insert(rows.begin() + (i - 1), {a, b});
        return {a, b};
      }
      case EventKind::RightCusp: {
        long a = rows[i - 1], b = rows[i];
        rows.erase(rows.begin() + (i - 1), rows.begin() + (i + 1));
        return {a, b};
      }
      case EventKind::Crossing: {
        long a = rows[i - 1], b = rows[i];
        std::swap(rows[i - 1], rows[i]);
        return {a, b};
      }
    }
    return {0, 0};
  }
  int find(long id) const {
    for (int i = 0; i < (int)rows.size(); ++i)
      if (rows[i] == id) return i;
    return -1;
  }
};

// The anchor of an event in a given row list: for r/x the two ids acted on;
// for l the (above, below) ids around the insertion gap.
std::pair<long, long> event_anchor(const std::vector<long>& rows, const FrontEvent& e) {
  int i = e.pos;
  if (e.kind == EventKind::LeftCusp) {
    long above = i >= 2 ? rows[i - 2] : kTop;
    long below = i - 1 < (int)rows.size() ? rows[i - 1] : kBot;
    return {above, below};
  }
  return {rows[i - 1], rows[i]};
}

// Given a row list, find the position an event with this anchor acts at;
// returns 0 if the anchor ids are not adjacent there.
int anchor_position(const std::vector<long>& rows, EventKind kind,
                    std::pair<long, long> anchor) {
  auto [a, b] = anchor;
  if (kind == EventKind::LeftCusp) {
    if (a == kTop) {
      if (rows.empty()) return b == kBot ? 1 : 0;
      return rows.front() == b ? 1 : (b == kBot && rows.empty() ? 1 : 0);
    }
    if (b == kBot) return !rows.empty() && rows.back() == a ? (int)rows.size() + 1 : 0;
    for (int i = 0; i + 1 < (int)rows.size(); ++i)
      if (rows[i] == a && rows[i + 1] == b) return i + 2;
    return 0;
  }
  for (int i = 0; i + 1 < (int)rows.size(); ++i)
    if (rows[i] == a && rows[i + 1] == b) return i + 1;
  return 0;
}

}  // namespace

std::optional<std::pair<FrontEvent, FrontEvent>> commute_events(
    int strands_before, const FrontEvent& a, const FrontEvent& b) {
  RowSim sim(strands_before);
  std::vector<long> rows0 = sim.rows;
  auto a_anchor = event_anchor(rows0, a);
  auto created = sim.apply(a);
  auto b_anchor = event_anchor(sim.rows, b);
  if (a.kind == EventKind::LeftCusp) {
    // b must not touch the strands a created
    if (b_anchor.first == created.first || b_anchor.first == created.second ||
        b_anchor.second == created.first || b_anchor.second == created.second)
      return std::nullopt;
  }
  int bpos = anchor_position(rows0, b.kind, b_anchor);
  if (bpos == 0) return std::nullopt;
  FrontEvent b2{b.kind, bpos};
  RowSim sim2((int)rows0.size());
  sim2.rows = rows0;
  sim2.next = 1 << 20;  // fresh ids distinct from originals
  sim2.apply(b2);
  if (b2.kind == EventKind::LeftCusp) {
    // a must not act on strands b created (cannot happen: a predates them),
    // but a's anchor gap may have been split by b's insertion; recheck below.
  }
  int apos = anchor_position(sim2.rows, a.kind, a_anchor);
  if (apos == 0) {
    // special case: both insert into the same gap region but disjointly is
    // impossible, so reject
    if (a.kind != EventKind::LeftCusp) return std::nullopt;
    // a's gap anchor may involve b-created rows only when gaps interleave;
    // reject those
    return std::nullopt;
  }
  return std::make_pair(b2, FrontEvent{a.kind, apos});
}

namespace {

struct Pattern {
  std::vector<FrontEvent> lhs, rhs;
};

// Rewrite patterns for a move whose transverse strand sits at position p.
// The cusp moves trade the strand crossing both cusp branches for the strand
// clear of the cusp; one crossing with each branch keeps the writhe balanced.
std::vector<Pattern> move_patterns(MoveType t, int p) {
  switch (t) {
    case MoveType::I:
      return {{{ev_l(p + 1), ev_x(p), ev_r(p + 1)}, {}}};
    case MoveType::IMirror:
      return {{{ev_l(p), ev_x(p + 1), ev_r(p)}, {}}};
    case MoveType::IIa:
      return {{{ev_l(p + 1), ev_x(p), ev_x(p + 1)}, {ev_l(p)}},
              {{ev_l(p)}, {ev_l(p + 1), ev_x(p), ev_x(p + 1)}},
              {{ev_l(p), ev_x(p + 1), ev_x(p)}, {ev_l(p + 1)}},
              {{ev_l(p + 1)}, {ev_l(p), ev_x(p + 1), ev_x(p)}}};
    case MoveType::IIb:
      return {{{ev_x(p + 1), ev_x(p), ev_r(p + 1)}, {ev_r(p)}},
              {{ev_r(p)}, {ev_x(p + 1), ev_x(p), ev_r(p + 1)}},
              {{ev_x(p), ev_x(p + 1), ev_r(p)}, {ev_r(p + 1)}},
              {{ev_r(p + 1)}, {ev_x(p), ev_x(p + 1), ev_r(p)}}};
    case MoveType::III:
      return {{{ev_x(p), ev_x(p + 1), ev_x(p)}, {ev_x(p + 1), ev_x(p), ev_x(p + 1)}},
              {{ev_x(p + 1), ev_x(p), ev_x(p + 1)}, {ev_x(p), ev_x(p + 1), ev_x(p)}}};
  }
  return {};
}

bool match_at(const FrontDiagram& d, int site, const std::vector<FrontEvent>& pat) {
  if (site + (int)pat.size() > (int)d.events.size()) return false;
  for (int i = 0; i < (int)pat.size(); ++i)
    if (!(d.events[site + i] == pat[i])) return false;
  return true;
}

// Shifts anchor gaps across a rewrite window and reapplies them.
FrontDiagram finish_rewrite(FrontDiagram out, std::vector<DirectionAnchor> anchors,
                            int old_win_begin, int delta_events) {
  for (auto& a : anchors)
    if (a.gap > old_win_begin) a.gap += delta_events;
  return apply_direction_anchors(std::move(out), anchors);
}

}  // namespace

FrontDiagram apply_move(const FrontDiagram& d, MoveType type, int site) {
  auto v = validate(d);
  if (site < 0 || site >= (int)d.events.size())
    throw FrontError("move site out of range", site);
  int mmax = (int)v.sweep.gap_segments[site].size() + 2;
  std::vector<Pattern> candidates;
  for (int p = 1; p <= mmax; ++p)
    for (const auto& pat : move_patterns(type, p)) candidates.push_back(pat);
  // prefer reducing rewrites so that applying a move twice round-trips
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Pattern& a, const Pattern& b) {
                     return a.lhs.size() > b.lhs.size();
                   });
  {
    for (const auto& pat : candidates) {
      if (!match_at(d, site, pat.lhs)) continue;
      FrontDiagram out = d;
      out.events.erase(out.events.begin() + site,
                       out.events.begin() + site + (int)pat.lhs.size());
      out.events.insert(out.events.begin() + site, pat.rhs.begin(), pat.rhs.end());
      out.basepoints.clear();
      int win_end = site + (int)pat.lhs.size();
      auto anchors = collect_anchors(d, v, site, win_end);
      try {
        return finish_rewrite(std::move(out), anchors, site,
                              (int)pat.rhs.size() - (int)pat.lhs.size());
      } catch (const FrontError&) {
        continue;  // pattern matched syntactically but produced invalid word
      }
    }
  }
  throw FrontError("move pattern mismatch at site", site);
}

FrontDiagram insert_kink(const FrontDiagram& d, MoveType type, int gap, int pos) {
  if (type != MoveType::I && type != MoveType::IMirror)
    throw FrontError("insert_kink requires move I or I-mirror");
  auto v = validate(d);
  if (gap < 0 || gap > (int)d.events.size()) throw FrontError("gap out of range");
  if (pos < 1 || pos > (int)v.sweep.gap_segments[gap].size())
    throw FrontError("no strand at kink position");
  std::vector<FrontEvent> kink = type == MoveType::I
                                     ? std::vector<FrontEvent>{ev_l(pos + 1), ev_x(pos),
                                                               ev_r(pos + 1)}
                                     : std::vector<FrontEvent>{ev_l(pos), ev_x(pos + 1),
                                                               ev_r(pos)};
  FrontDiagram out = d;
  out.events.insert(out.events.begin() + gap, kink.begin(), kink.end());
  out.basepoints.clear();
  auto anchors = collect_anchors(d, v, gap, gap);
  return finish_rewrite(std::move(out), anchors, gap, 3);
}

FrontDiagram apply(const FrontDiagram& d, const MoveApplication& m) {
  return m.insertion ? insert_kink(d, m.type, m.site, m.pos)
                     : apply_move(d, m.type, m.site);
}

std::vector<MoveApplication> enumerate_applicable(const FrontDiagram& d,
                                                  bool include_insertions) {
  auto v = validate(d);
  std::vector<MoveApplication> out;
  for (int site = 0; site < (int)d.events.size(); ++site) {
    int mmax = (int)v.sweep.gap_segments[site].size() + 2;
    for (MoveType t : {MoveType::I, MoveType::IMirror, MoveType::IIa, MoveType::IIb,
                       MoveType::III}) {
      bool hit = false;
      for (int p = 1; p <= mmax && !hit; ++p)
        for (const auto& pat : move_patterns(t, p))
          if (match_at(d, site, pat.lhs)) {
            // verify it produces a valid diagram
            try {
              apply_move(d, t, site);
              out.push_back({t, false, site, 0});
            } catch (const FrontError&) {
            }
            hit = true;
            break;
          }
    }
  }
  if (include_insertions) {
    for (int gap = 0; gap <= (int)d.events.size(); ++gap)
      for (int pos = 1; pos <= (int)v.sweep.gap_segments[gap].size(); ++pos)
        for (MoveType t : {MoveType::I, MoveType::IMirror})
          out.push_back({t, true, gap, pos});
  }
  return out;
}

FrontDiagram random_moves(const FrontDiagram& d, int count, uint64_t seed,
                          std::vector<MoveApplication>* log) {
  std::mt19937_64 rng(seed);
  FrontDiagram cur = d;
  for (int step = 0; step < count; ++step) {
    // keep diagrams from growing without bound
    bool allow_growth = (int)cur.events.size() < (int)d.events.size() + 10;
    auto apps = enumerate_applicable(cur, allow_growth);
    FrontDiagram next;
    bool found = false;
    while (!apps.empty()) {
      std::uniform_int_distribution<size_t> pick(0, apps.size() - 1);
      size_t i = pick(rng);
      const auto m = apps[i];
      next = apply(cur, m);
      if (allow_growth || next.events.size() <= cur.events.size()) {
        if (log) log->push_back(m);
        found = true;
        break;
      }
      apps.erase(apps.begin() + i);
    }
    if (!found) break;
    cur = std::move(next);
  }
  return cur;
}

namespace {

bool event_less(const FrontEvent& a, const FrontEvent& b) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return (int)a.kind < (int)b.kind;
}

}  // namespace

FrontDiagram canonical_planar_form(const FrontDiagram& d) {
  validate(d);
  std::vector<FrontEvent> rest = d.events;
  std::vector<FrontEvent> out;
  int m_front = d.arity;
  while (!rest.empty()) {
    int best = -1;
    FrontEvent best_ev{EventKind::LeftCusp, 0};
    for (int k = 0; k < (int)rest.size(); ++k) {
      // can rest[k] bubble to the front?
      FrontEvent ev = rest[k];
      bool ok = true;
      // walk backwards over predecessors
      std::vector<FrontEvent> pre(rest.begin(), rest.begin() + k);
      for (int j = k - 1; j >= 0 && ok; --j) {
        // strand count before pre[j]
        int m = m_front;
        for (int i = 0; i < j; ++i) {
          if (pre[i].kind == EventKind::LeftCusp) m += 2;
          if (pre[i].kind == EventKind::RightCusp) m -= 2;
        }
        auto swapped = commute_events(m, pre[j], ev);
        if (!swapped) {
          ok = false;
        } else {
          ev = swapped->first;
        }
      }
      if (ok && (best < 0 || event_less(ev, best_ev))) {
        best = k;
        best_ev = ev;
      }
    }
    assert(best >= 0);
    out.push_back(best_ev);
    // commute the chosen event to the front; keep the adjusted remainder
    {
      std::vector<FrontEvent> seq(rest.begin(), rest.begin() + best + 1);
      for (int j = best - 1; j >= 0; --j) {
        int m = m_front;
        for (int i = 0; i < j; ++i) {
          if (seq[i].kind == EventKind::LeftCusp) m += 2;
          if (seq[i].kind == EventKind::RightCusp) m -= 2;
        }
        auto swapped = commute_events(m, seq[j], seq[j + 1]);
        assert(swapped);
        seq[j] = swapped->first;
        seq[j + 1] = swapped->second;
      }
      std::vector<FrontEvent> new_rest(seq.begin() + 1, seq.end());
      new_rest.insert(new_rest.end(), rest.begin() + best + 1, rest.end());
      rest = std::move(new_rest);
    }
    if (out.back().kind == EventKind::LeftCusp) m_front += 2;
    if (out.back().kind == EventKind::RightCusp) m_front -= 2;
  }
  FrontDiagram res = d;
  res.events = std::move(out);
  res.basepoints.clear();
  // reuse anchor machinery is unnecessary: canonical form is used for word
  // comparisons only; orientations re-derived canonically
  auto v = validate(res);
  res.orientations.assign(v.comps.n_components, '+');
  // preserve orientation by matching segment directions at the left gap or
  // via component order: words being compared carry their own orientations
  if (!d.orientations.empty() && d.orientations.size() == res.orientations.size())
    res.orientations = d.orientations;
  return res;
}

}  // namespace legsat
