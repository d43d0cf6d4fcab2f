#include "legsat/construct.hpp"

#include <algorithm>
#include <cassert>

namespace legsat {

FrontDiagram stabilize(const FrontDiagram& d, int component, int sign, int gap,
                       int pos) {
  auto v = validate(d);
  if (sign != 1 && sign != -1) throw FrontError("stabilization sign must be +1/-1");
  if (gap < 0 || gap > (int)d.events.size()) throw FrontError("gap out of range");
  const auto& segs = v.sweep.gap_segments[gap];
  if (pos < 1 || pos > (int)segs.size()) throw FrontError("no strand at position");
  int seg = segs[pos - 1];
  if (v.comps.seg_component[seg] != component)
    throw FrontError("segment not on the named component");
  if (!segment_rightward(d, v.comps, seg))
    throw FrontError("segment traversed right-to-left");
  std::vector<FrontEvent> zig =
      sign > 0 ? std::vector<FrontEvent>{ev_l(pos + 1), ev_r(pos)}
               : std::vector<FrontEvent>{ev_l(pos), ev_r(pos + 1)};
  FrontDiagram out = d;
  out.events.insert(out.events.begin() + gap, zig.begin(), zig.end());
  out.basepoints.clear();
  auto anchors = collect_anchors(d, v);
  for (auto& a : anchors)
    if (a.gap > gap) a.gap += 2;
  return apply_direction_anchors(std::move(out), anchors);
}

FrontDiagram stabilize(const FrontDiagram& d, int component, int sign) {
  auto [gap, pos] = rightmost_rightward_site(d, component);
  return stabilize(d, component, sign, gap, pos);
}

namespace {

// crossing sequence sorting n freshly nested cusp pairs U1 D1 U2 D2 ... into
// U1..Un D1..Dn; offset o is the number of strands above the block
std::vector<FrontEvent> nest_sort_crossings(int o, int n) {
  std::vector<FrontEvent> out;
  for (int k = 2; k <= n; ++k)
    for (int j = 2 * k - 2; j >= k; --j) out.push_back(ev_x(o + j));
  return out;
}

}  // namespace

Expansion expand_component(const FrontDiagram& d, int component, int n,
                           bool mark_site) {
  if (n < 1) throw FrontError("copy count must be >= 1");
  auto v = validate(d);
  if (component < 0 || component >= v.comps.n_components)
    throw FrontError("component index out of range");
  int site_gap = -1, site_pos = -1;
  if (mark_site) {
    auto [g, p] = rightmost_rightward_site(d, component);
    site_gap = g;
    site_pos = p;
  }

  auto in_c = [&](int seg) { return v.comps.seg_component[seg] == component; };
  auto width = [&](int seg) { return in_c(seg) ? n : 1; };

  Expansion res;
  res.d.arity = 0;
  res.splice_gap = -1;
  res.splice_offset = -1;
  std::vector<FrontEvent>& out = res.d.events;

  // expanded arity
  for (int i = 0; i < d.arity; ++i)
    res.d.arity += width(v.sweep.gap_segments.front()[i]);

  auto offset_of = [&](const std::vector<int>& segs, int pos1based) {
    int o = 0;
    for (int i = 0; i < pos1based - 1; ++i) o += width(segs[i]);
    return o;
  };

  res.gap_map.assign(d.events.size() + 1, 0);
  res.gap_map[0] = 0;
  if (mark_site && site_gap == 0)
    res.splice_offset = offset_of(v.sweep.gap_segments[0], site_pos);

  for (int k = 0; k < (int)d.events.size(); ++k) {
    const auto& e = d.events[k];
    const auto& pre = v.sweep.gap_segments[k];
    auto [su, sv] = v.sweep.event_segments[k];
    switch (e.kind) {
      case EventKind::LeftCusp: {
        int o = offset_of(pre, e.pos);
        if (!in_c(su)) {
          out.push_back(ev_l(o + 1));
        } else {
          for (int c = 1; c <= n; ++c) out.push_back(ev_l(o + 2 * c - 1));
          auto xs = nest_sort_crossings(o, n);
          out.insert(out.end(), xs.begin(), xs.end());
        }
        break;
      }
      case EventKind::RightCusp: {
        int o = offset_of(pre, e.pos);
        if (!in_c(su)) {
          out.push_back(ev_r(o + 1));
        } else {
          auto xs = nest_sort_crossings(o, n);
          std::reverse(xs.begin(), xs.end());
          out.insert(out.end(), xs.begin(), xs.end());
          for (int c = 1; c <= n; ++c) out.push_back(ev_r(o + 1));
        }
        break;
      }
      case EventKind::Crossing: {
        int o = offset_of(pre, e.pos);
        bool au = in_c(su), av = in_c(sv);
        if (!au && !av) {
          out.push_back(ev_x(o + 1));
        } else if (au && !av) {
          for (int j = n; j >= 1; --j) out.push_back(ev_x(o + j));
        } else if (!au && av) {
          for (int j = 1; j <= n; ++j) out.push_back(ev_x(o + j));
        } else {
          for (int j = 1; j <= n; ++j)
            for (int i = n + j - 1; i >= j; --i) out.push_back(ev_x(o + i));
        }
        break;
      }
    }
    res.gap_map[k + 1] = (int)out.size();
    if (mark_site && site_gap == k + 1)
      res.splice_offset = offset_of(v.sweep.gap_segments[k + 1], site_pos);
  }
  if (mark_site) res.splice_gap = res.gap_map[site_gap];

  // orientations: copies inherit the original direction; other components
  // keep theirs.  Anchor every original component at its first appearance.
  std::vector<DirectionAnchor> anchors;
  {
    std::vector<char> have(v.comps.n_components, 0);
    int found = 0;
    for (int gap = 0; gap <= (int)d.events.size() && found < v.comps.n_components;
         ++gap) {
      const auto& segs = v.sweep.gap_segments[gap];
      for (int p = 0; p < (int)segs.size(); ++p) {
        int comp = v.comps.seg_component[segs[p]];
        if (have[comp]) continue;
        have[comp] = 1;
        ++found;
        bool right = segment_rightward(d, v.comps, segs[p]);
        int o = offset_of(segs, p + 1);
        int w = width(segs[p]);
        for (int c = 1; c <= w; ++c)
          anchors.push_back({res.gap_map[gap], o + c, right});
      }
    }
  }
  res.d = apply_direction_anchors(std::move(res.d), anchors);
  return res;
}

FrontDiagram n_copy(const FrontDiagram& d, int component, int n) {
  if (d.arity != 0) throw FrontError("n-copy requires an R^3 diagram");
  return expand_component(d, component, n, false).d;
}

FrontDiagram satellite(const FrontDiagram& L, int component, const TorusPattern& P) {
  if (L.arity != 0) throw FrontError("satellite companion must be an R^3 diagram");
  auto pv = validate(P.diagram);
  int n = P.diagram.arity;
  if (n < 1) throw FrontError("pattern must have arity >= 1");

  Expansion ex = expand_component(L, component, n, true);
  FrontDiagram out = ex.d;
  int G = ex.splice_gap, O = ex.splice_offset;

  std::vector<FrontEvent> spliced;
  for (const auto& e : P.diagram.events) spliced.push_back({e.kind, e.pos + O});
  out.events.insert(out.events.begin() + G, spliced.begin(), spliced.end());
  out.basepoints.clear();

  // anchors: pattern strand directions at the pattern's left edge pin the
  // spliced components; components of L away from the companion keep theirs.
  std::vector<DirectionAnchor> anchors;
  for (int i = 0; i < n; ++i) {
    int seg = pv.sweep.gap_segments.front()[i];
    anchors.push_back({G, O + i + 1, segment_rightward(P.diagram, pv.comps, seg)});
  }
  {
    auto lv = validate(L);
    std::vector<char> have(lv.comps.n_components, 0);
    int found = 0;
    for (int gap = 0; gap <= (int)L.events.size() && found < lv.comps.n_components;
         ++gap) {
      const auto& segs = lv.sweep.gap_segments[gap];
      int o = 0;
      for (int p = 0; p < (int)segs.size(); ++p) {
        int comp = lv.comps.seg_component[segs[p]];
        int w = comp == component ? n : 1;
        if (comp != component && !have[comp]) {
          have[comp] = 1;
          ++found;
          int g2 = ex.gap_map[gap];
          if (g2 > G) g2 += (int)spliced.size();
          anchors.push_back(
              {g2, o + 1, segment_rightward(L, lv.comps, segs[p])});
        }
        o += w;
      }
    }
  }
  return apply_direction_anchors(std::move(out), anchors);
}

FrontDiagram whitehead_double(const FrontDiagram& K) {
  auto v = validate(K);
  if (v.comps.n_components != 1) throw FrontError("Whitehead double requires a knot");
  return satellite(K, 0, pattern("W", 0));
}

TorusPattern pattern(const std::string& name, int parameter) {
  TorusPattern p;
  if (name == "n-strands") {
    if (parameter < 1) throw FrontError("n-strands parameter must be >= 1");
    p.diagram.arity = parameter;
    p.diagram.orientations.assign(parameter, '+');
    p.name = "n-strands-" + std::to_string(parameter);
  } else if (name == "S") {
    if (parameter < 1) throw FrontError("S pattern parameter must be >= 1");
    FrontDiagram zig;
    zig.arity = 1;
    zig.events = {ev_l(2), ev_r(1)};
    zig.orientations = {'+'};
    p.diagram = expand_component(zig, 0, parameter, false).d;
    p.name = "S-" + std::to_string(parameter);
  } else if (name == "W") {
    if (parameter < 0) throw FrontError("W pattern parameter must be >= 0");
    FrontDiagram w;
    w.arity = 2;
    for (int i = 0; i < 2 * parameter; ++i) w.events.push_back(ev_x(1));
    w.events.push_back(ev_l(2));
    w.events.push_back(ev_x(1));
    w.events.push_back(ev_x(3));
    w.events.push_back(ev_r(2));
    w.orientations = {'+'};
    p.diagram = w;
    p.name = "W-" + std::to_string(2 * parameter);
  } else {
    throw FrontError("unknown pattern name: " + name);
  }
  validate(p.diagram);
  return p;
}

}  // namespace legsat
