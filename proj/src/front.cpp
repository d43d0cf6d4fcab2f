#include "legsat/front.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <sstream>

namespace legsat {

namespace {

const char* kind_name(EventKind k) {
  switch (k) {
    case EventKind::LeftCusp: return "l";
    case EventKind::RightCusp: return "r";
    case EventKind::Crossing: return "x";
  }
  return "?";
}

// union-find with direction parity (0 = same direction class)
struct ParityUF {
  std::vector<int> parent, rank_, par;
  explicit ParityUF(int n) : parent(n), rank_(n, 0), par(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int a) {
    if (parent[a] == a) return {a, 0};
    auto [r, p] = find(parent[a]);
    parent[a] = r;
    par[a] ^= p;
    return {r, par[a]};
  }
  // declare parity(a) xor parity(b) == p; returns false on conflict
  bool unite(int a, int b, int p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == p;
    if (rank_[ra] < rank_[rb]) { std::swap(ra, rb); std::swap(pa, pb); }
    parent[rb] = ra;
    par[rb] = pa ^ pb ^ p;
    if (rank_[ra] == rank_[rb]) rank_[ra]++;
    return true;
  }
};

}  // namespace

int FrontDiagram::strand_count_at_gap(int gap) const {
  int m = arity;
  for (int k = 0; k < gap && k < (int)events.size(); ++k) {
    switch (events[k].kind) {
      case EventKind::LeftCusp: m += 2; break;
      case EventKind::RightCusp: m -= 2; break;
      case EventKind::Crossing: break;
    }
  }
  return m;
}

SweepInfo sweep(const FrontDiagram& d) {
  SweepInfo s;
  std::vector<int> cur;  // segment id per position
  auto fresh = [&]() {
    int id = s.n_segments++;
    s.birth_order.push_back(id);
    return id;
  };
  for (int i = 0; i < d.arity; ++i) cur.push_back(fresh());
  s.gap_segments.push_back(cur);
  for (int k = 0; k < (int)d.events.size(); ++k) {
    const FrontEvent& e = d.events[k];
    int m = (int)cur.size();
    switch (e.kind) {
      case EventKind::LeftCusp: {
        if (e.pos < 1 || e.pos > m + 1)
          throw FrontError("left cusp position out of range", k);
        int u = fresh(), v = fresh();
        cur.insert(cur.begin() + (e.pos - 1), {u, v});
        s.event_segments.push_back({u, v});
        break;
      }
      case EventKind::RightCusp: {
        if (m < 2 || e.pos < 1 || e.pos > m - 1)
          throw FrontError("right cusp position out of range", k);
        int u = cur[e.pos - 1], v = cur[e.pos];
        cur.erase(cur.begin() + (e.pos - 1), cur.begin() + (e.pos + 1));
        s.event_segments.push_back({u, v});
        break;
      }
      case EventKind::Crossing: {
        if (m < 2 || e.pos < 1 || e.pos > m - 1)
          throw FrontError("crossing position out of range", k);
        s.event_segments.push_back({cur[e.pos - 1], cur[e.pos]});
        std::swap(cur[e.pos - 1], cur[e.pos]);
        break;
      }
    }
    s.gap_segments.push_back(cur);
  }
  if ((int)cur.size() != d.arity)
    throw FrontError(d.arity == 0 ? "open ends: closed diagram must end with 0 strands"
                                  : "open ends: strand count at right edge differs from arity",
                     (int)d.events.size() - 1);
  return s;
}

ComponentInfo components(const FrontDiagram& d, const SweepInfo& s) {
  ParityUF uf(s.n_segments);
  for (int k = 0; k < (int)d.events.size(); ++k) {
    const auto& e = d.events[k];
    if (e.kind == EventKind::Crossing) continue;
    auto [u, v] = s.event_segments[k];
    // cusp branches are traversed in opposite horizontal directions
    if (!uf.unite(u, v, 1))
      throw FrontError("orientation inconsistency at cusp", k);
  }
  if (d.arity > 0) {
    const auto& left = s.gap_segments.front();
    const auto& right = s.gap_segments.back();
    for (int i = 0; i < d.arity; ++i)
      if (!uf.unite(left[i], right[i], 0))
        throw FrontError("orientation inconsistency through torus gluing",
                         (int)d.events.size() - 1);
  }
  ComponentInfo c;
  c.seg_component.assign(s.n_segments, -1);
  c.seg_parity.assign(s.n_segments, 0);
  std::map<int, int> root_to_comp;
  for (int seg = 0; seg < s.n_segments; ++seg) {  // segment ids are in birth order
    auto [root, parity] = uf.find(seg);
    auto it = root_to_comp.find(root);
    if (it == root_to_comp.end()) {
      it = root_to_comp.emplace(root, c.n_components++).first;
      c.ref_segment.push_back(seg);
    }
    c.seg_component[seg] = it->second;
    c.seg_parity[seg] = parity;
  }
  // normalize parity so the reference segment has parity 0
  std::vector<int> ref_par(c.n_components, 0);
  for (int comp = 0; comp < c.n_components; ++comp) {
    auto [root, parity] = uf.find(c.ref_segment[comp]);
    (void)root;
    ref_par[comp] = parity;
  }
  for (int seg = 0; seg < s.n_segments; ++seg)
    c.seg_parity[seg] ^= ref_par[c.seg_component[seg]];
  return c;
}

Validated validate(const FrontDiagram& d) {
  Validated v{sweep(d), {}};
  v.comps = components(d, v.sweep);
  if (!d.orientations.empty() && (int)d.orientations.size() != v.comps.n_components)
    throw FrontError("orientation list does not match component count");
  for (char o : d.orientations)
    if (o != '+' && o != '-') throw FrontError("bad orientation flag");
  for (const auto& b : d.basepoints) {
    if (b.component < 0 || b.component >= v.comps.n_components)
      throw FrontError("basepoint component out of range");
    if (b.gap < 0 || b.gap > (int)d.events.size())
      throw FrontError("basepoint gap out of range");
    const auto& segs = v.sweep.gap_segments[b.gap];
    if (b.pos < 1 || b.pos > (int)segs.size())
      throw FrontError("basepoint off-diagram: no strand at that position");
    if (v.comps.seg_component[segs[b.pos - 1]] != b.component)
      throw FrontError("basepoint strand belongs to a different component");
  }
  return v;
}

bool segment_rightward(const FrontDiagram& d, const ComponentInfo& c, int seg) {
  char flag = '+';
  int comp = c.seg_component[seg];
  if (!d.orientations.empty()) flag = d.orientations[comp];
  bool plus = (flag == '+');
  return (c.seg_parity[seg] == 0) == plus;
}

namespace {

// cusp is "down" when traversed from upper branch to lower branch:
// right cusp with upper branch moving rightward, or left cusp with upper
// branch moving leftward.
bool cusp_is_down(const FrontDiagram& d, const ComponentInfo& c, EventKind kind,
                  int upper_seg) {
  bool upper_right = segment_rightward(d, c, upper_seg);
  return kind == EventKind::RightCusp ? upper_right : !upper_right;
}

}  // namespace

int thurston_bennequin(const FrontDiagram& d, const std::set<int>& comps) {
  if (comps.empty()) throw FrontError("empty component subset");
  auto v = validate(d);
  int writhe = 0, right_cusps = 0;
  for (int k = 0; k < (int)d.events.size(); ++k) {
    auto [u, w] = v.sweep.event_segments[k];
    int cu = v.comps.seg_component[u], cw = v.comps.seg_component[w];
    switch (d.events[k].kind) {
      case EventKind::Crossing:
        if (comps.count(cu) && comps.count(cw))
          writhe += segment_rightward(d, v.comps, u) == segment_rightward(d, v.comps, w)
                        ? 1
                        : -1;
        break;
      case EventKind::RightCusp:
        if (comps.count(cu)) right_cusps += 1;
        break;
      default: break;
    }
  }
  return writhe - right_cusps;
}

int rotation(const FrontDiagram& d, int component) {
  auto v = validate(d);
  if (component < 0 || component >= v.comps.n_components)
    throw FrontError("component index out of range");
  int down_minus_up = 0;
  for (int k = 0; k < (int)d.events.size(); ++k) {
    if (d.events[k].kind == EventKind::Crossing) continue;
    auto [u, w] = v.sweep.event_segments[k];
    (void)w;
    if (v.comps.seg_component[u] != component) continue;
    down_minus_up += cusp_is_down(d, v.comps, d.events[k].kind, u) ? 1 : -1;
  }
  if (down_minus_up % 2 != 0) throw FrontError("odd cusp imbalance (internal)");
  return down_minus_up / 2;
}

int winding(const FrontDiagram& d) {
  if (d.arity < 1) throw FrontError("winding number requires a solid-torus diagram");
  auto v = validate(d);
  int w = 0;
  for (int i = 0; i < d.arity; ++i) {
    int seg = v.sweep.gap_segments.front()[i];
    w += segment_rightward(d, v.comps, seg) ? 1 : -1;
  }
  return w;
}

ClassicalInvariants classical_invariants(const FrontDiagram& d) {
  auto v = validate(d);
  ClassicalInvariants inv;
  std::set<int> all;
  for (int i = 0; i < v.comps.n_components; ++i) all.insert(i);
  inv.tb = thurston_bennequin(d, all);
  for (int i = 0; i < v.comps.n_components; ++i) inv.r.push_back(rotation(d, i));
  if (d.arity >= 1) inv.w = winding(d);
  return inv;
}

MaslovAssignment maslov_potential(const FrontDiagram& d) {
  auto v = validate(d);
  MaslovAssignment m;
  m.potential.assign(v.sweep.n_segments, 0);
  m.modulus.assign(v.comps.n_components, 0);
  for (int comp = 0; comp < v.comps.n_components; ++comp)
    m.modulus[comp] = 2 * std::abs(rotation(d, comp));

  // relation edges: mu(u) = mu(v) + delta
  struct Edge { int to; int delta; };
  std::vector<std::vector<Edge>> adj(v.sweep.n_segments);
  auto add = [&](int a, int b, int delta) {
    adj[a].push_back({b, delta});   // mu(a) = mu(b) + delta
    adj[b].push_back({a, -delta});
  };
  for (int k = 0; k < (int)d.events.size(); ++k) {
    if (d.events[k].kind == EventKind::Crossing) continue;
    auto [u, w] = v.sweep.event_segments[k];
    add(u, w, 1);  // upper = lower + 1 at every cusp
  }
  if (d.arity > 0)
    for (int i = 0; i < d.arity; ++i)
      add(v.sweep.gap_segments.front()[i], v.sweep.gap_segments.back()[i], 0);

  std::vector<char> seen(v.sweep.n_segments, 0);
  for (int comp = 0; comp < v.comps.n_components; ++comp) {
    // base strand: lower branch of the component's first cusp pair, so the
    // flying-saucer unknot gets potentials (upper, lower) = (1, 0)
    int base = v.comps.ref_segment[comp];
    for (int k = 0; k < (int)d.events.size(); ++k) {
      if (d.events[k].kind != EventKind::LeftCusp) continue;
      if (v.sweep.event_segments[k].first == base) {
        base = v.sweep.event_segments[k].second;
        break;
      }
    }
    std::vector<int> queue{base};
    seen[base] = 1;
    m.potential[base] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int a = queue[qi];
      for (const Edge& e : adj[a]) {
        int want = m.potential[a] - e.delta;  // mu(a) = mu(to) + delta
        if (!seen[e.to]) {
          seen[e.to] = 1;
          m.potential[e.to] = want;
          queue.push_back(e.to);
        } else {
          int defect = m.potential[e.to] - want;
          int mod = m.modulus[comp];
          if (mod == 0 ? defect != 0 : defect % mod != 0)
            throw FrontError("Maslov potential inconsistency (internal)");
        }
      }
    }
  }
  return m;
}

FrontDiagram reverse_orientation(const FrontDiagram& d, int component) {
  auto v = validate(d);
  FrontDiagram out = d;
  if (out.orientations.empty()) out.orientations.assign(v.comps.n_components, '+');
  if (component < 0 || component >= v.comps.n_components)
    throw FrontError("component index out of range");
  out.orientations[component] = out.orientations[component] == '+' ? '-' : '+';
  return out;
}

std::vector<ResolvedBasepoint> resolve_basepoints(const FrontDiagram& d) {
  auto v = validate(d);
  std::vector<ResolvedBasepoint> out;
  std::vector<char> have(v.comps.n_components, 0);
  for (const auto& b : d.basepoints) {
    out.push_back({b.component, false, -1, b.gap, b.pos});
    have[b.component] = 1;
  }
  for (int comp = 0; comp < v.comps.n_components; ++comp) {
    if (have[comp]) continue;
    // default: the loop of the component's rightmost down right cusp;
    // fall back to its rightmost right cusp, then to the first segment.
    int best = -1, best_down = -1;
    for (int k = 0; k < (int)d.events.size(); ++k) {
      if (d.events[k].kind != EventKind::RightCusp) continue;
      auto [u, w] = v.sweep.event_segments[k];
      (void)w;
      if (v.comps.seg_component[u] != comp) continue;
      best = k;
      if (cusp_is_down(d, v.comps, EventKind::RightCusp, u)) best_down = k;
    }
    int pick = best_down >= 0 ? best_down : best;
    if (pick >= 0) {
      out.push_back({comp, true, pick, -1, -1});
    } else {
      // through strand: place on the leftmost gap position of the component
      const auto& g0 = v.sweep.gap_segments.front();
      for (int i = 0; i < (int)g0.size(); ++i)
        if (v.comps.seg_component[g0[i]] == comp) {
          out.push_back({comp, false, -1, 0, i + 1});
          break;
        }
    }
  }
  return out;
}

std::vector<DirectionAnchor> collect_anchors(const FrontDiagram& d, const Validated& v,
                                             int skip_begin, int skip_end) {
  std::vector<DirectionAnchor> anchors;
  std::vector<char> have(v.comps.n_components, 0);
  int found = 0;
  for (int gap = 0; gap <= (int)d.events.size() && found < v.comps.n_components;
       ++gap) {
    if (gap > skip_begin && gap < skip_end) continue;
    const auto& segs = v.sweep.gap_segments[gap];
    for (int p = 0; p < (int)segs.size(); ++p) {
      int comp = v.comps.seg_component[segs[p]];
      if (have[comp]) continue;
      have[comp] = 1;
      ++found;
      anchors.push_back({gap, p + 1, segment_rightward(d, v.comps, segs[p])});
    }
  }
  return anchors;
}

FrontDiagram apply_direction_anchors(FrontDiagram d,
                                     const std::vector<DirectionAnchor>& anchors) {
  d.orientations.clear();
  auto v = validate(d);
  d.orientations.assign(v.comps.n_components, '+');
  for (const auto& a : anchors) {
    const auto& segs = v.sweep.gap_segments.at(a.gap);
    int seg = segs.at(a.pos - 1);
    int comp = v.comps.seg_component[seg];
    d.orientations[comp] = (v.comps.seg_parity[seg] == 0) == a.rightward ? '+' : '-';
  }
  return d;
}

std::pair<int, int> rightmost_rightward_site(const FrontDiagram& d, int component) {
  auto v = validate(d);
  if (component < 0 || component >= v.comps.n_components)
    throw FrontError("component index out of range");
  for (int gap = (int)d.events.size(); gap >= 0; --gap) {
    const auto& segs = v.sweep.gap_segments[gap];
    for (int p = 0; p < (int)segs.size(); ++p) {
      if (v.comps.seg_component[segs[p]] != component) continue;
      if (segment_rightward(d, v.comps, segs[p])) return {gap, p + 1};
    }
  }
  throw FrontError("component has no rightward strand");
}

// ---------------- parsing / serialization ----------------

FrontDiagram parse_front(const std::string& text) {
  FrontDiagram d;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::map<int, char> orient_directives;
  std::vector<std::array<int, 3>> basepoint_directives;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "front") {
      if (have_header) throw FrontError("duplicate header", -1, lineno);
      std::string kind;
      if (!(ls >> kind)) throw FrontError("missing front kind", -1, lineno);
      if (kind == "r3") {
        d.arity = 0;
      } else if (kind == "torus") {
        if (!(ls >> d.arity) || d.arity < 1)
          throw FrontError("bad torus arity", -1, lineno);
      } else {
        throw FrontError("unknown front kind '" + kind + "'", -1, lineno);
      }
      have_header = true;
    } else if (tok == "l" || tok == "r" || tok == "x") {
      if (!have_header) throw FrontError("event before header", -1, lineno);
      int i;
      if (!(ls >> i)) throw FrontError("missing event position", -1, lineno);
      EventKind k = tok == "l"   ? EventKind::LeftCusp
                    : tok == "r" ? EventKind::RightCusp
                                 : EventKind::Crossing;
      d.events.push_back({k, i});
    } else if (tok == "orient") {
      int comp;
      std::string sign;
      if (!(ls >> comp >> sign) || (sign != "+" && sign != "-"))
        throw FrontError("bad orient directive", -1, lineno);
      auto it = orient_directives.find(comp - 1);
      if (it != orient_directives.end() && it->second != sign[0])
        throw FrontError("orientation inconsistency: conflicting orient directives",
                         -1, lineno);
      orient_directives[comp - 1] = sign[0];
    } else if (tok == "basepoint") {
      int comp, gap, pos;
      if (!(ls >> comp >> gap >> pos))
        throw FrontError("bad basepoint directive", -1, lineno);
      basepoint_directives.push_back({comp - 1, gap, pos});
    } else {
      throw FrontError("unknown token '" + tok + "'", -1, lineno);
    }
    std::string extra;
    if (ls >> extra) throw FrontError("trailing tokens", -1, lineno);
  }
  if (!have_header) throw FrontError("missing 'front' header");
  auto v = validate(d);
  d.orientations.assign(v.comps.n_components, '+');
  for (auto [comp, sign] : orient_directives) {
    if (comp < 0 || comp >= v.comps.n_components)
      throw FrontError("orient component out of range");
    d.orientations[comp] = sign;
  }
  for (auto [comp, gap, pos] : basepoint_directives)
    d.basepoints.push_back({comp, gap, pos});
  validate(d);
  return d;
}

std::string serialize_front(const FrontDiagram& d) {
  std::ostringstream out;
  if (d.arity == 0)
    out << "front r3\n";
  else
    out << "front torus " << d.arity << "\n";
  for (const auto& e : d.events) out << kind_name(e.kind) << " " << e.pos << "\n";
  for (int i = 0; i < (int)d.orientations.size(); ++i)
    out << "orient " << (i + 1) << " " << d.orientations[i] << "\n";
  for (const auto& b : d.basepoints)
    out << "basepoint " << (b.component + 1) << " " << b.gap << " " << b.pos << "\n";
  return out.str();
}

FrontDiagram load_front_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrontError("cannot open front file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_front(buf.str());
}

}  // namespace legsat
