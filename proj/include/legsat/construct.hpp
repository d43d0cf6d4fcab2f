#pragma once

#include <string>

#include "legsat/front.hpp"

// Diagram-level constructions: stabilization, n-copies, the satellite of a
// companion knot and a solid-torus pattern, Whitehead doubles, and the
// built-in pattern library.

namespace legsat {

struct TorusPattern {
  FrontDiagram diagram;  // boundary arity >= 1
  std::string name;
};

// Inserts a stabilization zigzag on the strand at (gap, pos), which must lie
// on `component` and run left to right.  sign +1 = two down cusps (r += 1),
// sign -1 = mirror (r -= 1); tb drops by 1 either way.
FrontDiagram stabilize(const FrontDiagram& d, int component, int sign, int gap,
                       int pos);
// Same, at the canonical site (rightmost rightward strand of the component).
FrontDiagram stabilize(const FrontDiagram& d, int component, int sign);

// Replaces `component` by n parallel z-shifted copies (copy 1 highest).
FrontDiagram n_copy(const FrontDiagram& d, int component, int n);

// Result of expansion with the canonical splice site marked.
struct Expansion {
  FrontDiagram d;
  int splice_gap;     // gap in the expanded word
  int splice_offset;  // copies of the site strand sit at offset+1..offset+n
  std::vector<int> gap_map;  // original gap -> expanded gap
};
Expansion expand_component(const FrontDiagram& d, int component, int n,
                           bool mark_site);

// Legendrian satellite of companion component `component` of L and pattern P.
FrontDiagram satellite(const FrontDiagram& L, int component, const TorusPattern& P);

FrontDiagram whitehead_double(const FrontDiagram& K);

// Library patterns:
//   pattern("n-strands", n): n parallel loops winding once, no events
//   pattern("S", n):         n-copy stabilization link
//   pattern("W", k):         Whitehead knot with 2k half-twists (k >= 0)
TorusPattern pattern(const std::string& name, int parameter);

}  // namespace legsat
