#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Event-word model of Legendrian fronts in R^3 and the solid torus.
//
// A front is read left to right as a sequence of isolated events acting on a
// stack of horizontal strands, numbered 1..m from top to bottom:
//
//   l i : left cusp, inserts two strands at positions i, i+1
//   r i : right cusp, joins and removes the strands at positions i, i+1
//   x i : crossing, swaps the strands at positions i, i+1
//
// A diagram with boundary_arity n starts and ends with n strands; strand i at
// the right edge is glued to strand i at the left edge (solid-torus fronts).
// Arity 0 means a closed front in R^3.

namespace legsat {

enum class EventKind : uint8_t { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
  EventKind kind;
  int pos;  // 1-based strand position the event acts at
  bool operator==(const FrontEvent&) const = default;
};

struct Basepoint {
  int component = 0;  // canonical component index (0-based)
  int gap = 0;        // event gap: 0 = before first event, E = after last
  int pos = 0;        // strand position within that gap
  bool operator==(const Basepoint&) const = default;
};

class FrontError : public std::runtime_error {
 public:
  FrontError(std::string msg, int event_index = -1, int line = -1)
      : std::runtime_error(std::move(msg)), event_index(event_index), line(line) {}
  int event_index;  // offending event, -1 if n/a
  int line;         // source line for parse errors, -1 if n/a
};

// Strand segment bookkeeping produced by the validation sweep.  A segment is a
// maximal strand piece; identity continues through crossings and through the
// torus gluing, and changes only at cusps.
struct SweepInfo {
  int n_segments = 0;
  // per gap g (0..events), the segment id at each position (top to bottom)
  std::vector<std::vector<int>> gap_segments;
  // per event: ids of the two segments involved (cusp branches or crossing
  // strands, upper first).  For crossings these are the ids *entering* the
  // event, upper = position i.
  std::vector<std::pair<int, int>> event_segments;
  std::vector<int> birth_order;  // segment id -> creation rank
};

struct ComponentInfo {
  int n_components = 0;
  std::vector<int> seg_component;   // segment id -> component index (canonical)
  std::vector<int> seg_parity;      // 0 = same direction class as component ref
  std::vector<int> ref_segment;     // component -> reference segment id
};

struct FrontDiagram {
  int arity = 0;
  std::vector<FrontEvent> events;
  std::vector<char> orientations;        // per component: '+' or '-'
  std::vector<Basepoint> basepoints;     // explicit basepoints only

  bool operator==(const FrontDiagram&) const = default;

  int strand_count_at_gap(int gap) const;  // recomputed by sweep
};

// --- construction of events ---
inline FrontEvent ev_l(int i) { return {EventKind::LeftCusp, i}; }
inline FrontEvent ev_r(int i) { return {EventKind::RightCusp, i}; }
inline FrontEvent ev_x(int i) { return {EventKind::Crossing, i}; }

// --- validation and structure ---

// Runs the left-to-right sweep; throws FrontError on any strand-count
// violation.  Returns segment structure.
SweepInfo sweep(const FrontDiagram& d);

// Components via union-find over segments (cusp joins, torus gluing), with
// direction parity.  Throws on parity inconsistency.  Canonical component
// numbering: by earliest segment creation.
ComponentInfo components(const FrontDiagram& d, const SweepInfo& s);

// Full validation: sweep + components + orientation list length +
// basepoint positions.  Returns the checked structures.
struct Validated {
  SweepInfo sweep;
  ComponentInfo comps;
};
Validated validate(const FrontDiagram& d);

// direction of a segment: true = rightward
bool segment_rightward(const FrontDiagram& d, const ComponentInfo& c, int seg);

// --- classical invariants ---

struct ClassicalInvariants {
  int tb = 0;                  // whole-diagram Thurston-Bennequin
  std::vector<int> r;          // rotation number per component
  std::optional<int> w;        // winding number, arity >= 1 only
};

ClassicalInvariants classical_invariants(const FrontDiagram& d);

// tb of a sub-collection of components (crossings/cusps fully inside subset).
int thurston_bennequin(const FrontDiagram& d, const std::set<int>& comps);
int rotation(const FrontDiagram& d, int component);
int winding(const FrontDiagram& d);

// --- Maslov potentials ---

struct MaslovAssignment {
  std::vector<int> potential;   // per segment id
  std::vector<int> modulus;     // per component: |2r|, 0 = integer grading
};

MaslovAssignment maslov_potential(const FrontDiagram& d);

// --- orientation ---

FrontDiagram reverse_orientation(const FrontDiagram& d, int component);

// --- basepoints ---

// Default basepoint rule for a component with at least one right cusp:
// the loop of its rightmost down right cusp (see chdga for the resolved
// placement).  Components without a right cusp (torus through-strands) get a
// basepoint on their first segment.
struct ResolvedBasepoint {
  int component;
  bool in_cusp_loop;  // true: sits inside the loop of cusp `event`
  int event;          // right-cusp event index (loop case)
  int gap, pos;       // explicit placement otherwise
};
std::vector<ResolvedBasepoint> resolve_basepoints(const FrontDiagram& d);

// --- direction anchors (orientation bookkeeping for rewrites) ---

// An anchor pins the traversal direction of the strand at (gap, pos).
struct DirectionAnchor {
  int gap = 0, pos = 0;
  bool rightward = true;
};

// One anchor per component, skipping gaps strictly inside (skip_begin, skip_end).
std::vector<DirectionAnchor> collect_anchors(const FrontDiagram& d, const Validated& v,
                                             int skip_begin = -1, int skip_end = -1);

// Sets orientation flags so each anchored strand has the stated direction;
// unanchored components get '+'.
FrontDiagram apply_direction_anchors(FrontDiagram d,
                                     const std::vector<DirectionAnchor>& anchors);

// (gap, pos) of the rightmost, then topmost, rightward strand of a component.
std::pair<int, int> rightmost_rightward_site(const FrontDiagram& d, int component);

// --- parsing / serialization ---

FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& d);
FrontDiagram load_front_file(const std::string& path);

}  // namespace legsat
