#pragma once

#include <optional>
#include <random>
#include <vector>

#include "legsat/front.hpp"

// Legendrian Reidemeister moves on event words, plus planar-isotopy
// normalization (commuting events with disjoint vertical supports).
//
// Move patterns, written on a strand at position p:
//   I        [l p+1, x p, r p+1] <-> (nothing)      swallowtail below
//   I-mirror [l p,  x p+1, r p ] <-> (nothing)      swallowtail above
//   IIa      [l p+1, x p] <-> [l p, x p+1]          strand through a left cusp
//   IIb      [x p+1, r p] <-> [x p, r p+1]          strand through a right cusp
//   III      [x a, x b, x a] <-> [x b, x a, x b]    |a-b| = 1

namespace legsat {

enum class MoveType { I, IMirror, IIa, IIb, III };

struct MoveApplication {
  MoveType type;
  bool insertion;  // kink insertion (I / I-mirror reverse direction)
  int site;        // event index (rewrites) or event gap (insertions)
  int pos;         // strand position for insertions, else 0
};

// Rewrites the pattern found at event index `site`; for IIa/IIb/III either
// side of the pattern is accepted.  For I/I-mirror, `site` must start the
// 3-event kink (removal).  Throws FrontError on pattern mismatch.
FrontDiagram apply_move(const FrontDiagram& d, MoveType type, int site);

// Inserts a kink (move I or I-mirror read right to left) on the strand at
// (gap, pos).
FrontDiagram insert_kink(const FrontDiagram& d, MoveType type, int gap, int pos);

FrontDiagram apply(const FrontDiagram& d, const MoveApplication& m);

std::vector<MoveApplication> enumerate_applicable(const FrontDiagram& d,
                                                  bool include_insertions = true);

// Applies `count` random applicable moves with the given seed.
FrontDiagram random_moves(const FrontDiagram& d, int count, uint64_t seed,
                          std::vector<MoveApplication>* log = nullptr);

// Swaps adjacent events k, k+1 when their vertical supports are disjoint.
// Returns the adjusted pair (first the event that now comes first).
std::optional<std::pair<FrontEvent, FrontEvent>> commute_events(
    int strands_before, const FrontEvent& a, const FrontEvent& b);

// Lexicographically minimal word under event commutation; canonical
// representative of the planar-isotopy class of the word.
FrontDiagram canonical_planar_form(const FrontDiagram& d);

// Random valid fronts (seeded, deterministic across platforms).
struct RandomFrontOptions {
  int max_events = 24;
  int max_crossings = 1 << 30;
  bool require_knot = false;  // single component
  int arity = 0;
};
FrontDiagram random_front(std::mt19937_64& rng, const RandomFrontOptions& opt);

}  // namespace legsat
