#include "doctest.h"
#include "legsat/construct.hpp"
#include "legsat/moves.hpp"

using namespace legsat;

namespace {
FrontDiagram corpus(const std::string& name) {
  return load_front_file(std::string(LEGSAT_CORPUS_DIR) + "/" + name);
}
}  // namespace

TEST_CASE("kink insertion and removal are mutually inverse") {
  auto d = corpus("trefoil.front");
  for (MoveType t : {MoveType::I, MoveType::IMirror}) {
    auto k = insert_kink(d, t, 2, 1);
    CHECK(k.events.size() == d.events.size() + 3);
    auto back = apply_move(k, t, 2);
    CHECK(back.events == d.events);
    CHECK(classical_invariants(k).tb == classical_invariants(d).tb);
    CHECK(classical_invariants(k).r == classical_invariants(d).r);
  }
}

TEST_CASE("move patterns that do not match are rejected") {
  auto d = corpus("trefoil.front");
  CHECK_THROWS_AS(apply_move(d, MoveType::IIb, 2), FrontError);
  CHECK_THROWS_AS(apply_move(d, MoveType::I, 0), FrontError);
}

TEST_CASE("cusp passage moves preserve invariants both ways") {
  auto d = corpus("trefoil.front");
  // reverse IIa at the first left cusp drags a strand through it
  auto grown = apply_move(d, MoveType::IIa, 1);
  CHECK(grown.events.size() == d.events.size() + 2);
  CHECK(classical_invariants(grown).tb == 1);
  CHECK(classical_invariants(grown).r == std::vector<int>{0});
  // forward direction restores the word
  auto back = apply_move(grown, MoveType::IIa, 1);
  CHECK(back.events == d.events);
}

TEST_CASE("move III applies the braid relation") {
  auto d = parse_front("front r3\nl 1\nl 3\nx 1\nx 2\nx 1\nr 1\nr 1\n");
  auto i0 = classical_invariants(d);
  auto m = apply_move(d, MoveType::III, 2);
  CHECK(m.events != d.events);
  std::vector<FrontEvent> expect = {ev_l(1), ev_l(3), ev_x(2), ev_x(1),
                                    ev_x(2), ev_r(1), ev_r(1)};
  CHECK(m.events == expect);
  CHECK(classical_invariants(m).tb == i0.tb);
  CHECK(classical_invariants(m).r == i0.r);
  CHECK(apply_move(m, MoveType::III, 2).events == d.events);
}

TEST_CASE("random move sequences preserve tb, r, w and component count") {
  for (const char* name : {"trefoil.front", "figure8.front", "patterns/w2.front"}) {
    auto d = corpus(name);
    auto i0 = classical_invariants(d);
    auto v0 = validate(d);
    for (uint64_t seed : {1ull, 7ull, 42ull}) {
      auto m = random_moves(d, 25, seed);
      auto i1 = classical_invariants(m);
      CHECK(i1.tb == i0.tb);
      CHECK(i1.r == i0.r);
      if (d.arity > 0) CHECK(*i1.w == *i0.w);
      CHECK(validate(m).comps.n_components == v0.comps.n_components);
    }
  }
}

TEST_CASE("seeded move runs are reproducible") {
  auto d = corpus("figure8.front");
  std::vector<MoveApplication> log1, log2;
  auto a = random_moves(d, 15, 99, &log1);
  auto b = random_moves(d, 15, 99, &log2);
  CHECK(a == b);
  CHECK(log1.size() == log2.size());
}

TEST_CASE("random fronts survive random moves with invariants intact") {
  std::mt19937_64 rng(2024);
  RandomFrontOptions opt;
  opt.max_events = 16;
  for (int i = 0; i < 40; ++i) {
    auto d = random_front(rng, opt);
    auto i0 = classical_invariants(d);
    auto m = random_moves(d, 8, 1000 + i);
    auto i1 = classical_invariants(m);
    CHECK(i1.tb == i0.tb);
    CHECK(i1.r == i0.r);
  }
}

TEST_CASE("canonical planar form is idempotent and order-insensitive") {
  // two far-apart saucers in either order normalize identically
  auto a = parse_front("front r3\nl 1\nr 1\nl 1\nr 1\n");
  auto b = parse_front("front r3\nl 1\nl 3\nr 3\nr 1\n");
  auto ca = canonical_planar_form(a);
  auto cb = canonical_planar_form(b);
  CHECK(canonical_planar_form(ca).events == ca.events);
  // a: sequential saucers; b: stacked saucers -- different isotopy words
  // but each has a stable normal form
  CHECK(canonical_planar_form(cb).events == cb.events);
}

TEST_CASE("commuting distant events preserves the diagram") {
  auto d = parse_front("front r3\nl 1\nl 3\nx 2\nx 2\nx 2\nr 1\nr 1\n");
  auto c = canonical_planar_form(d);
  CHECK(classical_invariants(c).tb == classical_invariants(d).tb);
  CHECK(validate(c).comps.n_components == 1);
}
