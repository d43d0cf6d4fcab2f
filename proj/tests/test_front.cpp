#include "doctest.h"
#include "legsat/front.hpp"
#include "legsat/moves.hpp"

using namespace legsat;

namespace {
FrontDiagram parse(const std::string& s) { return parse_front(s); }
std::set<int> all_comps(const FrontDiagram& d) {
  auto v = validate(d);
  std::set<int> s;
  for (int i = 0; i < v.comps.n_components; ++i) s.insert(i);
  return s;
}
}  // namespace

TEST_CASE("unknot parses and has the expected invariants") {
  auto d = parse("front r3\nl 1\nr 1\n");
  auto v = validate(d);
  CHECK(v.comps.n_components == 1);
  auto inv = classical_invariants(d);
  CHECK(inv.tb == -1);
  CHECK(inv.r == std::vector<int>{0});
  CHECK(!inv.w.has_value());
}

TEST_CASE("stabilized unknot word is valid with two right cusps") {
  auto d = parse("front r3\nl 1\nl 2\nr 1\nr 1\n");
  auto inv = classical_invariants(d);
  CHECK(inv.tb == -2);
  CHECK(inv.r.size() == 1);
  CHECK(std::abs(inv.r[0]) == 1);
}

TEST_CASE("strand-count violations are rejected") {
  CHECK_THROWS_AS(parse("front r3\nr 1\n"), FrontError);
  CHECK_THROWS_AS(parse("front r3\nl 1\n"), FrontError);          // open ends
  CHECK_THROWS_AS(parse("front r3\nl 5\nr 1\n"), FrontError);     // bad position
  CHECK_THROWS_AS(parse("front torus 2\nr 1\nl 1\nx 2\n"), FrontError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse("front r3\nl 1\nbogus 3\n");
    CHECK(false);
  } catch (const FrontError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("arity-2 crossing pattern is one component through the gluing") {
  auto d = parse("front torus 2\nx 1\n");
  auto v = validate(d);
  CHECK(v.comps.n_components == 1);
}

TEST_CASE("conflicting orient directives are an orientation violation") {
  CHECK_THROWS_AS(parse("front torus 2\nx 1\norient 1 +\norient 1 -\n"), FrontError);
}

TEST_CASE("winding flips under orientation reversal") {
  auto d = parse("front torus 2\n");
  CHECK(winding(d) == 2);
  auto v = validate(d);
  CHECK(v.comps.n_components == 2);
  auto d2 = reverse_orientation(d, 0);
  CHECK(winding(d2) == 0);
  auto d3 = reverse_orientation(d2, 1);
  CHECK(winding(d3) == -2);
  CHECK(winding(reverse_orientation(reverse_orientation(d, 0), 0)) == 2);
}

TEST_CASE("trefoil invariants") {
  // two left cusps, three crossings between the middle strands, two right cusps
  auto d = parse("front r3\nl 1\nl 3\nx 2\nx 2\nx 2\nr 1\nr 1\n");
  auto v = validate(d);
  CHECK(v.comps.n_components == 1);
  auto inv = classical_invariants(d);
  CHECK(inv.tb == 1);
  CHECK(inv.r == std::vector<int>{0});
}

TEST_CASE("tb is independent of overall orientation, r negates") {
  auto d = parse("front r3\nl 1\nl 3\nx 2\nx 2\nx 2\nr 1\nr 1\n");
  auto rev = reverse_orientation(d, 0);
  CHECK(thurston_bennequin(d, all_comps(d)) == thurston_bennequin(rev, all_comps(rev)));
  CHECK(rotation(d, 0) == -rotation(rev, 0));
}

TEST_CASE("maslov potentials satisfy the cusp relation") {
  for (const char* w : {"front r3\nl 1\nr 1\n", "front r3\nl 1\nl 3\nx 2\nx 2\nx 2\nr 1\nr 1\n",
                        "front r3\nl 1\nl 2\nr 1\nr 1\n"}) {
    auto d = parse(w);
    auto v = validate(d);
    auto m = maslov_potential(d);
    for (int k = 0; k < (int)d.events.size(); ++k) {
      if (d.events[k].kind == EventKind::Crossing) continue;
      auto [u, lo] = v.sweep.event_segments[k];
      int comp = v.comps.seg_component[u];
      int defect = m.potential[u] - m.potential[lo] - 1;
      int mod = m.modulus[comp];
      CHECK((mod == 0 ? defect == 0 : defect % mod == 0));
    }
  }
}

TEST_CASE("unknot maslov: upper strand 1, lower 0") {
  auto d = parse("front r3\nl 1\nr 1\n");
  auto v = validate(d);
  auto m = maslov_potential(d);
  auto [u, lo] = v.sweep.event_segments[0];
  CHECK(m.potential[u] == 1);
  CHECK(m.potential[lo] == 0);
}

TEST_CASE("serialize round trip is structural identity") {
  auto d = parse("front torus 2\nx 1\nl 2\nx 3\nr 2\norient 1 -\nbasepoint 1 1 1\n");
  auto d2 = parse(serialize_front(d));
  CHECK(d == d2);
  CHECK(serialize_front(d) == serialize_front(d2));
}

TEST_CASE("random fronts validate and serialize deterministically") {
  std::mt19937_64 rng(12345);
  RandomFrontOptions opt;
  for (int i = 0; i < 200; ++i) {
    auto d = random_front(rng, opt);
    auto v = validate(d);
    CHECK(v.comps.n_components >= 1);
    CHECK(parse(serialize_front(d)) == d);
  }
}

TEST_CASE("basepoint default lands on a right cusp loop for closed knots") {
  auto d = parse("front r3\nl 1\nr 1\n");
  auto bps = resolve_basepoints(d);
  REQUIRE(bps.size() == 1);
  CHECK(bps[0].in_cusp_loop);
  CHECK(bps[0].event == 1);
}

TEST_CASE("basepoint off-diagram is rejected") {
  CHECK_THROWS_AS(parse("front r3\nl 1\nr 1\nbasepoint 1 1 5\n"), FrontError);
}
