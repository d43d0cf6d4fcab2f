#include <set>

#include "doctest.h"
#include "kauffman.hpp"
#include "legsat/construct.hpp"
#include "legsat/moves.hpp"

using namespace legsat;

namespace {
FrontDiagram corpus(const std::string& name) {
  return load_front_file(std::string(LEGSAT_CORPUS_DIR) + "/" + name);
}
std::vector<FrontEvent> words(const FrontDiagram& d) { return d.events; }
}  // namespace

TEST_CASE("corpus diagrams carry the advertised knot types and invariants") {
  auto u = corpus("unknot.front");
  CHECK(classical_invariants(u).tb == -1);
  CHECK(legsat_test::is_unknot_jones(legsat_test::jones_in_A(u)));

  auto t = corpus("trefoil.front");
  auto ti = classical_invariants(t);
  CHECK(ti.tb == 1);
  CHECK(ti.r == std::vector<int>{0});
  CHECK(legsat_test::is_right_trefoil_jones(legsat_test::jones_in_A(t)));

  auto f = corpus("figure8.front");
  auto fi = classical_invariants(f);
  CHECK(fi.tb == -3);
  CHECK(fi.r == std::vector<int>{0});
  CHECK(legsat_test::is_fig8_jones(legsat_test::jones_in_A(f)));

  CHECK(legsat_test::is_unknot_jones(
      legsat_test::jones_in_A(corpus("unknot_stab_plus.front"))));
  CHECK(legsat_test::is_unknot_jones(
      legsat_test::jones_in_A(corpus("unknot_stab_minus.front"))));
}

TEST_CASE("stabilization contract on corpus knots") {
  for (const char* name : {"unknot.front", "trefoil.front", "figure8.front"}) {
    auto d = corpus(name);
    auto i0 = classical_invariants(d);
    auto sp = stabilize(d, 0, +1);
    auto sm = stabilize(d, 0, -1);
    CHECK(classical_invariants(sp).tb == i0.tb - 1);
    CHECK(classical_invariants(sp).r[0] == i0.r[0] + 1);
    CHECK(classical_invariants(sm).tb == i0.tb - 1);
    CHECK(classical_invariants(sm).r[0] == i0.r[0] - 1);
    auto pm = stabilize(sp, 0, -1);
    auto mp = stabilize(sm, 0, +1);
    CHECK(classical_invariants(pm).tb == classical_invariants(mp).tb);
    CHECK(classical_invariants(pm).r == classical_invariants(mp).r);
  }
}

TEST_CASE("corpus stabilized unknots match the constructors") {
  auto u = corpus("unknot.front");
  CHECK(words(stabilize(u, 0, +1)) == words(corpus("unknot_stab_plus.front")));
  CHECK(words(stabilize(u, 0, -1)) == words(corpus("unknot_stab_minus.front")));
}

TEST_CASE("stabilizing a leftward segment is rejected") {
  auto u = corpus("unknot.front");
  // the lower strand of the saucer runs right-to-left: gap 1, position 2
  CHECK_THROWS_AS(stabilize(u, 0, +1, 1, 2), FrontError);
}

TEST_CASE("stabilization site independence of invariants") {
  auto t = corpus("trefoil.front");
  auto v = validate(t);
  std::vector<std::pair<int, int>> sites;
  for (int gap = 0; gap <= (int)t.events.size(); ++gap) {
    const auto& segs = v.sweep.gap_segments[gap];
    for (int p = 0; p < (int)segs.size(); ++p)
      if (segment_rightward(t, v.comps, segs[p])) sites.push_back({gap, p + 1});
  }
  REQUIRE(sites.size() >= 2);
  auto base = classical_invariants(stabilize(t, 0, +1, sites[0].first, sites[0].second));
  for (auto [g, p] : sites) {
    auto inv = classical_invariants(stabilize(t, 0, +1, g, p));
    CHECK(inv.tb == base.tb);
    CHECK(inv.r == base.r);
  }
}

TEST_CASE("n-copy counts and invariants") {
  auto u = corpus("unknot.front");
  CHECK(words(n_copy(u, 0, 1)) == words(u));
  auto d2 = n_copy(u, 0, 2);
  CHECK(classical_invariants(d2).tb == -4);
  auto d3 = n_copy(u, 0, 3);
  int l = 0, r = 0, x = 0;
  for (auto& e : d3.events) {
    if (e.kind == EventKind::LeftCusp) ++l;
    if (e.kind == EventKind::RightCusp) ++r;
    if (e.kind == EventKind::Crossing) ++x;
  }
  CHECK(l == 3);
  CHECK(r == 3);
  CHECK(x == 6);
  auto v3 = validate(d3);
  CHECK(v3.comps.n_components == 3);
}

TEST_CASE("n-copy equals the satellite with the n-strand pattern") {
  for (const char* name : {"unknot.front", "trefoil.front"}) {
    auto d = corpus(name);
    for (int n : {1, 2, 3}) {
      auto a = n_copy(d, 0, n);
      auto b = satellite(d, 0, pattern("n-strands", n));
      CHECK(words(a) == words(b));
      auto va = validate(a);
      std::set<int> all;
      for (int i = 0; i < va.comps.n_components; ++i) all.insert(i);
      for (int i = 0; i < va.comps.n_components; ++i) {
        CHECK(thurston_bennequin(a, {i}) == thurston_bennequin(b, {i}));
        CHECK(rotation(a, i) == rotation(b, i));
      }
      CHECK(thurston_bennequin(a, all) == thurston_bennequin(b, all));
    }
  }
}

TEST_CASE("pattern library constraint sets") {
  for (int n : {1, 2, 3}) {
    auto p = pattern("n-strands", n);
    auto inv = classical_invariants(p.diagram);
    CHECK(*inv.w == n);
    CHECK(inv.tb == 0);
    CHECK((int)inv.r.size() == n);
    CHECK(p.diagram.events.empty());
  }
  for (int k : {0, 1, 2}) {
    auto p = pattern("W", k);
    auto inv = classical_invariants(p.diagram);
    CHECK(*inv.w == 0);
    CHECK(inv.r == std::vector<int>{0});
    CHECK(inv.tb == 1 - 2 * k);
  }
  CHECK(pattern("S", 2).diagram.arity == 2);
  CHECK(pattern("S", 3).diagram.arity == 3);
  CHECK_THROWS_AS(pattern("bogus", 1), FrontError);
  CHECK_THROWS_AS(pattern("n-strands", 0), FrontError);
}

TEST_CASE("corpus pattern files match the constructors") {
  CHECK(words(corpus("patterns/s2.front")) == words(pattern("S", 2).diagram));
  CHECK(words(corpus("patterns/s3.front")) == words(pattern("S", 3).diagram));
  CHECK(words(corpus("patterns/w0.front")) == words(pattern("W", 0).diagram));
  CHECK(words(corpus("patterns/w2.front")) == words(pattern("W", 1).diagram));
  CHECK(words(corpus("patterns/w4.front")) == words(pattern("W", 2).diagram));
  CHECK(corpus("patterns/strands2.front").arity == 2);
}

TEST_CASE("satellite classical invariant formulas over the pair grid") {
  std::vector<std::string> companions = {"unknot.front", "unknot_stab_plus.front",
                                         "trefoil.front", "figure8.front"};
  std::vector<TorusPattern> pats = {pattern("n-strands", 1), pattern("n-strands", 2),
                                    pattern("n-strands", 3), pattern("W", 0),
                                    pattern("W", 1),         pattern("W", 2),
                                    pattern("S", 2),         pattern("S", 3)};
  for (const auto& cname : companions) {
    auto L = corpus(cname);
    auto li = classical_invariants(L);
    for (const auto& P : pats) {
      auto pi = classical_invariants(P.diagram);
      auto G = satellite(L, 0, P);
      auto gi = classical_invariants(G);
      int w = *pi.w;
      CHECK(gi.tb == w * w * li.tb + pi.tb);
      int rsum = 0, prsum = 0;
      for (int ri : gi.r) rsum += ri;
      for (int ri : pi.r) prsum += ri;
      CHECK(rsum == w * li.r[0] + prsum);
    }
  }
}

TEST_CASE("whitehead double has tb 1 and r 0 for corpus knots") {
  for (const char* name :
       {"unknot.front", "unknot_stab_plus.front", "trefoil.front", "figure8.front"}) {
    auto G = whitehead_double(corpus(name));
    auto gi = classical_invariants(G);
    CHECK(gi.tb == 1);
    CHECK(gi.r == std::vector<int>{0});
    CHECK(gi.r.size() == 1);
  }
}

TEST_CASE("satellite with one strand is the identity up to planar isotopy") {
  for (const char* name : {"unknot.front", "trefoil.front"}) {
    auto d = corpus(name);
    auto s = satellite(d, 0, pattern("n-strands", 1));
    CHECK(words(canonical_planar_form(s)) == words(canonical_planar_form(d)));
  }
}

TEST_CASE("Gamma(K', S_n) equals the n-copy of S+(K') as words") {
  auto u = corpus("unknot.front");
  for (int n : {2, 3}) {
    auto a = satellite(u, 0, pattern("S", n));
    auto b = n_copy(stabilize(u, 0, +1), 0, n);
    CHECK(words(a) == words(b));
    auto va = validate(a), vb = validate(b);
    CHECK(va.comps.n_components == n);
    CHECK(vb.comps.n_components == n);
  }
}

TEST_CASE("reversing a pattern orientation negates w and r, preserves tb") {
  auto w2 = pattern("W", 1);
  auto winv = classical_invariants(w2.diagram);
  auto rev = w2;
  rev.diagram = reverse_orientation(rev.diagram, 0);
  auto rinv = classical_invariants(rev.diagram);
  CHECK(*rinv.w == -*winv.w);
  CHECK(rinv.r[0] == -winv.r[0]);
  CHECK(rinv.tb == winv.tb);
}
