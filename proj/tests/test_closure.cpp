#include <catch_amalgamated.hpp>
#include <set>

#include "pmaps/closure.hpp"
#include "pmaps/count.hpp"
#include "pmaps/oracle.hpp"
#include "support.hpp"

using namespace pmaps;
using namespace pmaps::testing;

TEST_CASE("closure of every small tree is a tri-oriented hexagon dissection") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_binary_trees(n).rooted) {
      ClosureResult c = close(t);
      const PlanarMap& d = c.dissection;
      CHECK(d.num_vertices() == n + 6);
      CHECK(d.num_edges() == 2 * n + 7);
      CHECK(classify(d) == MapClass::HexDissection);
      CHECK(d.face_degree(d.outer_face()) == 6);
      TriReport rep = verify_triorientation(d, c.orient);
      CHECK(rep.ok());
      CHECK(rep.bi_oriented == n - 1);
      CHECK(rep.simply_oriented == n + 2);
      CHECK(c.hexagon.size() == 6);
      CHECK(outer_cycle(d) == c.hexagon);
      // opening gives the tree back with the same dart ids
      PlanarMap back = open(d, c.orient, t.root_dart());
      CHECK(rooted_equal(back, back.root_dart(), t, t.root_dart()));
    }
}

TEST_CASE("closure is injective on unrooted trees") {
  for (int n = 1; n <= 6; ++n) {
    auto fam = enumerate_binary_trees(n);
    auto ds = enumerate_dissections(n);
    CHECK(ds.size() == fam.unrooted.size());
    for (const auto& d : ds) CHECK_FALSE(has_separating_4cycle(d));
  }
}

TEST_CASE("rooted dissections match the closed form") {
  const long frozen[] = {0, 2, 3, 6, 14, 36, 99};
  for (int n = 1; n <= 6; ++n) {
    auto rooted = all_rootings(enumerate_dissections(n), true);
    CHECK(static_cast<long>(rooted.size()) == frozen[n]);
    CHECK(count_rooted_dissections(n) == frozen[n]);
  }
}

TEST_CASE("partial closure leaves k stems and 2k-6 entire darts outside") {
  Rng rng(4);
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_binary_trees(n).rooted) {
      PartialClosure pc = partial_closure(t);
      CHECK(pc.outer_entire == 2 * pc.stems_left - 6);
      PartialClosure rnd = partial_closure(t, &rng);
      CHECK(rooted_equal(rnd.map, 0, pc.map, 0));
    }
}

TEST_CASE("reversing an edge into a clockwise circuit is caught") {
  bool found = false;
  for (int n = 2; n <= 5 && !found; ++n)
    for (const auto& t : enumerate_binary_trees(n).rooted) {
      ClosureResult c = close(t);
      const PlanarMap& d = c.dissection;
      for (int x = 0; x < d.darts() && !found; ++x) {
        if (c.orient.dir[x] != -1 || c.orient.dir[d.alpha(x)] != 1) continue;
        TriOrientation rev = c.orient;
        rev.dir[x] = 1;
        rev.dir[d.alpha(x)] = -1;
        TriReport rep = verify_triorientation(d, rev);
        if (!rep.circuit) continue;
        found = true;
        CHECK_FALSE(rep.ok());
        try {
          open(d, rev);
          FAIL("open accepted a clockwise circuit");
        } catch (const Error& e) {
          CHECK(e.code() == Errc::HasClockwiseCircuit);
        }
      }
      if (found) break;
    }
  CHECK(found);
}

TEST_CASE("opening rejects a corrupted orientation") {
  auto t = enumerate_binary_trees(3).rooted.front();
  ClosureResult c = close(t);
  TriOrientation bad = c.orient;
  for (int d = 0; d < c.dissection.darts(); ++d)
    if (bad.dir[d] == 1) {
      bad.dir[d] = -1;
      break;
    }
  CHECK_FALSE(verify_triorientation(c.dissection, bad).ok());
  CHECK_THROWS_AS(open(c.dissection, bad), Error);
}

TEST_CASE("closure rejects non-trees") {
  CHECK_THROWS_AS(close(tetrahedron()), Error);
}

TEST_CASE("minimal tri-orientation recovers the closure orientation") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_binary_trees(n).rooted) {
      ClosureResult c = close(t);
      CHECK(triorient_minimal(c.dissection) == c.orient);
    }
}
