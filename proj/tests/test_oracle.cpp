#include <catch_amalgamated.hpp>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/oracle.hpp"
#include "pmaps/sample.hpp"
#include "support.hpp"

using namespace pmaps;
using namespace pmaps::testing;

TEST_CASE("separating 4-cycles") {
  CHECK_FALSE(has_separating_4cycle(cube()));
  CHECK(has_separating_4cycle(double_cube()));
  CHECK(brute_separating_4cycle(double_cube()));
  Rng rng(12);
  for (int k = 0; k < 30; ++k) {
    PlanarMap q = quadrangulation_of_map(sample_3connected_by_edges(14, rng).map);
    CHECK_FALSE(has_separating_4cycle(q));
    CHECK_FALSE(brute_separating_4cycle(q));
  }
}

TEST_CASE("3-connectivity") {
  CHECK(is_3_connected(tetrahedron()));
  CHECK(is_3_connected(cube()));
  CHECK_FALSE(is_3_connected(path3()));
  PlanarMap hex = close(enumerate_binary_trees(1).rooted.front()).dissection;
  CHECK_FALSE(is_3_connected(hex));
}

TEST_CASE("rooting and deduplication") {
  // the rotation groups act freely and transitively on darts
  CHECK(all_rootings({tetrahedron()}, false).size() == 1);
  CHECK(all_rootings({cube()}, false).size() == 1);
  CHECK(all_rootings({cube()}, true).size() == 1);
  CHECK(dedupe({tetrahedron(), tetrahedron().with_root(7), cube()}, false).size() == 2);
  CHECK(dedupe({tetrahedron(), tetrahedron().with_root(7)}, true).size() == 1);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_binary_trees(9), Error);
  CHECK_THROWS_AS(enumerate_dissections(7), Error);
  CHECK_THROWS_AS(enumerate_3connected(11), Error);
  CHECK_THROWS_AS(enumerate_triangulations(4), Error);
}

TEST_CASE("enumerated 3-connected maps are distinct rooted classes with the outer face on the right") {
  for (int e = 6; e <= 10; ++e) {
    auto maps = enumerate_3connected(e);
    CHECK(dedupe(maps, true).size() == maps.size());
    for (const auto& m : maps) {
      CHECK(m.num_edges() == e);
      CHECK(is_3_connected(m));
      CHECK(m.face(m.root_dart()) == m.outer_face());
    }
  }
}

TEST_CASE("alpha0 enumeration of the tetrahedron") {
  DerivedMap dm = derived_map(tetrahedron());
  auto all = enumerate_alpha0(dm);
  REQUIRE(all.size() == 1);
  CHECK(verify_derived_orientation(dm, all.front()).ok());
}
