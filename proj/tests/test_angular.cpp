#include <catch_amalgamated.hpp>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/count.hpp"
#include "pmaps/oracle.hpp"
#include "support.hpp"

using namespace pmaps;
using namespace pmaps::testing;

namespace {

std::vector<PlanarMap> rooted_dissections(int k) {
  std::vector<PlanarMap> out;
  for (const auto& d : all_rootings(enumerate_dissections(k), true)) out.push_back(d.without_colors());
  return out;
}

Errc error_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

int count_white_outer_degree3(const PlanarMap& d) {
  int c = 0;
  for (int x : d.face_darts(d.outer_face()))
    c += d.dart_color(x) == Color::White && d.vertex_degree(d.vertex(x)) >= 3;
  return c;
}

}  // namespace

TEST_CASE("cube maps to the tetrahedron") {
  PlanarMap m = primal_of_quadrangulation(cube());
  CHECK(m.num_vertices() == 4);
  CHECK(m.num_faces() == 4);
  CHECK(m.num_edges() == 6);
  CHECK(maps_isomorphic(m, tetrahedron(), false));
}

TEST_CASE("quadrangulation root follows the map root counterclockwise") {
  PlanarMap q = quadrangulation_of_map(tetrahedron());
  AngularResult a = angular_of_quadrangulation(q);
  int rq = q.root_dart();
  CHECK(a.image[q.sigma_inv(rq)] == a.map.root_dart());
  CHECK(q.dart_color(rq) == Color::Black);
}

TEST_CASE("quadrangulation round trip over small 3-connected maps") {
  for (int e = 6; e <= 10; ++e)
    for (const auto& m : enumerate_3connected(e)) {
      PlanarMap q = quadrangulation_of_map(m);
      CHECK(classify(q) == MapClass::Quadrangulation);
      CHECK(q.num_faces() == e);
      CHECK_FALSE(has_separating_4cycle(q));
      PlanarMap back = primal_of_quadrangulation(q);
      CHECK(rooted_equal(back, back.root_dart(), m, m.root_dart()));
      PlanarMap q2 = quadrangulation_of_map(back);
      CHECK(rooted_equal(q2, q2.root_dart(), q, q.root_dart()));
    }
}

TEST_CASE("primal of a quadrangulation rejects bad input") {
  CHECK(error_of([] { primal_of_quadrangulation(tetrahedron()); }) == Errc::NotQuadrangulation);
  PlanarMap c = bicolor(cube(), cube().vertex(cube().root_dart()), Color::White);
  CHECK(error_of([&] { primal_of_quadrangulation(c); }) == Errc::RootNotBlack);
}

TEST_CASE("complete dissection round trip over outer-triangular maps") {
  for (int e = 6; e <= 10; ++e)
    for (const auto& g : all_rootings(enumerate_3connected(e), false)) {
      if (g.face_degree(g.face(g.root_dart())) != 3) continue;
      PlanarMap d = complete_dissection_of_map(g);
      CHECK(is_complete(d));
      CHECK(classify(d) == MapClass::HexDissection);
      int black = 0, white = 0;
      for (int v = 0; v < d.num_vertices(); ++v) (d.color(v) == Color::Black ? black : white) += 1;
      CHECK(black == g.num_vertices());
      CHECK(white - 3 == g.num_faces() - 1);
      PlanarMap back = primal_of_complete_dissection(d);
      CHECK(rooted_equal(back, back.root_dart(), g, g.root_dart()));
    }
}

TEST_CASE("completion adds one covering vertex per busy white corner") {
  ClosureResult one = close(enumerate_binary_trees(1).rooted.front());
  PlanarMap d1 = one.dissection;
  CHECK_FALSE(is_complete(d1));
  REQUIRE(count_white_outer_degree3(d1) == 3);
  PlanarMap c1 = complete_dissection(d1);
  CHECK(c1.num_vertices() == d1.num_vertices() + 3);
  CHECK(is_complete(c1));
  CHECK(to_pmap(complete_dissection(c1)) == to_pmap(c1));
  CHECK(error_of([&] { primal_of_complete_dissection(d1); }) == Errc::NotComplete);

  bool seen_single = false;
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n).unrooted) {
      PlanarMap d = close(t.with_root(std::nullopt)).dissection;
      int busy = count_white_outer_degree3(d);
      PlanarMap c = complete_dissection(d);
      CHECK(c.num_vertices() == d.num_vertices() + busy);
      CHECK(is_complete(c));
      CHECK_FALSE(has_separating_4cycle(c));
      seen_single = seen_single || busy == 1;
    }
  CHECK(seen_single);
}

TEST_CASE("iota of the cube is undecomposable") {
  PlanarMap d = iota(cube());
  CHECK(d.num_vertices() - 6 == 2);
  CHECK(classify(d) == MapClass::HexDissection);
  CHECK(is_undecomposable(d));
  PlanarMap q = pi(d);
  CHECK(rooted_equal(q, q.root_dart(), cube(), cube().root_dart()));
}

TEST_CASE("pi and iota on rooted dissections") {
  // undecomposable counts match rooted 3-connected maps with k + 4 edges
  const int frozen[] = {0, 0, 1, 0, 4, 6};
  Series u = series_undecomposable(6);
  for (int k = 1; k <= 5; ++k) {
    int undec = 0;
    for (const auto& d : rooted_dissections(k)) {
      PlanarMap q = pi(d);
      CHECK(classify(q) == MapClass::Quadrangulation);
      PlanarMap back = iota(q);
      CHECK(rooted_equal(back, back.root_dart(), d, d.root_dart()));
      bool und = is_undecomposable(d);
      bool sep = has_separating_4cycle(q);
      CHECK(sep == brute_separating_4cycle(q));
      CHECK(sep == !und);
      undec += und;
    }
    CHECK(undec == frozen[k]);
    CHECK(u[k] == frozen[k]);
  }
}

TEST_CASE("decomposition words round trip and obey the shape rules") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& d : rooted_dissections(k)) {
      auto paths = decomposition_paths(d);
      REQUIRE(paths.size() >= 2);
      CHECK_FALSE(paths.front().inner);
      CHECK_FALSE(paths.back().inner);
      for (size_t p = 1; p + 1 < paths.size(); ++p) CHECK(paths[p].inner);
      DecompositionWord w = decomposition_word(d);
      std::string shape = word_shape(w);
      CHECK(w.size() == paths.size() - 1);
      CHECK(shape.find("ss") == std::string::npos);
      CHECK(shape.find("tt") == std::string::npos);
      for (const char* bad : {"", "s", "t", "st", "ts"}) CHECK(shape != bad);
      if (is_undecomposable(d)) CHECK(shape == "U");
      for (const auto& l : w)
        if (l.kind == 'U') CHECK(is_undecomposable(l.component));
      PlanarMap back = glue_decomposition_word(w);
      CHECK(rooted_equal(back, back.root_dart(), d, d.root_dart()));
    }
}

TEST_CASE("a glued tsUsts word is decomposable") {
  PlanarMap u;
  for (const auto& d : rooted_dissections(2))
    if (is_undecomposable(d)) u = d;
  REQUIRE(u.darts() > 0);
  DecompositionWord w;
  for (char c : std::string("tsUsts")) w.push_back({c, c == 'U' ? u : PlanarMap()});
  PlanarMap d = glue_decomposition_word(w);
  CHECK(classify(d) == MapClass::HexDissection);
  CHECK_FALSE(has_separating_4cycle(d));
  CHECK_FALSE(is_undecomposable(d));
  DecompositionWord back = decomposition_word(d);
  CHECK(word_shape(back) == "tsUsts");
  CHECK(words_equal(back, w));
  std::string text = format_decomposition_word(back);
  CHECK(text.rfind("t s {", 0) == 0);
  CHECK(text.find("pmap 1") != std::string::npos);
}

TEST_CASE("gluing rejects forbidden words") {
  for (std::string bad : {"", "s", "t", "st", "ts", "sst", "stt"}) {
    DecompositionWord w;
    for (char c : bad) w.push_back({c, PlanarMap()});
    CHECK(error_of([&] { glue_decomposition_word(w); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("color_complete puts white on the degree-2 hexagon corners") {
  PlanarMap d = complete_dissection_of_map(tetrahedron()).without_colors();
  PlanarMap c = color_complete(d);
  for (int x : c.face_darts(c.outer_face()))
    if (c.vertex_degree(c.vertex(x)) == 2) CHECK(c.dart_color(x) == Color::White);
}
