#pragma once

#include <string>
#include <vector>

#include "pmaps/map_core.hpp"

namespace pmaps {

// A map produced by an angular construction together with the dart
// correspondence. image[c] is the target dart lying in the corner
// (c, sigma(c)) of the source map, or -1.
struct AngularResult {
  PlanarMap map;
  std::vector<int> image;
};

// One edge per face of q joining its two black corners. q must be a rooted
// quadrangulation; it is two-colored from the root vertex when uncolored.
// The root of q is the dart following the root of the image counterclockwise.
AngularResult angular_of_quadrangulation(const PlanarMap& q);
PlanarMap primal_of_quadrangulation(const PlanarMap& q);
// Inverse: vertices black, faces white, rooted at the dart after the root.
PlanarMap quadrangulation_of_map(const PlanarMap& m);

// d: bicolored complete dissection rooted at a hexagon dart leaving a black
// vertex. Outer corners at black hexagon vertices carry no edge.
AngularResult angular_of_complete_dissection(const PlanarMap& d);
PlanarMap primal_of_complete_dissection(const PlanarMap& d);
// Inverse for a rooted outer-triangular map (outer face on the right of the root).
PlanarMap complete_dissection_of_map(const PlanarMap& g);

// Three white hexagon vertices of degree 2.
bool is_complete(const PlanarMap& d);
// Adds a covering white vertex outside each white hexagon vertex of degree >= 3.
// Existing darts keep their ids.
PlanarMap complete_dissection(const PlanarMap& d);
// Colors a complete dissection so that its degree-2 hexagon vertices are white.
PlanarMap color_complete(const PlanarMap& d);

// Removes the root edge; the new root is the next dart counterclockwise.
PlanarMap iota(const PlanarMap& q);
// Adds the edge from the root vertex to the opposite hexagon vertex and roots on it.
PlanarMap pi(const PlanarMap& d);

// Vertices s, x, y, t of a length-3 path from the root vertex s of a rooted
// dissection to the opposite hexagon vertex t.
struct DecompositionPath {
  int s = -1, x = -1, y = -1, t = -1;
  bool inner = false;
  bool operator==(const DecompositionPath&) const = default;
};
// All decomposition paths, ordered from the one through the root edge to the
// other outer one.
std::vector<DecompositionPath> decomposition_paths(const PlanarMap& d);
bool is_undecomposable(const PlanarMap& d);

// 's', 't', or 'U' with the component delimited by two consecutive paths,
// rooted at the first edge of the left path.
struct DecompositionLetter {
  char kind = 'U';
  PlanarMap component;
};
using DecompositionWord = std::vector<DecompositionLetter>;

DecompositionWord decomposition_word(const PlanarMap& d);
PlanarMap glue_decomposition_word(const DecompositionWord& w);
std::string word_shape(const DecompositionWord& w);
// "t s { pmap ... } s t s"
std::string format_decomposition_word(const DecompositionWord& w);
bool words_equal(const DecompositionWord& a, const DecompositionWord& b);

}  // namespace pmaps
