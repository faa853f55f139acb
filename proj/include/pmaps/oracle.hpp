#pragma once

#include <vector>

#include "pmaps/map_core.hpp"
#include "pmaps/orient.hpp"

namespace pmaps {

struct TreeFamily {
  std::vector<PlanarMap> rooted;    // rooted at a stem, one per rooted class
  std::vector<PlanarMap> unrooted;  // one representative per unrooted class
};
TreeFamily enumerate_binary_trees(int n);                         // n <= 8
// Bicolored trees with black root, i black and j white nodes, rooted at a stem of a black node.
std::vector<PlanarMap> enumerate_black_rooted(int i, int j);      // i + j <= 8
// Unrooted classes of closures of n-node trees, rooted at H0 -> H1.
std::vector<PlanarMap> enumerate_dissections(int n);              // n <= 6
// Every rooting of every map in the list, one per rooted class.
std::vector<PlanarMap> all_rootings(const std::vector<PlanarMap>& maps, bool outer_only);

bool has_separating_4cycle(const PlanarMap& m);
bool is_3_connected(const PlanarMap& m);                          // E <= 200

// Rooted 3-connected maps with the given edge count (6..10) from graph
// enumeration; the root has the outer face on its right.
std::vector<PlanarMap> enumerate_3connected(int edges);
// Rooted triangulations (3-connected, every face a triangle) with n inner vertices, n <= 3.
std::vector<PlanarMap> enumerate_triangulations(int n);

// Every derived orientation (one flag per derived dart) with outdegree 3 at
// primal and dual vertices and 1 at edge-vertices.
std::vector<std::vector<char>> enumerate_alpha0(const DerivedMap& dm);

// Distinct elements of the list up to (un)rooted isomorphism, first occurrence kept.
std::vector<PlanarMap> dedupe(const std::vector<PlanarMap>& maps, bool rooted);

}  // namespace pmaps
