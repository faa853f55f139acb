#pragma once

#include <map>
#include <vector>

#include "pmaps/map_core.hpp"

namespace pmaps::testing {

PlanarMap tetrahedron();
PlanarMap cube();
// Two cubes sharing one square face; the shared square is a separating 4-cycle.
PlanarMap double_cube();
// A path with three vertices as a map.
PlanarMap path3();

// Rooted classes keyed by their canonical code.
class ClassIndex {
 public:
  explicit ClassIndex(const std::vector<PlanarMap>& maps);
  int find(const PlanarMap& m) const;  // -1 when unknown
  size_t size() const { return index_.size(); }

 private:
  std::map<std::vector<int>, int> index_;
};

// Upper-tail p-value of Pearson's statistic against a uniform distribution.
double chi_square_uniform_p(const std::vector<long>& counts);

// Catalan numbers by the convolution recurrence.
std::vector<long long> catalan_by_recurrence(int n);
// Number of rooted bicolored binary trees by direct recursion on the root:
// [black][i][j] for a black root node, [white][i][j] for a white one.
long long black_rooted_by_recursion(int i, int j);
long long white_rooted_by_recursion(int i, int j);

// Separating 4-cycle test by brute force over vertex quadruples.
bool brute_separating_4cycle(const PlanarMap& m);

}  // namespace pmaps::testing
