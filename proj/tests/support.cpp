#include "support.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <functional>
#include <set>

namespace pmaps::testing {

PlanarMap tetrahedron() {
  return map_from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, {0, 1});
}

PlanarMap cube() {
  return map_from_faces({{0, 1, 2, 3}, {4, 7, 6, 5}, {0, 4, 5, 1}, {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0}},
                        {0, 1});
}

PlanarMap double_cube() {
  // Inner cube 0..3 / 4..7 drawn inside the square 8..11; 4..7 is the shared face.
  return map_from_faces({{0, 1, 2, 3},
                         {0, 4, 5, 1}, {1, 5, 6, 2}, {2, 6, 7, 3}, {3, 7, 4, 0},
                         {4, 8, 9, 5}, {5, 9, 10, 6}, {6, 10, 11, 7}, {7, 11, 8, 4},
                         {8, 11, 10, 9}},
                        {8, 11});
}

PlanarMap path3() { return map_from_faces({{0, 1, 2, 1}}, {0, 1}); }

ClassIndex::ClassIndex(const std::vector<PlanarMap>& maps) {
  for (const auto& m : maps) index_.emplace(canonical_code(m, m.root_dart()), static_cast<int>(index_.size()));
}

int ClassIndex::find(const PlanarMap& m) const {
  auto it = index_.find(canonical_code(m, m.root_dart()));
  return it == index_.end() ? -1 : it->second;
}

double chi_square_uniform_p(const std::vector<long>& counts) {
  if (counts.size() < 2) return 1.0;
  double total = 0;
  for (long c : counts) total += c;
  double e = total / counts.size(), stat = 0;
  for (long c : counts) stat += (c - e) * (c - e) / e;
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

std::vector<long long> catalan_by_recurrence(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a < k; ++a) c[k] += c[a] * c[k - 1 - a];
  return c;
}

namespace {

// Subtrees hanging below a node of the given color: empty, or a node of the
// other color. Counted by (black, white) node totals.
long long hang(bool parent_black, int i, int j);

long long rooted(bool black, int i, int j) {
  if (i < 0 || j < 0) return 0;
  if (black ? i < 1 : j < 1) return 0;
  int ri = i - black, rj = j - !black;
  long long s = 0;
  for (int a = 0; a <= ri; ++a)
    for (int b = 0; b <= rj; ++b) s += hang(black, a, b) * hang(black, ri - a, rj - b);
  return s;
}

long long hang(bool parent_black, int i, int j) {
  if (i == 0 && j == 0) return 1;
  return rooted(!parent_black, i, j);
}

}  // namespace

long long black_rooted_by_recursion(int i, int j) { return rooted(true, i, j); }
long long white_rooted_by_recursion(int i, int j) { return rooted(false, i, j); }

bool brute_separating_4cycle(const PlanarMap& m) {
  const int V = m.num_vertices();
  std::vector<std::set<int>> adj(V);
  for (int d = 0; d < m.darts(); ++d)
    if (!m.is_stem(d)) adj[m.vertex(d)].insert(m.head(d));
  std::set<std::set<int>> facial;
  for (const auto& f : m.faces())
    if (f.degree == 4) {
      std::set<int> vs;
      for (int d : f.darts) vs.insert(m.vertex(d));
      if (vs.size() == 4) facial.insert(vs);
    }
  for (int a = 0; a < V; ++a)
    for (int b : adj[a])
      for (int c : adj[b])
        for (int d : adj[c]) {
          if (a == c || b == d || a == b || d == a || !adj[d].count(a)) continue;
          if (!facial.count({a, b, c, d})) return true;
        }
  return false;
}

}  // namespace pmaps::testing
