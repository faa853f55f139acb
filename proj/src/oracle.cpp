#include "pmaps/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pmaps/closure.hpp"

namespace pmaps {

namespace {

std::vector<std::vector<bool>> dyck_words(int n) {
  std::vector<std::vector<bool>> out;
  std::vector<bool> w;
  std::function<void(int, int)> rec = [&](int open, int closed) {
    if (static_cast<int>(w.size()) == 2 * n) {
      out.push_back(w);
      return;
    }
    if (open < n) {
      w.push_back(true);
      rec(open + 1, closed);
      w.pop_back();
    }
    if (closed < open) {
      w.push_back(false);
      rec(open, closed + 1);
      w.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

using Graph = std::vector<std::vector<int>>;  // adjacency lists, simple

bool graph_connected_without(const Graph& g, int x, int y) {
  const int V = static_cast<int>(g.size());
  int start = -1, alive = 0;
  for (int v = 0; v < V; ++v)
    if (v != x && v != y) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<char> seen(V, 0);
  seen[start] = 1;
  std::vector<int> st{start};
  int count = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : g[v])
      if (w != x && w != y && !seen[w]) {
        seen[w] = 1;
        ++count;
        st.push_back(w);
      }
  }
  return count == alive;
}

bool graph_3_connected(const Graph& g) {
  const int V = static_cast<int>(g.size());
  if (V < 4) return false;
  for (int x = 0; x < V; ++x)
    for (int y = x; y < V; ++y)
      if (!graph_connected_without(g, x, y)) return false;
  return true;
}

// Embeddings of a simple graph; calls f with (alpha, sigma) for every genus-0 rotation system.
void planar_rotations(const std::vector<std::pair<int, int>>& edges, int V,
                      const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
  const int E = static_cast<int>(edges.size());
  std::vector<int> alpha(2 * E);
  std::vector<std::vector<int>> at(V);
  for (int e = 0; e < E; ++e) {
    alpha[2 * e] = 2 * e + 1;
    alpha[2 * e + 1] = 2 * e;
    at[edges[e].first].push_back(2 * e);
    at[edges[e].second].push_back(2 * e + 1);
  }
  std::vector<int> sigma(2 * E);
  const int want_faces = E - V + 2;
  std::function<void(int)> rec = [&](int v) {
    if (v == V) {
      std::vector<char> seen(2 * E, 0);
      int faces = 0;
      for (int d = 0; d < 2 * E; ++d) {
        if (seen[d]) continue;
        ++faces;
        for (int x = d; !seen[x]; x = sigma[alpha[x]]) seen[x] = 1;
      }
      if (faces == want_faces) f(alpha, sigma);
      return;
    }
    std::vector<int> rest(at[v].begin() + 1, at[v].end());
    std::sort(rest.begin(), rest.end());
    do {
      int prev = at[v][0];
      for (int d : rest) {
        sigma[prev] = d;
        prev = d;
      }
      sigma[prev] = at[v][0];
      rec(v + 1);
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  rec(0);
}

// Unlabelled simple graphs on V vertices with E edges and minimum degree 3.
std::vector<std::vector<std::pair<int, int>>> graphs_min_degree3(int V, int E) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < V; ++a)
    for (int b = a + 1; b < V; ++b) pairs.push_back({a, b});
  const int P = static_cast<int>(pairs.size());
  std::vector<int> perm(V);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> pick(E);
  std::function<void(int, int)> rec = [&](int k, int from) {
    if (k == E) {
      std::vector<int> deg(V, 0);
      for (int p : pick) ++deg[pairs[p].first], ++deg[pairs[p].second];
      if (*std::min_element(deg.begin(), deg.end()) < 3) return;
      // canonical form: minimal sorted edge code over vertex permutations
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<int> best;
      do {
        std::vector<int> code;
        for (int p : pick) {
          int a = perm[pairs[p].first], b = perm[pairs[p].second];
          code.push_back(std::min(a, b) * V + std::max(a, b));
        }
        std::sort(code.begin(), code.end());
        if (best.empty() || code < best) best = code;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) return;
      std::vector<std::pair<int, int>> edges;
      for (int p : pick) edges.push_back(pairs[p]);
      out.push_back(edges);
      return;
    }
    for (int p = from; p <= P - (E - k); ++p) {
      pick[k] = p;
      rec(k + 1, p + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<PlanarMap> maps_of_graphs(int V, int E, bool triangulated) {
  std::vector<PlanarMap> out;
  for (const auto& edges : graphs_min_degree3(V, E)) {
    Graph g(V);
    for (auto [a, b] : edges) g[a].push_back(b), g[b].push_back(a);
    if (!graph_3_connected(g)) continue;
    planar_rotations(edges, V, [&](const std::vector<int>& alpha, const std::vector<int>& sigma) {
      PlanarMap m = build_map(alpha, sigma);
      if (triangulated)
        for (int f = 0; f < m.num_faces(); ++f)
          if (m.face_degree(f) != 3) return;
      for (int d = 0; d < m.darts(); ++d) out.push_back(m.with_root(d));
    });
  }
  return dedupe(out, true);
}

Graph graph_of(const PlanarMap& m, bool& simple) {
  Graph g(m.num_vertices());
  simple = true;
  std::set<std::pair<int, int>> seen;
  for (int d = 0; d < m.darts(); ++d) {
    if (m.is_stem(d)) continue;
    int a = m.vertex(d), b = m.head(d);
    if (a == b) {
      simple = false;
      continue;
    }
    if (d < m.alpha(d)) {
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) simple = false;
      g[a].push_back(b);
      g[b].push_back(a);
    }
  }
  return g;
}

}  // namespace

std::vector<PlanarMap> dedupe(const std::vector<PlanarMap>& maps, bool rooted) {
  std::set<std::vector<int>> seen;
  std::vector<PlanarMap> out;
  for (const auto& m : maps) {
    auto code = rooted ? canonical_code(m, m.root_dart()) : unrooted_canonical_code(m);
    if (seen.insert(std::move(code)).second) out.push_back(m);
  }
  return out;
}

TreeFamily enumerate_binary_trees(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "need n >= 1");
  if (n > 8) throw Error(Errc::TooLarge, "tree enumeration is capped at n = 8");
  TreeFamily fam;
  for (const auto& w : dyck_words(n)) fam.rooted.push_back(paren_decode(w, n));
  fam.unrooted = dedupe(fam.rooted, false);
  return fam;
}

std::vector<PlanarMap> enumerate_black_rooted(int i, int j) {
  if (i + j > 8) throw Error(Errc::TooLarge, "bicolored tree enumeration is capped at i + j = 8");
  std::vector<PlanarMap> out;
  if (i < 1) return out;
  for (const auto& t : enumerate_binary_trees(i + j).rooted) {
    PlanarMap c = bicolor(t, t.vertex(t.root_dart()), Color::Black);
    int black = 0;
    for (int v = 0; v < c.num_vertices(); ++v) black += c.color(v) == Color::Black;
    if (black == i) out.push_back(c);
  }
  return out;
}

std::vector<PlanarMap> enumerate_dissections(int n) {
  if (n > 6) throw Error(Errc::TooLarge, "dissection enumeration is capped at n = 6");
  std::vector<PlanarMap> out;
  for (const auto& t : enumerate_binary_trees(n).unrooted) out.push_back(close(t.with_root(std::nullopt)).dissection);
  return dedupe(out, false);
}

std::vector<PlanarMap> all_rootings(const std::vector<PlanarMap>& maps, bool outer_only) {
  std::vector<PlanarMap> out;
  for (const auto& m : maps)
    for (int d = 0; d < m.darts(); ++d) {
      if (m.is_stem(d)) continue;
      if (outer_only && m.face(d) != m.outer_face()) continue;
      out.push_back(m.with_root(d));
    }
  return dedupe(out, true);
}

bool has_separating_4cycle(const PlanarMap& m) {
  bool simple = true;
  Graph g = graph_of(m, simple);
  const int V = m.num_vertices();
  std::set<std::array<int, 4>> facial;
  for (int f = 0; f < m.num_faces(); ++f) {
    if (m.face_degree(f) != 4) continue;
    std::array<int, 4> vs;
    int k = 0;
    for (int d : m.face_darts(f)) vs[k++] = m.vertex(d);
    std::sort(vs.begin(), vs.end());
    facial.insert(vs);
  }
  std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
  for (int v = 0; v < V; ++v)
    for (int w : g[v]) adj[v][w] = 1;
  for (int a = 0; a < V; ++a)
    for (int b : g[a])
      for (int d : g[a]) {
        if (b >= d) continue;
        for (int c : g[b]) {
          if (c == a || c == d || !adj[c][d]) continue;
          std::array<int, 4> vs{a, b, c, d};
          std::sort(vs.begin(), vs.end());
          if (vs[0] != a && vs[0] != c) continue;
          if (!facial.count(vs)) return true;
        }
      }
  return false;
}

bool is_3_connected(const PlanarMap& m) {
  if (m.num_edges() > 200) throw Error(Errc::TooLarge, "3-connectivity test is capped at 200 edges");
  if (m.num_stems() > 0) return false;
  bool simple = true;
  Graph g = graph_of(m, simple);
  return simple && m.num_edges() >= 6 && graph_3_connected(g);
}

std::vector<PlanarMap> enumerate_3connected(int edges) {
  if (edges > 10) throw Error(Errc::TooLarge, "3-connected enumeration is capped at 10 edges");
  std::vector<PlanarMap> out;
  for (int V = 4; 3 * V <= 2 * edges; ++V) {
    auto part = maps_of_graphs(V, edges, false);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<PlanarMap> enumerate_triangulations(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative size");
  if (n > 3) throw Error(Errc::TooLarge, "triangulation enumeration is capped at n = 3");
  if (n == 0) {
    // the triangle: two triangular faces
    return {build_map({1, 0, 3, 2, 5, 4}, {5, 2, 1, 4, 3, 0}, 0)};
  }
  return maps_of_graphs(n + 3, 3 * (n + 3) - 6, true);
}

std::vector<std::vector<char>> enumerate_alpha0(const DerivedMap& dm) {
  const PlanarMap& m = dm.map;
  std::vector<int> evs;
  for (int u = 0; u < m.num_vertices(); ++u)
    if (dm.role[u] == VertexRole::EdgeVertex) evs.push_back(u);
  if (evs.size() > 40) throw Error(Errc::TooLarge, "alpha0 enumeration is capped at 40 edges");
  std::vector<int> need(m.num_vertices(), 0), got(m.num_vertices(), 0);
  for (int u = 0; u < m.num_vertices(); ++u) {
    if (dm.role[u] == VertexRole::EdgeVertex) continue;
    need[u] = m.vertex_degree(u) - 3;  // edges that must point into u; stems count toward degree and out
  }
  std::vector<std::vector<int>> choices(evs.size());
  for (size_t k = 0; k < evs.size(); ++k) {
    auto ds = m.vertex_darts(evs[k]);
    bool has_stem = std::any_of(ds.begin(), ds.end(), [&](int d) { return m.is_stem(d); });
    for (int d : ds)
      if (has_stem ? m.is_stem(d) : true) choices[k].push_back(d);
  }
  std::vector<std::vector<char>> result;
  std::vector<int> chosen(evs.size());
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == evs.size()) {
      for (int u = 0; u < m.num_vertices(); ++u)
        if (got[u] != need[u]) return;
      std::vector<char> out(m.darts(), 1);
      for (size_t t = 0; t < evs.size(); ++t)
        for (int d : m.vertex_darts(evs[t])) {
          if (m.is_stem(d)) continue;
          out[d] = d == chosen[t];
          out[m.alpha(d)] = d != chosen[t];
        }
      result.push_back(std::move(out));
      return;
    }
    for (int d : choices[k]) {
      int w = m.is_stem(d) ? -1 : m.head(d);
      if (w >= 0 && got[w] >= need[w]) continue;
      if (w >= 0) ++got[w];
      chosen[k] = d;
      rec(k + 1);
      if (w >= 0) --got[w];
    }
  };
  rec(0);
  return result;
}

}  // namespace pmaps
