#include "pmaps/angular.hpp"

#include <algorithm>

namespace pmaps {

namespace {

PlanarMap build_colored(std::vector<int> alpha, std::vector<int> sigma, std::optional<int> root,
                        const std::vector<Color>& dart_color) {
  PlanarMap m = build_map(std::move(alpha), std::move(sigma), root);
  std::vector<Color> col(m.num_vertices(), Color::Black);
  for (int d = 0; d < m.darts(); ++d) col[m.vertex(d)] = dart_color[d];
  return m.with_colors(std::move(col));
}

// Darts of the outer face in phi order starting at the root.
std::vector<int> outer_darts(const PlanarMap& m) {
  std::vector<int> out;
  int r = m.root_dart(), d = r;
  do {
    out.push_back(d);
    d = m.phi(d);
  } while (d != r);
  return out;
}

void require_no_stems(const PlanarMap& m) {
  if (m.num_stems() != 0) throw Error(Errc::InvalidArgument, "map has stems");
}

}  // namespace

AngularResult angular_of_quadrangulation(const PlanarMap& q0) {
  const int root = q0.root_dart();
  require_no_stems(q0);
  for (int f = 0; f < q0.num_faces(); ++f)
    if (q0.face_degree(f) != 4) throw Error(Errc::NotQuadrangulation, "face of degree != 4");
  PlanarMap q = q0.has_colors() ? q0 : bicolor(q0, q0.vertex(root), Color::Black);
  if (q.dart_color(root) != Color::Black) throw Error(Errc::RootNotBlack, "root vertex is white");

  const int n = q.darts();
  std::vector<int> m(n, -1);
  int k = 0;
  for (int d = 0; d < n; ++d)
    if (q.dart_color(d) == Color::Black) m[d] = k++;
  std::vector<int> alpha(k), sigma(k);
  for (int c = 0; c < n; ++c) {
    if (m[c] < 0) continue;
    int s = q.sigma(c);
    sigma[m[c]] = m[s];
    alpha[m[c]] = m[q.sigma_inv(q.phi(q.phi(s)))];
  }
  AngularResult res;
  res.map = build_map(std::move(alpha), std::move(sigma), m[q.sigma_inv(root)]);
  res.image = std::move(m);
  return res;
}

PlanarMap primal_of_quadrangulation(const PlanarMap& q) { return angular_of_quadrangulation(q).map; }

PlanarMap quadrangulation_of_map(const PlanarMap& m) {
  const int root = m.root_dart();
  require_no_stems(m);
  const int n = m.darts();
  std::vector<int> alpha(2 * n), sigma(2 * n);
  std::vector<Color> col(2 * n);
  for (int c = 0; c < n; ++c) {
    alpha[2 * c] = 2 * c + 1;
    alpha[2 * c + 1] = 2 * c;
    sigma[2 * c] = 2 * m.sigma(c);
    sigma[2 * c + 1] = 2 * m.sigma_inv(m.alpha(c)) + 1;
    col[2 * c] = Color::Black;
    col[2 * c + 1] = Color::White;
  }
  return build_colored(std::move(alpha), std::move(sigma), 2 * root, col);
}

bool is_complete(const PlanarMap& d) {
  if (!d.has_colors() || !d.has_outer() || d.face_degree(d.outer_face()) != 6) return false;
  int whites = 0;
  for (int h : d.face_darts(d.outer_face())) {
    int v = d.vertex(h);
    if (d.color(v) == Color::White) {
      ++whites;
      if (d.vertex_degree(v) != 2) return false;
    }
  }
  return whites == 3;
}

PlanarMap color_complete(const PlanarMap& d) {
  if (!d.has_outer() || d.face_degree(d.outer_face()) != 6)
    throw Error(Errc::NotComplete, "outer face is not a hexagon");
  for (int h : d.face_darts(d.outer_face())) {
    if (d.vertex_degree(d.vertex(h)) == 2) {
      PlanarMap c = bicolor(d.without_colors(), d.vertex(h), Color::White);
      if (!is_complete(c)) break;
      return c;
    }
  }
  throw Error(Errc::NotComplete, "hexagon vertices of degree 2 do not form a color class");
}

AngularResult angular_of_complete_dissection(const PlanarMap& d0) {
  const int root = d0.root_dart();
  require_no_stems(d0);
  PlanarMap d = d0.has_colors() ? d0 : color_complete(d0);
  if (!is_complete(d)) throw Error(Errc::NotComplete, "dissection is not complete");
  if (d.dart_color(root) != Color::Black) throw Error(Errc::RootNotBlack, "root vertex is white");
  const int outer = d.outer_face();
  for (int f = 0; f < d.num_faces(); ++f)
    if (f != outer && d.face_degree(f) != 4)
      throw Error(Errc::NotQuadrangulation, "inner face of degree != 4");

  const int n = d.darts();
  auto inner_corner = [&](int c) { return d.face(d.sigma(c)) != outer; };
  std::vector<int> m(n, -1);
  int k = 0;
  for (int c = 0; c < n; ++c)
    if (d.dart_color(c) == Color::Black && inner_corner(c)) m[c] = k++;
  std::vector<int> alpha(k), sigma(k);
  for (int c = 0; c < n; ++c) {
    if (m[c] < 0) continue;
    int s = d.sigma(c);
    sigma[m[c]] = inner_corner(s) ? m[s] : m[d.sigma(s)];
    alpha[m[c]] = m[d.sigma_inv(d.phi(d.phi(s)))];
  }
  AngularResult res;
  res.map = build_map(std::move(alpha), std::move(sigma), m[root]);
  res.image = std::move(m);
  return res;
}

PlanarMap primal_of_complete_dissection(const PlanarMap& d) {
  return angular_of_complete_dissection(d).map;
}

PlanarMap complete_dissection_of_map(const PlanarMap& g) {
  const int root = g.root_dart();
  require_no_stems(g);
  const int outer = g.outer_face();
  if (g.face_degree(outer) != 3) throw Error(Errc::NotOuterTriangular, "outer face degree != 3");
  const int n = g.darts();

  // q(c) = qid[c], p(c) = qid[c] + 1 for inner corners; then four darts per
  // outer dart o: hexagon dart at vertex(o), its two darts at the white
  // vertex W_o, and the hexagon dart at head(o).
  std::vector<int> qid(n, -1);
  int k = 0;
  for (int c = 0; c < n; ++c)
    if (g.face(g.sigma(c)) != outer) {
      qid[c] = k;
      k += 2;
    }
  std::vector<int> od = outer_darts(g);
  std::vector<int> oidx(n, -1);
  for (int i = 0; i < 3; ++i) oidx[od[i]] = i;
  const int base = k;
  auto hn = [&](int o) { return base + 4 * oidx[o]; };
  auto w1 = [&](int o) { return base + 4 * oidx[o] + 1; };
  auto w2 = [&](int o) { return base + 4 * oidx[o] + 2; };
  auto hp = [&](int o) { return base + 4 * oidx[o] + 3; };
  const int total = base + 12;

  std::vector<int> alpha(total), sigma(total);
  std::vector<Color> col(total, Color::White);
  for (int c = 0; c < n; ++c) {
    if (qid[c] < 0) continue;
    int q = qid[c], p = q + 1;
    alpha[q] = p;
    alpha[p] = q;
    col[q] = Color::Black;
    int s = g.sigma(c);
    if (g.face(g.sigma(s)) == outer)
      sigma[q] = hp(g.alpha(s));  // next corner is the outer one
    else
      sigma[q] = qid[s];
    sigma[p] = qid[g.sigma_inv(g.alpha(c))] + 1;
  }
  for (int o : od) {
    int v_in = g.alpha(g.sigma_inv(o));  // outer dart entering vertex(o)
    alpha[hn(o)] = w1(o);
    alpha[w1(o)] = hn(o);
    alpha[hp(o)] = w2(o);
    alpha[w2(o)] = hp(o);
    sigma[w1(o)] = w2(o);
    sigma[w2(o)] = w1(o);
    sigma[hp(v_in)] = hn(o);
    sigma[hn(o)] = qid[o];
    col[hn(o)] = col[hp(o)] = Color::Black;
  }
  return build_colored(std::move(alpha), std::move(sigma), hn(root), col);
}

PlanarMap complete_dissection(const PlanarMap& d) {
  const int root = d.root_dart();
  if (!d.has_colors()) throw Error(Errc::NotBicolored, "dissection has no colors");
  if (d.face_degree(d.outer_face()) != 6) throw Error(Errc::InvalidArgument, "outer face is not a hexagon");
  RawMap raw{d.alpha_vec(), d.sigma_vec()};
  std::vector<Color> dc(d.darts());
  for (int x = 0; x < d.darts(); ++x) dc[x] = d.dart_color(x);
  int new_root = root;
  std::vector<int> od = outer_darts(d);
  auto sigma_inv = [&](int a) {
    int c = a;
    while (raw.sigma[c] != a) c = raw.sigma[c];
    return c;
  };
  for (int i = 0; i < 6; ++i) {
    int a = od[(i + 5) % 6], b = od[i];  // a enters v, b leaves v
    int v = d.vertex(b);
    if (d.color(v) != Color::White || d.vertex_degree(v) < 3) continue;
    int x = raw.add_dart(), xr = raw.add_dart(), y = raw.add_dart(), yr = raw.add_dart();
    dc.push_back(dc[a]);
    dc.push_back(Color::White);
    dc.push_back(Color::White);
    dc.push_back(dc[raw.alpha[b]]);
    raw.link(x, xr);
    raw.link(y, yr);
    raw.insert_after(sigma_inv(a), x);
    raw.sigma[xr] = y;
    raw.sigma[y] = xr;
    raw.insert_after(raw.alpha[b], yr);
    if (root == a) new_root = x;
    if (root == b) new_root = y;
  }
  if (raw.size() == d.darts()) return d;
  return build_colored(std::move(raw.alpha), std::move(raw.sigma), new_root, dc);
}

PlanarMap iota(const PlanarMap& q) {
  const int r = q.root_dart(), ar = q.alpha(r);
  if (q.is_stem(r)) throw Error(Errc::InvalidArgument, "root is a stem");
  const int n = q.darts();
  std::vector<int> id(n, -1);
  int k = 0;
  for (int x = 0; x < n; ++x)
    if (x != r && x != ar) id[x] = k++;
  std::vector<int> alpha(k), sigma(k);
  std::vector<Color> dc(k);
  for (int x = 0; x < n; ++x) {
    if (id[x] < 0) continue;
    int s = q.sigma(x);
    while (s == r || s == ar) s = q.sigma(s);
    alpha[id[x]] = id[q.alpha(x)];
    sigma[id[x]] = id[s];
    if (q.has_colors()) dc[id[x]] = q.dart_color(x);
  }
  int new_root = id[q.sigma(r)];
  if (!q.has_colors()) return build_map(std::move(alpha), std::move(sigma), new_root);
  return build_colored(std::move(alpha), std::move(sigma), new_root, dc);
}

PlanarMap pi(const PlanarMap& d) {
  const int r = d.root_dart();
  if (d.face_degree(d.outer_face()) != 6) throw Error(Errc::InvalidArgument, "outer face is not a hexagon");
  int h3 = d.phi(d.phi(r));
  RawMap raw{d.alpha_vec(), d.sigma_vec()};
  int x = raw.add_dart(), xr = raw.add_dart();
  raw.link(x, xr);
  raw.insert_after(d.sigma_inv(r), x);
  raw.insert_after(d.alpha(h3), xr);
  if (!d.has_colors()) return build_map(std::move(raw.alpha), std::move(raw.sigma), x);
  std::vector<Color> dc(raw.size());
  for (int y = 0; y < d.darts(); ++y) dc[y] = d.dart_color(y);
  dc[x] = d.dart_color(r);
  dc[xr] = d.dart_color(d.alpha(h3));
  return build_colored(std::move(raw.alpha), std::move(raw.sigma), x, dc);
}

namespace {

struct Hexagon {
  int s, u1, u2, t, u4, u5;
};

Hexagon hexagon_of(const PlanarMap& d) {
  if (d.face_degree(d.outer_face()) != 6) throw Error(Errc::InvalidArgument, "outer face is not a hexagon");
  std::vector<int> od = outer_darts(d);
  return {d.vertex(od[0]), d.vertex(od[1]), d.vertex(od[2]),
          d.vertex(od[3]), d.vertex(od[4]), d.vertex(od[5])};
}

bool is_outer_path(const Hexagon& h, int x, int y) {
  return (x == h.u1 && y == h.u2) || (x == h.u5 && y == h.u4);
}

}  // namespace

std::vector<DecompositionPath> decomposition_paths(const PlanarMap& d) {
  const int r = d.root_dart();
  Hexagon h = hexagon_of(d);
  std::vector<char> near_t(d.num_vertices(), 0);
  for (int e : d.vertex_darts(h.t))
    if (int w = d.head(e); w >= 0) near_t[w] = 1;
  std::vector<DecompositionPath> out;
  int e = r;
  do {
    int x = d.head(e);
    if (x != h.t) {
      int a = d.alpha(e);
      for (int f = d.sigma(a); f != a; f = d.sigma(f)) {
        int y = d.head(f);
        if (y != h.s && near_t[y]) out.push_back({h.s, x, y, h.t, !is_outer_path(h, x, y)});
      }
    }
    e = d.sigma(e);
  } while (e != r);
  return out;
}

bool is_undecomposable(const PlanarMap& d) {
  Hexagon h = hexagon_of(d);
  std::vector<int> ns;
  for (int e : d.vertex_darts(h.s)) ns.push_back(d.head(e));
  std::sort(ns.begin(), ns.end());
  int e0 = d.vertex_first(h.t), e = e0;
  do {
    int y = d.head(e);
    if (y != h.s) {
      int a = d.alpha(e);
      for (int f = d.sigma(a); f != a; f = d.sigma(f)) {
        int x = d.head(f);
        if (std::binary_search(ns.begin(), ns.end(), x) && !is_outer_path(h, x, y)) return false;
      }
    }
    e = d.sigma(e);
  } while (e != e0);
  return true;
}

namespace {

int dart_between(const PlanarMap& d, int u, int v) {
  for (int e : d.vertex_darts(u))
    if (d.head(e) == v) return e;
  throw Error(Errc::InvalidArgument, "vertices are not adjacent");
}

// Faces enclosed between two internally disjoint decomposition paths,
// returned as a rooted dissection labelled by the vertices of d.
PlanarMap component_between(const PlanarMap& d, const DecompositionPath& left,
                            const DecompositionPath& right) {
  std::vector<int> cycle{left.s, left.x, left.y, left.t, right.y, right.x};
  std::vector<char> boundary(d.darts(), 0);
  for (int i = 0; i < 6; ++i) {
    int e = dart_between(d, cycle[i], cycle[(i + 1) % 6]);
    boundary[e] = boundary[d.alpha(e)] = 1;
  }
  std::vector<char> seen(d.num_faces(), 0);
  std::vector<int> stack{d.face(d.alpha(dart_between(d, left.s, left.x)))};
  seen[stack[0]] = 1;
  std::vector<std::vector<int>> faces{cycle};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    std::vector<int> verts;
    for (int e : d.face_darts(f)) {
      verts.push_back(d.vertex(e));
      int g = d.face(d.alpha(e));
      if (!boundary[e] && !seen[g]) {
        seen[g] = 1;
        stack.push_back(g);
      }
    }
    faces.push_back(std::move(verts));
  }
  std::vector<int> label;
  PlanarMap u = map_from_faces(faces, {left.s, left.x}, &label);
  if (!d.has_colors()) return u;
  std::vector<Color> col(u.num_vertices());
  for (int v = 0; v < u.num_vertices(); ++v) col[v] = d.color(label[v]);
  return u.with_colors(std::move(col));
}

}  // namespace

DecompositionWord decomposition_word(const PlanarMap& d) {
  std::vector<DecompositionPath> paths = decomposition_paths(d);
  DecompositionWord w;
  for (size_t i = 1; i < paths.size(); ++i) {
    const auto& a = paths[i - 1];
    const auto& b = paths[i];
    if (a.x == b.x)
      w.push_back({'s', {}});
    else if (a.y == b.y)
      w.push_back({'t', {}});
    else
      w.push_back({'U', component_between(d, a, b)});
  }
  return w;
}

PlanarMap glue_decomposition_word(const DecompositionWord& w) {
  std::string shape = word_shape(w);
  if (shape.empty() || shape == "s" || shape == "t" || shape == "st" || shape == "ts" ||
      shape.find("ss") != std::string::npos || shape.find("tt") != std::string::npos)
    throw Error(Errc::InvalidArgument, "not a decomposition word: '" + shape + "'");
  const int s = 0, t = 1;
  int next = 4, x = 2, y = 3;
  std::vector<std::vector<int>> faces;
  for (const auto& letter : w) {
    if (letter.kind == 's') {
      int y2 = next++;
      faces.push_back({x, y2, t, y});
      y = y2;
    } else if (letter.kind == 't') {
      int x2 = next++;
      faces.push_back({s, x2, y, x});
      x = x2;
    } else {
      const PlanarMap& u = letter.component;
      std::vector<int> od = outer_darts(u);
      if (od.size() != 6) throw Error(Errc::InvalidArgument, "component outer face is not a hexagon");
      int x2 = next++, y2 = next++;
      std::vector<int> label(u.num_vertices(), -1);
      int hex[6] = {s, x, y, t, y2, x2};
      for (int i = 0; i < 6; ++i) label[u.vertex(od[i])] = hex[i];
      for (int v = 0; v < u.num_vertices(); ++v)
        if (label[v] < 0) label[v] = next++;
      for (int f = 0; f < u.num_faces(); ++f) {
        if (f == u.outer_face()) continue;
        std::vector<int> verts;
        for (int e : u.face_darts(f)) verts.push_back(label[u.vertex(e)]);
        faces.push_back(std::move(verts));
      }
      x = x2;
      y = y2;
    }
  }
  faces.push_back({s, 2, 3, t, y, x});
  return map_from_faces(faces, {s, 2});
}

std::string word_shape(const DecompositionWord& w) {
  std::string out;
  for (const auto& l : w) out.push_back(l.kind);
  return out;
}

std::string format_decomposition_word(const DecompositionWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out.push_back(' ');
    if (l.kind == 'U')
      out += "{\n" + to_pmap(l.component) + "}";
    else
      out.push_back(l.kind);
  }
  return out;
}

bool words_equal(const DecompositionWord& a, const DecompositionWord& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind) return false;
    if (a[i].kind == 'U' && !maps_isomorphic(a[i].component, b[i].component, true)) return false;
  }
  return true;
}

}  // namespace pmaps
