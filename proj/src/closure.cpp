#include "pmaps/closure.hpp"

#include <algorithm>
#include <numeric>

namespace pmaps {

namespace {

void require_tree(const PlanarMap& tree) {
  if (classify(tree) != MapClass::BinaryTreeMap || tree.num_vertices() < 1)
    throw Error(Errc::InvalidArgument, "input is not a binary tree");
}

// Closure state over the tree darts plus one reserved opposite dart per stem.
struct ClosureState {
  RawMap raw;
  int tree_darts = 0;
  std::vector<int> stems;    // tree stems in id order
  std::vector<int> partner;  // tree dart -> reserved opposite dart, -1 otherwise
  std::vector<char> closed;  // per tree dart

  explicit ClosureState(const PlanarMap& tree) {
    tree_darts = tree.darts();
    raw.alpha = tree.alpha_vec();
    raw.sigma = tree.sigma_vec();
    partner.assign(tree_darts, -1);
    closed.assign(tree_darts, 0);
    for (int d = 0; d < tree_darts; ++d)
      if (tree.is_stem(d)) {
        stems.push_back(d);
        partner[d] = raw.add_dart();
      }
  }
  bool is_open_stem(int d) const { return d < tree_darts && partner[d] >= 0 && !closed[d]; }
  int phi(int d) const { return raw.sigma[raw.alpha[d]]; }
  // Face (s', h1, h2, h3) where h3 is the third entire dart after s.
  void local_close(int s, int h3) {
    int p = partner[s];
    raw.link(s, p);
    raw.insert_after(raw.alpha[h3], p);
    closed[s] = 1;
  }
};

int walk_start(const PlanarMap& tree) { return tree.rooted() ? tree.root_dart() : 0; }

// Matches stems (weight 3) with the entire darts that follow them cyclically.
void stack_closure(ClosureState& st, const PlanarMap& tree) {
  struct Open {
    int stem, need, last;
  };
  std::vector<Open> stack;
  std::vector<int> pending;
  auto credit = [&](int x, bool record) {
    while (true) {
      if (stack.empty()) {
        if (record) pending.push_back(x);
        return;
      }
      Open& top = stack.back();
      top.last = x;
      if (--top.need > 0) return;
      int s = top.stem;
      st.local_close(s, top.last);
      stack.pop_back();
      x = s;
    }
  };
  int start = walk_start(tree), d = start;
  do {
    if (tree.is_stem(d))
      stack.push_back({d, 3, -1});
    else
      credit(d, true);
    d = tree.phi(d);
  } while (d != start);
  std::vector<int> first = std::move(pending);
  pending.clear();
  for (int x : first) credit(x, false);
}

void random_closure(ClosureState& st, Rng& rng) {
  while (true) {
    std::vector<std::pair<int, int>> avail;
    for (int s : st.stems) {
      if (st.closed[s]) continue;
      int h = s, ok = 1;
      for (int t = 0; t < 3 && ok; ++t) {
        h = st.phi(h);
        ok = !st.is_open_stem(h);
      }
      if (ok) avail.push_back({s, h});
    }
    if (avail.empty()) return;
    std::uniform_int_distribution<size_t> pick(0, avail.size() - 1);
    auto [s, h3] = avail[pick(rng)];
    st.local_close(s, h3);
  }
}

// One dart on the face that still carries open stems.
int stem_face_dart(const ClosureState& st) {
  for (int s : st.stems)
    if (!st.closed[s]) return s;
  return -1;
}

}  // namespace

std::vector<int> outer_cycle(const PlanarMap& m) {
  if (!m.has_outer()) throw Error(Errc::MissingRoot, "map has no outer face");
  int start = m.rooted() ? m.root_dart() : m.face_first(m.outer_face());
  std::vector<int> vs;
  int d = start;
  do {
    vs.push_back(m.vertex(d));
    d = m.phi(d);
  } while (d != start);
  return vs;
}

PartialClosure partial_closure(const PlanarMap& tree, Rng* rng) {
  require_tree(tree);
  ClosureState st(tree);
  if (rng)
    random_closure(st, *rng);
  else
    stack_closure(st, tree);
  // drop the opposite darts that were never used
  std::vector<int> remap(st.raw.size(), -1);
  int next = 0;
  for (int d = 0; d < st.raw.size(); ++d)
    if (d < st.tree_darts || st.raw.alpha[d] != d) remap[d] = next++;
  std::vector<int> alpha(next), sigma(next);
  for (int d = 0; d < st.raw.size(); ++d) {
    if (remap[d] < 0) continue;
    alpha[remap[d]] = remap[st.raw.alpha[d]];
    sigma[remap[d]] = remap[st.raw.sigma[d]];
  }
  PartialClosure pc;
  int sd = stem_face_dart(st);
  pc.map = build_map(std::move(alpha), std::move(sigma), std::nullopt, sd);
  for (int s : st.stems) pc.stems_left += !st.closed[s];
  if (sd >= 0) {
    int d = sd;
    do {
      pc.outer_entire += !pc.map.is_stem(d);
      d = pc.map.phi(d);
    } while (d != sd);
  }
  return pc;
}

ClosureResult close(const PlanarMap& tree) {
  require_tree(tree);
  ClosureState st(tree);
  stack_closure(st, tree);
  RawMap& raw = st.raw;

  // open stems in outer-walk order, with the entire darts after each
  std::vector<int> open_stems, gap;
  {
    int any = stem_face_dart(st);
    if (any < 0) throw Error(Errc::InvalidArgument, "partial closure left no stem");
    std::vector<int> walk;
    int d = any;
    do {
      walk.push_back(d);
      d = st.is_open_stem(d) ? raw.sigma[d] : st.phi(d);
    } while (d != any);
    size_t s0 = 0;
    int root = tree.rooted() ? tree.root_dart() : -1;
    auto at = std::find(walk.begin(), walk.end(), root);
    if (at != walk.end())
      s0 = at - walk.begin();
    else
      s0 = std::min_element(walk.begin(), walk.end()) - walk.begin();
    std::rotate(walk.begin(), walk.begin() + s0, walk.end());
    for (int x : walk) {
      if (st.is_open_stem(x)) {
        open_stems.push_back(x);
        gap.push_back(0);
      } else if (!gap.empty()) {
        ++gap.back();
      }
    }
    // entire darts before the first stem belong to the last gap
    for (int x : walk) {
      if (st.is_open_stem(x)) break;
      ++gap.back();
    }
  }

  const int base = raw.size();
  for (int k = 0; k < 12; ++k) raw.add_dart();
  auto a = [&](int h) { return base + 2 * (((h % 6) + 6) % 6); };
  auto b = [&](int h) { return base + 2 * (((h % 6) + 6) % 6) + 1; };
  for (int h = 0; h < 6; ++h) {
    raw.link(a(h), b(h));
    raw.sigma[a(h)] = b(h - 1);
    raw.sigma[b(h - 1)] = a(h);
  }
  std::vector<int> where(open_stems.size());
  int pos = 0;
  for (size_t k = 0; k < open_stems.size(); ++k) {
    if (k > 0) pos += 2 - gap[k - 1];
    where[k] = pos;
  }
  if (pos + 2 - gap.back() != 6)
    throw Error(Errc::InvalidArgument, "open stems do not wrap around the hexagon once");
  // stems that wrap back onto H0 precede the first stem around that vertex
  std::vector<size_t> order;
  for (size_t k = 0; k < open_stems.size(); ++k)
    if (where[k] == 6) order.push_back(k);
  for (size_t k = 0; k < open_stems.size(); ++k)
    if (where[k] < 6) order.push_back(k);
  for (size_t k : order) {
    int s = open_stems[k], p = st.partner[s];
    raw.link(s, p);
    raw.insert_after(a(where[k]), p);
    st.closed[s] = 1;
  }

  ClosureResult res;
  std::vector<Color> colors;
  {
    PlanarMap plain = build_map(raw.alpha, raw.sigma, a(0));
    const int n = tree.num_vertices();
    PlanarMap tc = tree.has_colors() ? tree : bicolor(tree, tree.vertex(walk_start(tree)), Color::Black);
    colors.assign(plain.num_vertices(), Color::Black);
    for (int v = 0; v < n; ++v) colors[v] = tc.color(v);
    Color h0 = flip(tc.dart_color(open_stems[0]));
    for (int h = 0; h < 6; ++h) {
      int v = plain.vertex(a(h));
      colors[v] = (h % 2 == 0) ? h0 : flip(h0);
      res.hexagon.push_back(v);
    }
  }
  res.dissection = build_map(raw.alpha, raw.sigma, a(0), -1, colors);
  res.orient.dir.assign(raw.size(), 0);
  for (int d = 0; d < st.tree_darts; ++d) res.orient.dir[d] = 1;
  res.stem_map.assign(st.tree_darts, -1);
  for (int s : st.stems) {
    res.orient.dir[st.partner[s]] = -1;
    res.stem_map[s] = st.partner[s];
  }
  return res;
}

PlanarMap open(const PlanarMap& d, const TriOrientation& o, std::optional<int> root_dart) {
  TriReport rep = verify_triorientation(d, o);
  if (rep.circuit) throw Error(Errc::HasClockwiseCircuit, "tri-orientation has a clockwise circuit");
  if (!rep.ok()) throw Error(Errc::InvalidTriOrientation, rep.issues.front());
  std::vector<int> remap(d.darts(), -1);
  int next = 0;
  for (int x = 0; x < d.darts(); ++x)
    if (o.dir[x] == 1) remap[x] = next++;
  std::vector<int> alpha(next), sigma(next);
  for (int x = 0; x < d.darts(); ++x) {
    if (remap[x] < 0) continue;
    int y = d.alpha(x);
    alpha[remap[x]] = remap[y] >= 0 ? remap[y] : remap[x];
    int z = d.sigma(x);
    while (remap[z] < 0) z = d.sigma(z);
    sigma[remap[x]] = remap[z];
  }
  std::optional<int> root;
  if (root_dart) {
    if (*root_dart < 0 || *root_dart >= d.darts() || remap[*root_dart] < 0)
      throw Error(Errc::InvalidArgument, "tree root must be an outward dart");
    root = remap[*root_dart];
  }
  std::vector<Color> colors;
  if (d.has_colors()) {
    PlanarMap shape = build_map(alpha, sigma);
    colors.resize(shape.num_vertices());
    for (int x = 0; x < d.darts(); ++x)
      if (remap[x] >= 0) colors[shape.vertex(remap[x])] = d.dart_color(x);
  }
  return build_map(std::move(alpha), std::move(sigma), root, -1, std::move(colors));
}

TriReport verify_triorientation(const PlanarMap& d, const TriOrientation& o) {
  TriReport rep;
  if (static_cast<int>(o.dir.size()) != d.darts()) {
    rep.issues.push_back("orientation size does not match the dart count");
    return rep;
  }
  if (!d.has_outer() || d.face_degree(d.outer_face()) != 6 || d.num_stems() != 0) {
    rep.issues.push_back("map is not a hexagon dissection with a known outer face");
    return rep;
  }
  const int of = d.outer_face();
  std::vector<char> outer_v(d.num_vertices(), 0), outer_e(d.darts(), 0);
  for (int x : d.face_darts(of)) {
    outer_v[d.vertex(x)] = 1;
    outer_e[x] = outer_e[d.alpha(x)] = 1;
  }
  std::vector<int> outdeg(d.num_vertices(), 0);
  for (int x = 0; x < d.darts(); ++x) {
    int v = o.dir[x];
    if (v < -1 || v > 1) {
      rep.issues.push_back("dart " + std::to_string(x) + " has direction outside {-1,0,1}");
      continue;
    }
    if (outer_e[x] != (v == 0))
      rep.issues.push_back("dart " + std::to_string(x) + (outer_e[x] ? " on the hexagon is oriented" : " is inner but unoriented"));
    outdeg[d.vertex(x)] += (v == 1);
  }
  for (int v = 0; v < d.num_vertices(); ++v) {
    int want = outer_v[v] ? 0 : 3;
    if (outdeg[v] != want)
      rep.issues.push_back("vertex " + std::to_string(v) + " has outdegree " + std::to_string(outdeg[v]) +
                           ", expected " + std::to_string(want));
  }
  for (int x = 0; x < d.darts(); ++x) {
    int y = d.alpha(x);
    if (x > y || outer_e[x]) continue;
    if (o.dir[x] == -1 && o.dir[y] == -1) rep.issues.push_back("edge of dart " + std::to_string(x) + " is inward at both ends");
    if (o.dir[x] == 1 && o.dir[y] == 1) ++rep.bi_oriented;
    if (o.dir[x] + o.dir[y] == 0 && o.dir[x] != 0) ++rep.simply_oriented;
  }
  const int n = d.num_vertices() - 6;
  if (rep.bi_oriented != n - 1 || rep.simply_oriented != n + 2)
    rep.issues.push_back("found " + std::to_string(rep.bi_oriented) + " bi-oriented and " +
                         std::to_string(rep.simply_oriented) + " simply oriented edges, expected " +
                         std::to_string(n - 1) + " and " + std::to_string(n + 2));
  std::vector<char> usable(d.darts());
  for (int x = 0; x < d.darts(); ++x) usable[x] = o.dir[x] == 1;
  rep.circuit = find_clockwise_circuit(d, usable);
  if (rep.circuit) rep.issues.push_back("clockwise circuit of length " + std::to_string(rep.circuit->darts.size()));
  if (rep.ok()) {
    // bi-oriented edges must span the inner vertices as a tree
    std::vector<int> comp(d.num_vertices());
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int v) {
      while (comp[v] != v) v = comp[v] = comp[comp[v]];
      return v;
    };
    int merges = 0;
    for (int x = 0; x < d.darts(); ++x)
      if (x < d.alpha(x) && o.dir[x] == 1 && o.dir[d.alpha(x)] == 1) {
        int a = find(d.vertex(x)), b = find(d.head(x));
        if (a != b) {
          comp[a] = b;
          ++merges;
        }
      }
    if (merges != n - 1) rep.issues.push_back("bi-oriented edges do not form a spanning tree of the inner vertices");
  }
  return rep;
}

}  // namespace pmaps
