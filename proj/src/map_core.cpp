#include "pmaps/map_core.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <sstream>

namespace pmaps {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::NonInvolution: return "NonInvolution";
    case Errc::NotPermutation: return "NotPermutation";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonPlanar: return "NonPlanar";
    case Errc::OddCycle: return "OddCycle";
    case Errc::NotSimpleCycle: return "NotSimpleCycle";
    case Errc::MissingRoot: return "MissingRoot";
    case Errc::ParseError: return "ParseError";
    case Errc::NotBlackRooted: return "NotBlackRooted";
    case Errc::NotBicolored: return "NotBicolored";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::CompositionMismatch: return "CompositionMismatch";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::UnbalancedWord: return "UnbalancedWord";
    case Errc::TrailingBits: return "TrailingBits";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::HasClockwiseCircuit: return "HasClockwiseCircuit";
    case Errc::InvalidTriOrientation: return "InvalidTriOrientation";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NotOuterTriangular: return "NotOuterTriangular";
    case Errc::NoEligibleVertex: return "NoEligibleVertex";
    case Errc::NotQuadrangulation: return "NotQuadrangulation";
    case Errc::RootNotBlack: return "RootNotBlack";
    case Errc::NotComplete: return "NotComplete";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotPlanarMap: return "NotPlanarMap";
    case Errc::MalformedHeader: return "MalformedHeader";
    case Errc::BadRootIndex: return "BadRootIndex";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TrialCapReached: return "TrialCapReached";
  }
  return "Unknown";
}

std::vector<int> PlanarMap::vertex_darts(int v) const {
  std::vector<int> out;
  int d0 = vert_first_[v], d = d0;
  do {
    out.push_back(d);
    d = sigma_[d];
  } while (d != d0);
  return out;
}

std::vector<int> PlanarMap::face_darts(int f) const {
  std::vector<int> out;
  int d0 = face_first_[f], d = d0;
  do {
    out.push_back(d);
    d = phi(d);
  } while (d != d0);
  return out;
}

std::vector<FaceView> PlanarMap::faces() const {
  std::vector<FaceView> out;
  for (int f = 0; f < num_faces(); ++f) {
    FaceView fv;
    fv.id = f;
    fv.darts = face_darts(f);
    fv.degree = static_cast<int>(fv.darts.size());
    fv.is_outer = (f == outer_);
    out.push_back(std::move(fv));
  }
  return out;
}

int PlanarMap::root_dart() const {
  if (!root_) throw Error(Errc::MissingRoot, "map has no root");
  return *root_;
}

bool PlanarMap::is_outer_vertex(int v) const {
  if (outer_ < 0) return false;
  int d0 = vert_first_[v], d = d0;
  do {
    if (face_[d] == outer_) return true;
    d = sigma_[d];
  } while (d != d0);
  return false;
}

PlanarMap PlanarMap::with_root(std::optional<int> root) const {
  if (root && (*root < 0 || *root >= darts())) throw Error(Errc::InvalidArgument, "root out of range");
  PlanarMap m = *this;
  m.root_ = root;
  if (root) m.outer_ = face_[*root];
  return m;
}

PlanarMap PlanarMap::with_outer_dart(int d) const {
  PlanarMap m = *this;
  m.outer_ = d < 0 ? -1 : face_[d];
  return m;
}

PlanarMap PlanarMap::with_colors(std::vector<Color> colors) const {
  if (static_cast<int>(colors.size()) != num_vertices())
    throw Error(Errc::NotBicolored, "color vector size differs from vertex count");
  for (int d = 0; d < darts(); ++d)
    if (!is_stem(d) && colors[vert_[d]] == colors[vert_[alpha_[d]]])
      throw Error(Errc::NotBicolored, "edge with equal end colors at dart " + std::to_string(d));
  PlanarMap m = *this;
  m.colors_ = std::move(colors);
  return m;
}

PlanarMap PlanarMap::without_colors() const {
  PlanarMap m = *this;
  m.colors_.clear();
  return m;
}

PlanarMap build_map(std::vector<int> alpha, std::vector<int> sigma, std::optional<int> root,
                    int outer_dart, std::vector<Color> colors) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) throw Error(Errc::InvalidArgument, "empty map");
  if (static_cast<int>(sigma.size()) != n)
    throw Error(Errc::InvalidArgument, "alpha and sigma sizes differ");
  for (int d = 0; d < n; ++d) {
    if (alpha[d] < 0 || alpha[d] >= n) throw Error(Errc::NonInvolution, "alpha index out of range");
    if (sigma[d] < 0 || sigma[d] >= n) throw Error(Errc::NotPermutation, "sigma index out of range");
  }
  for (int d = 0; d < n; ++d)
    if (alpha[alpha[d]] != d)
      throw Error(Errc::NonInvolution, "alpha(alpha(" + std::to_string(d) + ")) != " + std::to_string(d));
  std::vector<int> sinv(n, -1);
  for (int d = 0; d < n; ++d) {
    if (sinv[sigma[d]] != -1) throw Error(Errc::NotPermutation, "sigma is not injective");
    sinv[sigma[d]] = d;
  }
  if (root && (*root < 0 || *root >= n)) throw Error(Errc::InvalidArgument, "root out of range");

  PlanarMap m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.sigma_inv_ = std::move(sinv);
  m.vert_.assign(n, -1);
  m.face_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (m.vert_[d] >= 0) continue;
    int v = static_cast<int>(m.vert_first_.size()), deg = 0, x = d;
    do {
      m.vert_[x] = v;
      ++deg;
      x = m.sigma_[x];
    } while (x != d);
    m.vert_first_.push_back(d);
    m.vert_deg_.push_back(deg);
  }
  for (int d = 0; d < n; ++d) {
    if (m.face_[d] >= 0) continue;
    int f = static_cast<int>(m.face_first_.size()), deg = 0, x = d;
    do {
      m.face_[x] = f;
      ++deg;
      x = m.phi(x);
    } while (x != d);
    m.face_first_.push_back(d);
    m.face_deg_.push_back(deg);
  }
  for (int d = 0; d < n; ++d) {
    if (m.alpha_[d] == d)
      ++m.num_stems_;
    else if (m.alpha_[d] > d)
      ++m.num_edges_;
  }
  // connectivity over vertices joined by entire edges
  {
    std::vector<char> seen(m.num_vertices(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      int d0 = m.vert_first_[v], d = d0;
      do {
        if (!m.is_stem(d)) {
          int w = m.vert_[m.alpha_[d]];
          if (!seen[w]) {
            seen[w] = 1;
            ++count;
            stack.push_back(w);
          }
        }
        d = m.sigma_[d];
      } while (d != d0);
    }
    if (count != m.num_vertices()) throw Error(Errc::Disconnected, "map is not connected");
  }
  int euler = m.num_vertices() - m.num_edges_ + m.num_faces();
  if (euler != 2)
    throw Error(Errc::NonPlanar, "V - E + F = " + std::to_string(euler) + " (expected 2)");
  m.root_ = root;
  if (root)
    m.outer_ = m.face_[*root];
  else if (outer_dart >= 0 && outer_dart < n)
    m.outer_ = m.face_[outer_dart];
  if (!colors.empty()) return m.with_colors(std::move(colors));
  return m;
}

PlanarMap map_from_faces(const std::vector<std::vector<int>>& faces, std::pair<int, int> root,
                         std::vector<int>* label_of_vertex) {
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> ends;
  for (const auto& f : faces) {
    for (size_t k = 0; k < f.size(); ++k) {
      std::pair<int, int> key{f[k], f[(k + 1) % f.size()]};
      if (!id.emplace(key, static_cast<int>(ends.size())).second)
        throw Error(Errc::InvalidArgument, "directed edge listed twice");
      ends.push_back(key);
    }
  }
  const int n = static_cast<int>(ends.size());
  std::vector<int> alpha(n), next(n), sigma(n);
  int base = 0;
  for (const auto& f : faces) {
    int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) next[base + i] = base + (i + 1) % k;
    base += k;
  }
  for (int d = 0; d < n; ++d) {
    auto it = id.find({ends[d].second, ends[d].first});
    if (it == id.end()) throw Error(Errc::NonInvolution, "directed edge without reverse");
    alpha[d] = it->second;
  }
  for (int d = 0; d < n; ++d) sigma[alpha[d]] = next[d];
  auto rt = id.find(root);
  if (rt == id.end()) throw Error(Errc::MissingRoot, "root edge not found");
  PlanarMap m = build_map(alpha, sigma, rt->second);
  if (label_of_vertex) {
    label_of_vertex->assign(m.num_vertices(), -1);
    for (int d = 0; d < n; ++d) (*label_of_vertex)[m.vertex(d)] = ends[d].first;
  }
  return m;
}

const char* map_class_name(MapClass c) {
  switch (c) {
    case MapClass::BinaryTreeMap: return "BinaryTreeMap";
    case MapClass::Quadrangulation: return "Quadrangulation";
    case MapClass::HexDissection: return "HexDissection";
    case MapClass::OuterTriangular: return "OuterTriangular";
    case MapClass::Other: return "Other";
  }
  return "Other";
}

MapClass classify(const PlanarMap& m) {
  if (m.num_faces() == 1) {
    for (int v = 0; v < m.num_vertices(); ++v)
      if (m.vertex_degree(v) != 3) return MapClass::Other;
    return MapClass::BinaryTreeMap;
  }
  if (m.num_stems() > 0) return MapClass::Other;
  int n4 = 0, n6 = 0, n3 = 0;
  for (int f = 0; f < m.num_faces(); ++f) {
    int k = m.face_degree(f);
    n4 += (k == 4);
    n6 += (k == 6);
    n3 += (k == 3);
  }
  const int F = m.num_faces();
  if (n4 == F) return MapClass::Quadrangulation;
  if (m.has_outer()) {
    int od = m.face_degree(m.outer_face());
    if (od == 6 && n4 == F - 1) return MapClass::HexDissection;
    if (od == 3) return MapClass::OuterTriangular;
    return MapClass::Other;
  }
  if (n6 == 1 && n4 == F - 1) return MapClass::HexDissection;
  if (n3 > 0) return MapClass::OuterTriangular;
  return MapClass::Other;
}

PlanarMap bicolor(const PlanarMap& m, int seed_vertex, Color seed_color) {
  const int V = m.num_vertices();
  if (seed_vertex < 0 || seed_vertex >= V) throw Error(Errc::InvalidArgument, "seed vertex out of range");
  std::vector<int> col(V, -1);
  std::deque<int> q{seed_vertex};
  col[seed_vertex] = static_cast<int>(seed_color);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int d : m.vertex_darts(v)) {
      if (m.is_stem(d)) continue;
      int w = m.head(d);
      if (col[w] < 0) {
        col[w] = 1 - col[v];
        q.push_back(w);
      } else if (col[w] == col[v]) {
        throw Error(Errc::OddCycle, "vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                        " would share a color");
      }
    }
  }
  std::vector<Color> colors(V);
  for (int v = 0; v < V; ++v) colors[v] = static_cast<Color>(col[v]);
  return m.with_colors(std::move(colors));
}

CycleInterior cycle_interior(const PlanarMap& m, const std::vector<int>& cycle) {
  if (cycle.empty()) throw Error(Errc::NotSimpleCycle, "empty cycle");
  if (!m.has_outer()) throw Error(Errc::MissingRoot, "no designated outer face");
  const int L = static_cast<int>(cycle.size());
  std::vector<char> on_cycle(m.darts(), 0), vseen(m.num_vertices(), 0);
  for (int k = 0; k < L; ++k) {
    int d = cycle[k];
    if (d < 0 || d >= m.darts() || m.is_stem(d)) throw Error(Errc::NotSimpleCycle, "bad dart in cycle");
    if (m.head(d) != m.vertex(cycle[(k + 1) % L]))
      throw Error(Errc::NotSimpleCycle, "consecutive darts do not chain");
    if (vseen[m.vertex(d)]++) throw Error(Errc::NotSimpleCycle, "repeated vertex");
    if (on_cycle[d] || on_cycle[m.alpha(d)]) throw Error(Errc::NotSimpleCycle, "repeated edge");
    on_cycle[d] = on_cycle[m.alpha(d)] = 1;
  }
  std::vector<char> out(m.num_faces(), 0);
  std::vector<int> stack{m.outer_face()};
  out[m.outer_face()] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int d : m.face_darts(f)) {
      if (on_cycle[d]) continue;
      int g = m.face(m.alpha(d));
      if (!out[g]) {
        out[g] = 1;
        stack.push_back(g);
      }
    }
  }
  CycleInterior res;
  for (int f = 0; f < m.num_faces(); ++f)
    if (!out[f]) res.faces.push_back(f);
  if (res.faces.empty()) throw Error(Errc::NotSimpleCycle, "cycle does not separate faces");
  res.is_clockwise = !out[m.face(cycle[0])];
  return res;
}

namespace {

std::vector<std::vector<int>> split_simple(const PlanarMap& m, const std::vector<int>& walk) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> stack;
  std::vector<int> pos(m.num_vertices(), -1);
  for (int d : walk) {
    int v = m.vertex(d);
    if (pos[v] >= 0) {
      int p = pos[v];
      std::vector<int> cyc(stack.begin() + p, stack.end());
      for (int x : cyc) pos[m.vertex(x)] = -1;
      stack.resize(p);
      cycles.push_back(std::move(cyc));
    }
    pos[v] = static_cast<int>(stack.size());
    stack.push_back(d);
  }
  if (!stack.empty()) cycles.push_back(stack);
  return cycles;
}

}  // namespace

std::optional<Circuit> find_clockwise_circuit(const PlanarMap& m, const std::vector<char>& usable) {
  if (!m.has_outer()) throw Error(Errc::MissingRoot, "no designated outer face");
  const int F = m.num_faces();
  // A face set S avoiding the outer face whose boundary darts (S on the right)
  // are all usable exists iff some face cannot reach the outer face along
  // arcs face(d) -> face(alpha d) for unusable d.
  std::vector<std::vector<int>> fwd(F), rev(F);
  for (int d = 0; d < m.darts(); ++d) {
    if (m.is_stem(d) || usable[d]) continue;
    int a = m.face(d), b = m.face(m.alpha(d));
    if (a == b) continue;
    fwd[a].push_back(b);
    rev[b].push_back(a);
  }
  std::vector<char> reach(F, 0);
  std::vector<int> st{m.outer_face()};
  reach[m.outer_face()] = 1;
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int g : rev[f])
      if (!reach[g]) reach[g] = 1, st.push_back(g);
  }
  int bad = -1;
  for (int f = 0; f < F; ++f)
    if (!reach[f]) {
      bad = f;
      break;
    }
  if (bad < 0) return std::nullopt;

  std::vector<char> inS(F, 0);
  st = {bad};
  inS[bad] = 1;
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int g : fwd[f])
      if (!inS[g]) inS[g] = 1, st.push_back(g);
  }
  // fill holes: keep only the complement of the outer component
  std::vector<char> outside(F, 0);
  st = {m.outer_face()};
  outside[m.outer_face()] = 1;
  while (!st.empty()) {
    int f = st.back();
    st.pop_back();
    for (int d : m.face_darts(f)) {
      int g = m.face(m.alpha(d));
      if (!inS[g] && !outside[g]) outside[g] = 1, st.push_back(g);
    }
  }
  Circuit fallback;
  for (int f = 0; f < F; ++f)
    if (!outside[f]) fallback.faces.push_back(f);
  std::vector<char> done(m.darts(), 0);
  for (int d0 = 0; d0 < m.darts(); ++d0) {
    if (done[d0] || m.is_stem(d0)) continue;
    if (outside[m.face(d0)] || !outside[m.face(m.alpha(d0))]) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      done[d] = 1;
      walk.push_back(d);
      int x = m.sigma(m.alpha(d));
      while (!outside[m.face(m.alpha(x))]) x = m.sigma(x);
      d = x;
    } while (d != d0 && walk.size() <= static_cast<size_t>(m.darts()));
    for (auto& cyc : split_simple(m, walk)) {
      try {
        auto ci = cycle_interior(m, cyc);
        if (ci.is_clockwise) return Circuit{cyc, ci.faces};
      } catch (const Error&) {
      }
    }
  }
  return fallback;
}

std::vector<int> canonical_code(const PlanarMap& m, int root) {
  const int n = m.darts();
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  for (size_t h = 0; h < order.size(); ++h) {
    int d = order[h];
    for (int nb : {m.alpha(d), m.sigma(d)}) {
      if (label[nb] < 0) {
        label[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  std::vector<int> code;
  code.reserve(2 * n);
  for (int d : order) {
    code.push_back(label[m.alpha(d)]);
    code.push_back(label[m.sigma(d)]);
  }
  return code;
}

std::vector<int> unrooted_canonical_code(const PlanarMap& m) {
  std::vector<int> best;
  for (int d = 0; d < m.darts(); ++d) {
    auto c = canonical_code(m, d);
    if (best.empty() || c < best) best = std::move(c);
  }
  return best;
}

bool rooted_equal(const PlanarMap& a, int ra, const PlanarMap& b, int rb) {
  const int n = a.darts();
  if (n != b.darts() || a.num_vertices() != b.num_vertices() || a.num_faces() != b.num_faces())
    return false;
  std::vector<int> ab(n, -1), ba(n, -1), order;
  order.reserve(n);
  ab[ra] = rb;
  ba[rb] = ra;
  order.push_back(ra);
  for (size_t h = 0; h < order.size(); ++h) {
    int x = order[h], y = ab[x];
    int pa[2] = {a.alpha(x), a.sigma(x)}, pb[2] = {b.alpha(y), b.sigma(y)};
    for (int k = 0; k < 2; ++k) {
      if (ab[pa[k]] < 0 && ba[pb[k]] < 0) {
        ab[pa[k]] = pb[k];
        ba[pb[k]] = pa[k];
        order.push_back(pa[k]);
      } else if (ab[pa[k]] != pb[k]) {
        return false;
      }
    }
  }
  return true;
}

bool maps_isomorphic(const PlanarMap& a, const PlanarMap& b, bool rooted) {
  if (rooted) {
    if (!a.rooted() || !b.rooted()) throw Error(Errc::MissingRoot, "rooted comparison needs roots");
    return rooted_equal(a, *a.root(), b, *b.root());
  }
  if (a.darts() != b.darts()) return false;
  int ra = a.rooted() ? *a.root() : 0;
  for (int rb = 0; rb < b.darts(); ++rb)
    if (rooted_equal(a, ra, b, rb)) return true;
  return false;
}

PlanarMap canonical_relabel(const PlanarMap& m) {
  const int n = m.darts();
  int root = m.rooted() ? *m.root() : 0;
  std::vector<int> label(n, -1), order;
  label[root] = 0;
  order.push_back(root);
  for (size_t h = 0; h < order.size(); ++h) {
    int d = order[h];
    for (int nb : {m.alpha(d), m.sigma(d)})
      if (label[nb] < 0) label[nb] = static_cast<int>(order.size()), order.push_back(nb);
  }
  std::vector<int> alpha(n), sigma(n);
  for (int d = 0; d < n; ++d) {
    alpha[label[d]] = label[m.alpha(d)];
    sigma[label[d]] = label[m.sigma(d)];
  }
  int outer = m.has_outer() ? label[m.face_first(m.outer_face())] : -1;
  PlanarMap r = build_map(alpha, sigma, m.rooted() ? std::optional<int>(0) : std::nullopt, outer);
  if (m.has_colors()) {
    std::vector<Color> col(r.num_vertices());
    for (int d = 0; d < n; ++d) col[r.vertex(label[d])] = m.dart_color(d);
    r = r.with_colors(std::move(col));
  }
  return r;
}

std::string to_pmap(const PlanarMap& m) {
  std::ostringstream os;
  os << "pmap 1\ndarts " << m.darts() << "\nalpha";
  for (int d = 0; d < m.darts(); ++d) os << ' ' << m.alpha(d);
  os << "\nsigma";
  for (int d = 0; d < m.darts(); ++d) os << ' ' << m.sigma(d);
  os << "\nroot ";
  if (m.rooted())
    os << *m.root();
  else
    os << '-';
  os << "\ncolors ";
  if (m.has_colors()) {
    for (int v = 0; v < m.num_vertices(); ++v) os << (m.color(v) == Color::Black ? 'B' : 'W');
  } else {
    os << '-';
  }
  os << '\n';
  return os.str();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> t;
  std::string s;
  while (is >> s) t.push_back(s);
  return t;
}

int parse_int(const std::string& s) {
  if (s.empty() || s.size() > 10) throw Error(Errc::ParseError, "bad integer '" + s + "'");
  for (char c : s)
    if (c < '0' || c > '9') throw Error(Errc::ParseError, "bad integer '" + s + "'");
  long long v = std::stoll(s);
  if (v > 100000000) throw Error(Errc::ParseError, "integer too large");
  return static_cast<int>(v);
}

}  // namespace

PlanarMap parse_pmap(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    lines.push_back(std::move(t));
  }
  if (lines.size() < 5 || lines.size() > 6) throw Error(Errc::ParseError, "expected 5 or 6 lines");
  auto expect = [&](size_t i, const char* key) {
    if (lines[i][0] != key) throw Error(Errc::ParseError, std::string("expected '") + key + "'");
  };
  expect(0, "pmap");
  if (lines[0].size() != 2 || lines[0][1] != "1") throw Error(Errc::ParseError, "unsupported version");
  expect(1, "darts");
  if (lines[1].size() != 2) throw Error(Errc::ParseError, "bad darts line");
  int D = parse_int(lines[1][1]);
  if (D < 1) throw Error(Errc::ParseError, "dart count must be positive");
  auto perm = [&](size_t i, const char* key) {
    expect(i, key);
    if (static_cast<int>(lines[i].size()) != D + 1)
      throw Error(Errc::ParseError, std::string("wrong entry count on '") + key + "' line");
    std::vector<int> v(D);
    for (int k = 0; k < D; ++k) {
      v[k] = parse_int(lines[i][k + 1]);
      if (v[k] >= D) throw Error(Errc::ParseError, "index out of range");
    }
    return v;
  };
  auto alpha = perm(2, "alpha");
  auto sigma = perm(3, "sigma");
  expect(4, "root");
  if (lines[4].size() != 2) throw Error(Errc::ParseError, "bad root line");
  std::optional<int> root;
  if (lines[4][1] != "-") {
    root = parse_int(lines[4][1]);
    if (*root >= D) throw Error(Errc::ParseError, "root out of range");
  }
  PlanarMap m = build_map(alpha, sigma, root);
  if (lines.size() == 6) {
    expect(5, "colors");
    if (lines[5].size() != 2) throw Error(Errc::ParseError, "bad colors line");
    const std::string& c = lines[5][1];
    if (c != "-") {
      if (static_cast<int>(c.size()) != m.num_vertices())
        throw Error(Errc::ParseError, "color string length differs from vertex count");
      std::vector<Color> col;
      for (char ch : c) {
        if (ch == 'B')
          col.push_back(Color::Black);
        else if (ch == 'W')
          col.push_back(Color::White);
        else
          throw Error(Errc::ParseError, "bad color character");
      }
      m = m.with_colors(std::move(col));
    }
  }
  return m;
}

std::vector<PlanarMap> read_pmap_stream(std::istream& in) {
  std::vector<PlanarMap> out;
  std::string block, line;
  auto flush = [&]() {
    if (!block.empty()) out.push_back(parse_pmap(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    std::string t = line;
    t.erase(0, t.find_first_not_of(" \t\r"));
    if (!t.empty() && t[0] == '#') continue;
    if (t.empty() || t.rfind("pmap", 0) == 0) flush();
    if (!t.empty()) block += line + "\n";
  }
  flush();
  return out;
}

}  // namespace pmaps
