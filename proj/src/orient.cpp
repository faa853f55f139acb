#include "pmaps/orient.hpp"

#include <algorithm>

namespace pmaps {

namespace {

int outer_root(const PlanarMap& g) {
  if (g.rooted()) return g.root_dart();
  if (g.has_outer()) return g.face_first(g.outer_face());
  throw Error(Errc::MissingRoot, "map has neither root nor outer face");
}

void require_outer_triangular(const PlanarMap& g) {
  if (g.num_stems() != 0) throw Error(Errc::NotOuterTriangular, "map has stems");
  int r = outer_root(g);
  if (g.face_degree(g.face(r)) != 3) throw Error(Errc::NotOuterTriangular, "outer face is not a triangle");
  for (int d = 0; d < g.darts(); ++d)
    if (g.face(d) == g.face(g.alpha(d))) throw Error(Errc::NotOuterTriangular, "bridge or isolated edge");
}

}  // namespace

OuterLabels outer_labels(const PlanarMap& g) {
  int r = outer_root(g);
  return {g.vertex(r), g.head(g.phi(r)), g.head(r)};
}

DerivedMap derived_map(const PlanarMap& g) {
  require_outer_triangular(g);
  const int r = outer_root(g), of = g.face(r), G = g.darts();
  DerivedMap dm;
  RawMap raw;
  dm.p_at_v.assign(G, -1);
  dm.p_at_e.assign(G, -1);
  dm.d_at_f.assign(G, -1);
  dm.d_at_e.assign(G, -1);
  for (int d = 0; d < G; ++d) {
    dm.p_at_v[d] = raw.add_dart();
    dm.p_at_e[d] = raw.add_dart();
    raw.link(dm.p_at_v[d], dm.p_at_e[d]);
    dm.source.push_back(d);
    dm.source.push_back(d);
  }
  for (int d = 0; d < G; ++d) {
    if (g.face(d) == of) continue;
    dm.d_at_f[d] = raw.add_dart();
    dm.d_at_e[d] = raw.add_dart();
    raw.link(dm.d_at_f[d], dm.d_at_e[d]);
    dm.source.push_back(d);
    dm.source.push_back(d);
  }
  std::vector<int> stem_v(g.num_vertices(), -1), stem_e(G, -1);
  for (int d : g.face_darts(of)) {
    int s = raw.add_dart();
    stem_v[g.vertex(d)] = s;
    dm.stems.push_back(s);
    dm.source.push_back(-1);
  }
  for (int d : g.face_darts(of)) {
    int s = raw.add_dart();
    stem_e[d] = s;
    dm.stems.push_back(s);
    dm.source.push_back(-1);
  }
  for (int d = 0; d < G; ++d) {
    int nd = g.sigma(d);
    if (g.face(nd) == of) {
      int s = stem_v[g.vertex(d)];
      raw.sigma[dm.p_at_v[d]] = s;
      raw.sigma[s] = dm.p_at_v[nd];
    } else {
      raw.sigma[dm.p_at_v[d]] = dm.p_at_v[nd];
    }
    int a = g.alpha(d);
    auto side = [&](int h) { return g.face(h) == of ? stem_e[h] : dm.d_at_e[h]; };
    raw.sigma[dm.p_at_e[a]] = side(a);
    raw.sigma[side(a)] = dm.p_at_e[d];
    if (g.face(d) != of) raw.sigma[dm.d_at_f[g.phi(d)]] = dm.d_at_f[d];
  }
  dm.map = build_map(std::move(raw.alpha), std::move(raw.sigma), std::nullopt, dm.stems[0]);
  const PlanarMap& m = dm.map;
  dm.role.assign(m.num_vertices(), VertexRole::Primal);
  dm.origin.assign(m.num_vertices(), -1);
  for (int d = 0; d < G; ++d) {
    dm.role[m.vertex(dm.p_at_v[d])] = VertexRole::Primal;
    dm.origin[m.vertex(dm.p_at_v[d])] = g.vertex(d);
    dm.role[m.vertex(dm.p_at_e[d])] = VertexRole::EdgeVertex;
    dm.origin[m.vertex(dm.p_at_e[d])] = std::min(d, g.alpha(d));
    if (dm.d_at_f[d] >= 0) {
      dm.role[m.vertex(dm.d_at_f[d])] = VertexRole::Dual;
      dm.origin[m.vertex(dm.d_at_f[d])] = g.face(d);
    }
  }
  return dm;
}

std::vector<char> derived_out(const DerivedMap& dm, const Alpha0Orientation& x) {
  std::vector<char> out(dm.map.darts(), 1);
  for (size_t d = 0; d < dm.p_at_v.size(); ++d) {
    out[dm.p_at_v[d]] = x.primal_out[d];
    out[dm.p_at_e[d]] = !x.primal_out[d];
    if (dm.d_at_f[d] >= 0) {
      out[dm.d_at_f[d]] = x.dual_out[d];
      out[dm.d_at_e[d]] = !x.dual_out[d];
    }
  }
  return out;
}

int eligible_scan(const ShellingState& st) {
  auto ok = [&](int u) { return u != st.a2 && u != st.a3 && st.active[u] && st.blocked[u] == 0; };
  for (int u = st.left[st.a2]; u >= 0 && u != st.a3; u = st.left[u])
    if (ok(u)) return u;
  throw Error(Errc::NoEligibleVertex, "no eligible vertex on the cycle");
}

namespace {

class Shelling {
 public:
  Shelling(const PlanarMap& g, const Alpha0Options& opt, Alpha0Orientation& x)
      : g_(g), opt_(opt), x_(x) {}

  void run() {
    init();
    st_.pointer = outer_.a1;
    while (right(outer_.a3) != outer_.a2) {
      step(choose());
      ++x_.steps;
    }
    finish();
  }

 private:
  const PlanarMap& g_;
  const Alpha0Options& opt_;
  Alpha0Orientation& x_;
  OuterLabels outer_;
  ShellingState st_;
  int outer_face_ = -1, base_ = -1;
  std::vector<int> rdart_, ldart_, deg_;
  std::vector<char> on_c_, removed_face_, sep_;
  std::vector<int> stamp_, fstamp_;
  int epoch_ = 0;

  int right(int u) const { return g_.head(rdart_[u]); }
  int left(int u) const { return g_.head(ldart_[u]); }
  bool inner(int d) const { return g_.face(d) != outer_face_; }
  bool eligible(int u) const {
    return u != outer_.a2 && u != outer_.a3 && st_.active[u] && st_.blocked[u] == 0;
  }

  void set_right(int u, int d) {
    rdart_[u] = d;
    st_.right[u] = g_.head(d);
    int w = g_.head(d);
    ldart_[w] = g_.alpha(d);
    st_.left[w] = u;
  }

  void init() {
    const int r = outer_root(g_), V = g_.num_vertices(), F = g_.num_faces(), G = g_.darts();
    outer_ = outer_labels(g_);
    x_.outer = outer_;
    outer_face_ = g_.face(r);
    base_ = g_.phi(r);
    x_.primal_out.assign(G, 0);
    x_.dual_out.assign(G, 0);
    x_.label.assign(G, 0);
    rdart_.assign(V, -1);
    ldart_.assign(V, -1);
    deg_.resize(V);
    for (int u = 0; u < V; ++u) deg_[u] = g_.vertex_degree(u);
    on_c_.assign(V, 0);
    st_.right.assign(V, -1);
    st_.left.assign(V, -1);
    st_.active.assign(V, 0);
    st_.blocked.assign(V, 0);
    st_.a2 = outer_.a2;
    st_.a3 = outer_.a3;
    removed_face_.assign(F, 0);
    sep_.assign(F, 0);
    stamp_.assign(V, -1);
    fstamp_.assign(F, -1);
    set_right(outer_.a3, g_.alpha(r));
    set_right(outer_.a1, g_.alpha(g_.phi(g_.phi(r))));
    for (int u : {outer_.a1, outer_.a2, outer_.a3}) on_c_[u] = 1;
    st_.active[outer_.a1] = 1;
    for (int f = 0; f < F; ++f)
      if (f != outer_face_) refresh_face(f, false, false);
  }

  // Recounts C vertices/edges of f and adjusts blocked counters.
  void refresh_face(int f, bool was_sep_known, bool skip_new) {
    const int first = g_.face_first(f);
    if (was_sep_known && sep_[f]) {
      int d = first;
      do {
        int u = g_.vertex(d);
        if (on_c_[u] && !(skip_new && stamp_[u] == epoch_)) --st_.blocked[u];
        d = g_.phi(d);
      } while (d != first);
    }
    int nv = 0, ne = 0;
    int d = first;
    do {
      int u = g_.vertex(d);
      nv += on_c_[u];
      ne += on_c_[u] && rdart_[u] == d;
      d = g_.phi(d);
    } while (d != first);
    sep_[f] = nv > ne + 1;
    if (sep_[f]) {
      d = first;
      do {
        int u = g_.vertex(d);
        if (on_c_[u]) ++st_.blocked[u];
        d = g_.phi(d);
      } while (d != first);
    }
  }

  int scan_rightmost() const {
    for (int u = left(outer_.a2); u != outer_.a3; u = left(u))
      if (eligible(u)) return u;
    throw Error(Errc::NoEligibleVertex, "no eligible vertex on the cycle");
  }

  int choose() {
    switch (opt_.strategy) {
      case EligibleStrategy::Leftmost:
        for (int u = right(outer_.a3); u != outer_.a2; u = right(u))
          if (eligible(u)) return u;
        throw Error(Errc::NoEligibleVertex, "no eligible vertex on the cycle");
      case EligibleStrategy::Random: {
        if (!opt_.rng) throw Error(Errc::InvalidArgument, "random strategy needs an rng");
        std::vector<int> cand;
        for (int u = right(outer_.a3); u != outer_.a2; u = right(u))
          if (eligible(u)) cand.push_back(u);
        if (cand.empty()) throw Error(Errc::NoEligibleVertex, "no eligible vertex on the cycle");
        std::uniform_int_distribution<size_t> pick(0, cand.size() - 1);
        return cand[pick(*opt_.rng)];
      }
      case EligibleStrategy::Rightmost:
        break;
    }
    int p = st_.pointer, pick = -1;
    if (eligible(p)) {
      int u = right(p);
      ++x_.pointer_moves;
      while (u != outer_.a2 && deg_[u] == 2) {
        u = right(u);
        ++x_.pointer_moves;
      }
      pick = eligible(u) ? u : left(u);
    } else {
      while (!eligible(p)) {
        if (p == outer_.a3) throw Error(Errc::NoEligibleVertex, "no eligible vertex on the cycle");
        p = left(p);
        ++x_.pointer_moves;
      }
      pick = p;
    }
    if (opt_.check_pointer && pick != scan_rightmost())
      throw Error(Errc::InvalidArgument, "pointer scan disagrees with the full scan");
    return pick;
  }

  void simple_toward_far(int d, int lab) {
    // the half at vertex(d) goes out, the far half comes in
    int a = g_.alpha(d);
    x_.primal_out[d] = 1;
    x_.primal_out[a] = 0;
    x_.label[d] = x_.label[a] = lab;
    x_.dual_out[d] = x_.dual_out[a] = 1;
  }

  // Bi-oriented edge whose edge-vertex points into face(into).
  void bi(int d, int lab_d, int lab_a, int into) {
    int a = g_.alpha(d);
    x_.primal_out[d] = x_.primal_out[a] = 1;
    x_.label[d] = lab_d;
    x_.label[a] = lab_a;
    x_.dual_out[d] = x_.dual_out[a] = 1;
    if (inner(into)) x_.dual_out[into] = 0;
  }

  void remove_edge(int d) {
    --deg_[g_.vertex(d)];
    --deg_[g_.head(d)];
  }

  void step(int v) {
    ++epoch_;
    const int a2 = outer_.a2, a3 = outer_.a3;
    std::vector<int> rc{rdart_[v]}, lc{ldart_[v]};
    for (int u = right(v); u != a2 && deg_[u] == 2; u = right(u)) rc.push_back(rdart_[u]);
    for (int u = left(v); u != a3 && deg_[u] == 2; u = left(u)) lc.push_back(ldart_[u]);
    const int rv = g_.head(rc.back()), lv = g_.head(lc.back());
    std::vector<int> ds{rdart_[v]};
    while (ds.back() != ldart_[v]) ds.push_back(g_.sigma_inv(ds.back()));
    const int m = static_cast<int>(ds.size()) - 1;
    if (m < 1) throw Error(Errc::InvalidArgument, "chosen vertex has no inner face");

    for (int i = 1; i < m; ++i) simple_toward_far(g_.alpha(ds[i]), 1);
    for (size_t t = 0; t + 1 < lc.size(); ++t) bi(lc[t], 3, 2, g_.alpha(lc[t]));
    for (size_t t = 0; t + 1 < rc.size(); ++t) bi(rc[t], 2, 3, rc[t]);
    int cl = lc.back(), cr = rc.back();
    if (st_.active[lv])
      simple_toward_far(cl, 3);
    else
      bi(cl, 3, 1, cl);
    if (st_.active[rv])
      simple_toward_far(cr, 2);
    else
      bi(cr, 2, 1, g_.alpha(cr));

    for (int i = 0; i <= m; ++i) remove_edge(ds[i]);
    for (size_t t = 1; t < lc.size(); ++t) remove_edge(lc[t]);
    for (size_t t = 1; t < rc.size(); ++t) remove_edge(rc[t]);
    std::vector<int> faces(m);
    for (int i = 0; i < m; ++i) {
      faces[i] = g_.face(ds[i]);
      removed_face_[faces[i]] = 1;
    }
    auto drop = [&](int u) {
      on_c_[u] = 0;
      st_.active[u] = 0;
      st_.right[u] = st_.left[u] = -1;
      rdart_[u] = ldart_[u] = -1;
    };
    drop(v);
    for (size_t t = 0; t + 1 < lc.size(); ++t) drop(g_.head(lc[t]));
    for (size_t t = 0; t + 1 < rc.size(); ++t) drop(g_.head(rc[t]));

    std::vector<int> path;
    for (int i = m - 1; i >= 0; --i) {
      int start = g_.phi(i == 0 ? cr : ds[i]);
      int stop = (i == m - 1) ? g_.alpha(cl) : g_.alpha(ds[i + 1]);
      std::vector<int> seg;
      for (int d = start; d != stop; d = g_.phi(d)) seg.push_back(d);
      for (auto it = seg.rbegin(); it != seg.rend(); ++it) path.push_back(g_.alpha(*it));
    }
    std::vector<int> fresh;
    for (int d : path) {
      set_right(g_.vertex(d), d);
      int w = g_.head(d);
      if (w != rv) {
        on_c_[w] = 1;
        stamp_[w] = epoch_;
        fresh.push_back(w);
      }
    }
    st_.active[lv] = st_.active[rv] = 1;
    for (int i = 1; i < m; ++i) st_.active[g_.head(ds[i])] = 1;

    std::vector<int> touched;
    auto touch = [&](int f) {
      if (f == outer_face_ || removed_face_[f] || fstamp_[f] == epoch_) return;
      fstamp_[f] = epoch_;
      touched.push_back(f);
    };
    for (int w : fresh)
      for (int d : g_.vertex_darts(w)) touch(g_.face(d));
    for (int d : path) touch(g_.face(d));
    for (int f : touched) refresh_face(f, true, true);

    if (opt_.check_invariants) check_removed(ds, lc, rc);
    st_.pointer = rv;
  }

  void check_removed(const std::vector<int>& ds, const std::vector<int>& lc, const std::vector<int>& rc) {
    auto outdeg = [&](int d) {
      int a = g_.alpha(d), k = !x_.primal_out[d] + !x_.primal_out[a];
      k += inner(d) ? !x_.dual_out[d] : 1;
      k += inner(a) ? !x_.dual_out[a] : 1;
      return k;
    };
    for (const auto* list : {&ds, &lc, &rc})
      for (int d : *list)
        if (outdeg(d) != 1)
          throw Error(Errc::InvalidArgument, "edge-vertex of dart " + std::to_string(d) + " has outdegree " +
                                                 std::to_string(outdeg(d)));
  }

  void finish() {
    int b = base_, a = g_.alpha(b);  // b goes a3 -> a2 with the outer face on its right
    x_.primal_out[a] = x_.primal_out[b] = 1;
    x_.label[a] = 3;
    x_.label[b] = 2;
    x_.dual_out[a] = 1;
    x_.dual_out[b] = 0;
  }
};

}  // namespace

Alpha0Orientation minimal_alpha0(const PlanarMap& g, const Alpha0Options& opt) {
  require_outer_triangular(g);
  Alpha0Orientation x;
  Shelling(g, opt, x).run();
  return x;
}

Alpha0Report verify_derived_orientation(const DerivedMap& dm, const std::vector<char>& out) {
  Alpha0Report rep;
  const PlanarMap& m = dm.map;
  std::vector<int> deg(m.num_vertices(), 0);
  for (int d = 0; d < m.darts(); ++d) deg[m.vertex(d)] += out[d] ? 1 : 0;
  for (int d = 0; d < m.darts(); ++d)
    if (!m.is_stem(d) && out[d] == out[m.alpha(d)])
      rep.issues.push_back("derived edge of dart " + std::to_string(d) + " is not oriented one way");
  for (int u = 0; u < m.num_vertices(); ++u) {
    int want = dm.role[u] == VertexRole::EdgeVertex ? 1 : 3;
    if (deg[u] != want)
      rep.issues.push_back(std::string(dm.role[u] == VertexRole::EdgeVertex ? "edge-vertex " :
                                       dm.role[u] == VertexRole::Dual       ? "dual vertex " : "primal vertex ") +
                           std::to_string(u) + " has outdegree " + std::to_string(deg[u]));
  }
  std::vector<char> usable(out.begin(), out.end());
  rep.circuit = find_clockwise_circuit(m, usable);
  if (rep.circuit) rep.issues.push_back("clockwise circuit of length " + std::to_string(rep.circuit->darts.size()));
  return rep;
}

Alpha0Report verify_alpha0(const PlanarMap& g, const DerivedMap& dm, const Alpha0Orientation& x) {
  const int G = g.darts();
  if (static_cast<int>(x.primal_out.size()) != G || static_cast<int>(x.dual_out.size()) != G ||
      static_cast<int>(x.label.size()) != G)
    return Alpha0Report{{"orientation arrays do not match the map"}, std::nullopt};
  Alpha0Report rep = verify_derived_orientation(dm, derived_out(dm, x));
  const int of = g.face(outer_root(g));
  for (int d = 0; d < G; ++d) {
    int a = g.alpha(d);
    if (x.label[d] < 1 || x.label[d] > 3) {
      rep.issues.push_back("dart " + std::to_string(d) + " has no label");
      continue;
    }
    bool bi = x.primal_out[d] && x.primal_out[a];
    if (!bi && x.label[d] != x.label[a]) rep.issues.push_back("simply oriented edge of dart " + std::to_string(d) + " has two labels");
    if (bi && x.label[d] == x.label[a]) rep.issues.push_back("bi-oriented edge of dart " + std::to_string(d) + " has equal labels");
  }
  if (!rep.issues.empty()) return rep;
  auto stem_label = [&](int v) { return v == x.outer.a1 ? 1 : v == x.outer.a2 ? 2 : 3; };
  for (int v = 0; v < g.num_vertices(); ++v) {
    // clockwise items around v: (outgoing, label)
    std::vector<std::pair<int, int>> items;
    int first = g.vertex_first(v), h = first;
    do {
      items.push_back({x.primal_out[h], x.label[h]});
      if (g.face(h) == of) items.push_back({1, stem_label(v)});
      h = g.sigma_inv(h);
    } while (h != first);
    std::vector<int> outs;
    for (size_t k = 0; k < items.size(); ++k)
      if (items[k].first) outs.push_back(static_cast<int>(k));
    bool good = outs.size() == 3;
    if (good) {
      size_t start = 0;
      while (start < 3 && items[outs[start]].second != 1) ++start;
      good = start < 3;
      for (int t = 0; good && t < 3; ++t) {
        size_t k = outs[(start + t) % 3];
        int lab = t + 1;
        good = items[k].second == lab;
        size_t end = outs[(start + t + 1) % 3];
        for (size_t j = (k + 1) % items.size(); good && j != end; j = (j + 1) % items.size())
          good = items[j].second == (lab + 1) % 3 + 1;
      }
    }
    if (!good) rep.issues.push_back("labels around vertex " + std::to_string(v) + " break the local rule");
  }
  return rep;
}

}  // namespace pmaps
