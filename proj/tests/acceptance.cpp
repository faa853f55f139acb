// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/codec.hpp"
#include "pmaps/count.hpp"
#include "pmaps/oracle.hpp"
#include "pmaps/orient.hpp"
#include "pmaps/sample.hpp"
#include "pmaps/trees.hpp"
#include "support.hpp"

using namespace pmaps;
using namespace pmaps::testing;

namespace {

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Check {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

bool rooted_same(const PlanarMap& a, const PlanarMap& b) { return rooted_equal(a, a.root_dart(), b, b.root_dart()); }

int report(int id, const char* title, Check& c, double seconds) {
  std::printf("criterion %d: %s - %s (%s%.1fs)\n", id, c.ok ? "PASS" : "FAIL", title, c.note.str().c_str(), seconds);
  std::fflush(stdout);
  return c.ok ? 0 : 1;
}

int count_union_components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  int comps = n;
  for (auto [a, b] : edges) {
    int x = find(a), y = find(b);
    if (x != y) {
      p[x] = y;
      --comps;
    }
  }
  return comps;
}

// 1. closure/opening bijection on trees with n <= 6 nodes
void criterion1(Check& c) {
  long trees = 0;
  for (int n = 1; n <= 6; ++n) {
    TreeFamily fam = enumerate_binary_trees(n);
    for (const auto& t : fam.rooted) {
      ClosureResult cl = close(t);
      c.require(classify(cl.dissection) == MapClass::HexDissection, "closure is a hexagon dissection");
      c.require(!has_separating_4cycle(cl.dissection), "closure is irreducible");
      c.require(rooted_same(open(cl.dissection, cl.orient, t.root_dart()), t), "opening inverts the closure");
      ++trees;
    }
    std::vector<PlanarMap> closures;
    for (const auto& t : fam.unrooted) closures.push_back(close(t.with_root(std::nullopt)).dissection);
    c.require(dedupe(closures, false).size() == fam.unrooted.size(), "distinct trees give distinct dissections");
  }
  c.note << trees << " rooted trees; ";
}

// 2. rooted dissection counts and the bivariate rooting identity
void criterion2(Check& c) {
  const long expect[] = {0, 2, 3, 6, 14};
  for (int n = 1; n <= 4; ++n) {
    long got = static_cast<long>(all_rootings(enumerate_dissections(n), true).size());
    c.require(got == expect[n] && count_rooted_dissections(n) == expect[n], "rooted count for n=" + std::to_string(n));
  }
  // rooted at an outer dart leaving a black hexagon vertex, keyed by inner color counts
  std::map<std::pair<int, int>, std::set<std::vector<int>>> rooted;
  for (int n = 1; n <= 5; ++n)
    for (const auto& d0 : enumerate_dissections(n))
      for (Color seed : {Color::Black, Color::White}) {
        PlanarMap d = bicolor(d0, 0, seed);
        int ib = 0, iw = 0;
        for (int v = 0; v < d.num_vertices(); ++v) {
          if (d.is_outer_vertex(v)) continue;
          (d.color(v) == Color::Black ? ib : iw)++;
        }
        for (int x : d.face_darts(d.outer_face()))
          if (d.dart_color(x) == Color::Black) rooted[{ib, iw}].insert(canonical_code(d, x));
      }
  int pairs = 0;
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; i + j <= 5; ++j) {
      if (i + j == 0) continue;
      long b = static_cast<long>(enumerate_black_rooted(i, j).size());
      long d = static_cast<long>(rooted[{i, j}].size());
      c.require(b * 3 == d * (2 * i - j + 1), "bivariate identity at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      c.require(count_rooted_dissections_ij(i, j) == d, "bivariate closed form");
      ++pairs;
    }
  c.note << "counts 2,3,6,14; " << pairs << " (i,j) pairs; ";
}

// 3. tri-orientation structure and uniqueness
void criterion3(Check& c) {
  long checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_binary_trees(n).rooted) {
      ClosureResult cl = close(t);
      const PlanarMap& d = cl.dissection;
      for (const TriOrientation& o : {cl.orient, triorient_minimal(d)}) {
        TriReport rep = verify_triorientation(d, o);
        c.require(rep.ok() && rep.bi_oriented == n - 1 && rep.simply_oriented == n + 2, "edge classes");
        std::vector<int> inner_id(d.num_vertices(), -1);
        int k = 0;
        for (int v = 0; v < d.num_vertices(); ++v)
          if (!d.is_outer_vertex(v)) inner_id[v] = k++;
        std::vector<std::pair<int, int>> bi;
        for (int x = 0; x < d.darts(); ++x)
          if (x < d.alpha(x) && o.dir[x] == 1 && o.dir[d.alpha(x)] == 1)
            bi.push_back({inner_id[d.vertex(x)], inner_id[d.head(x)]});
        c.require(count_union_components(k, bi) == 1, "bi-oriented edges span the inner vertices");
      }
      c.require(triorient_minimal(d) == cl.orient, "closure and derived-map orientations agree");
      ++checked;
    }
  c.note << checked << " dissections; ";
}

// 4. minimal alpha0-orientation against exhaustive enumeration
void criterion4(Check& c) {
  long maps = 0, worst_moves = 0, worst_edges = 1;
  double worst_ratio = 0;
  auto track = [&](const PlanarMap& g, const Alpha0Orientation& x) {
    c.require(x.pointer_moves <= 2L * g.num_edges(), "pointer moves within 2E");
    double r = static_cast<double>(x.pointer_moves) / g.num_edges();
    if (r > worst_ratio) {
      worst_ratio = r;
      worst_moves = x.pointer_moves;
      worst_edges = g.num_edges();
    }
  };
  // every such map up to 8 edges has a single orientation, so the
  // six-vertex triangulations are added to exercise real choices
  std::vector<PlanarMap> inputs;
  for (int e = 6; e <= 8; ++e)
    for (const auto& g : all_rootings(enumerate_3connected(e), false))
      if (g.face_degree(g.face(g.root_dart())) == 3) inputs.push_back(g);
  const size_t small = inputs.size();
  for (const auto& g : enumerate_triangulations(3)) inputs.push_back(g);
  size_t several = 0;
  for (const auto& g : inputs) {
    Alpha0Options opt;
    opt.check_invariants = true;
    Alpha0Orientation x = minimal_alpha0(g, opt);
    DerivedMap dm = derived_map(g);
    Alpha0Report rep = verify_alpha0(g, dm, x);
    c.require(rep.ok(), "outdegrees, label rule and no clockwise circuit");
    auto mine = derived_out(dm, x);
    int free = 0, same = 0;
    auto all = enumerate_alpha0(dm);
    several += all.size() > 1;
    for (const auto& o : all)
      if (!verify_derived_orientation(dm, o).circuit) {
        ++free;
        same += o == mine;
      }
    c.require(free == 1 && same == 1, "unique circuit-free orientation equals the output");
    track(g, x);
    ++maps;
  }
  // linearity witness on larger inputs
  SampleRequest req;
  req.kind = SampleKind::Triangulation;
  req.a = 150;
  req.count = 100;
  req.seed = 4;
  req.jobs = jobs();
  for (const auto& g : sample_batch(req).maps) track(g, minimal_alpha0(g));
  req.kind = SampleKind::ByEdges;
  req.a = 300;
  for (const auto& m : sample_batch(req).maps) {
    // reroot on an outer triangle when there is one
    for (int x = 0; x < m.darts(); ++x)
      if (m.face_degree(m.face(x)) == 3) {
        PlanarMap g = m.with_root(x);
        track(g, minimal_alpha0(g));
        break;
      }
  }
  c.note << small << " rooted maps <= 8 edges plus " << maps - static_cast<long>(small)
         << " six-vertex triangulations (" << several << " with several orientations); max pointer moves/E " << worst_ratio << " (" << worst_moves << "/"
         << worst_edges << "); ";
}

// Triangulation trees rooted at a stem: white nodes take stems or black
// children, black nodes take white children only. Returned as node trees.
void s_trees(int blacks, std::vector<NodeTree>& out) {
  NodeTree t;
  t.kids.push_back({-1, -1});
  t.colors.push_back(Color::White);
  struct Slot {
    int parent, side;
  };
  std::function<void(std::vector<Slot>, int)> go = [&](std::vector<Slot> open, int left) {
    if (open.empty()) {
      if (left == 0) out.push_back(t);
      return;
    }
    Slot s = open.back();
    open.pop_back();
    bool parent_black = t.colors[s.parent] == Color::Black;
    if (!parent_black) go(open, left);  // stem on a white node
    if (parent_black || left > 0) {
      Color c = parent_black ? Color::White : Color::Black;
      int k = static_cast<int>(t.kids.size());
      t.kids.push_back({-1, -1});
      t.colors.push_back(c);
      t.kids[s.parent][s.side] = k;
      auto more = open;
      more.push_back({k, 1});
      more.push_back({k, 0});
      go(more, left - (c == Color::Black));
      t.kids.pop_back();
      t.colors.pop_back();
      t.kids[s.parent][s.side] = -1;
    }
  };
  go({{0, 1}, {0, 0}}, blacks);
}

// 5. series, formulas and enumeration
void criterion5(Check& c) {
  Series p = series_3connected(64);
  c.require(std::all_of(p.begin(), p.end(), [](const BigInt& x) { return x >= 0; }), "nonnegative to order 64");
  c.require(p[4] == 1, "one rooted map with 6 edges");
  for (int e = 6; e <= 9; ++e) c.require(p[e - 2] == enumerate_3connected(e).size(), "P' for " + std::to_string(e) + " edges");
  const long rooted[] = {1, 1, 3, 13, 68};
  for (int n = 0; n <= 4; ++n) c.require(count_rooted_triangulations(n) == rooted[n], "rooted triangulation formula");
  c.require(count_unrooted_triangulations(0) == 1 && count_unrooted_triangulations(1) == 1, "unrooted formula n=0,1");
  // closure of every triangulation tree, then the angular map
  for (int n = 1; n <= 3; ++n) {
    std::vector<NodeTree> trees;
    s_trees(n, trees);
    c.require(static_cast<long>(trees.size()) == (n + 1) * count_rooted_triangulations(n), "S' count");
    std::set<std::vector<int>> classes;
    std::set<std::vector<int>> plane;
    for (const auto& nt : trees) {
      PlanarMap tree = node_tree_to_map(nt);
      c.require(is_triangulation_tree(tree), "triangulation tree");
      PlanarMap d = color_complete(close(tree).dissection);
      if (d.dart_color(d.root_dart()) != Color::Black) d = d.with_root(d.phi(d.root_dart()));
      PlanarMap g = primal_of_complete_dissection(d);
      std::vector<int> best;
      for (int x : g.face_darts(g.outer_face())) {
        auto code = canonical_code(g, x);
        classes.insert(code);
        if (best.empty() || code < best) best = code;
      }
      plane.insert(best);
    }
    c.require(static_cast<long>(classes.size()) == rooted[n], "rooted triangulations from trees n=" + std::to_string(n));
    c.require(plane.size() == count_unrooted_triangulations(n), "unrooted triangulations n=" + std::to_string(n));
    ClassIndex oracle(enumerate_triangulations(n));
    c.require(oracle.size() == classes.size(), "graph enumeration agrees");
  }
  c.note << "P'(6..9) = " << p[4] << "," << p[5] << "," << p[6] << "," << p[7] << "; unrooted(0..3) = 1,1,1,"
         << count_unrooted_triangulations(3) << "; ";
}

// 6. sampler uniformity and rejection rates
void criterion6(Check& c) {
  SampleRequest req;
  req.kind = SampleKind::ByEdges;
  req.a = 9;
  req.count = 100000;
  req.seed = 2024;
  req.jobs = jobs();
  SampleBatch b = sample_batch(req);
  ClassIndex idx(enumerate_3connected(9));
  std::vector<long> counts(idx.size());
  for (const auto& m : b.maps) {
    int k = idx.find(m);
    c.require(k >= 0, "sample in an enumerated class");
    if (k >= 0) ++counts[k];
  }
  double pval = chi_square_uniform_p(counts);
  c.require(pval > 0.001, "chi-square uniformity at n=9");
  double exact = static_cast<double>(count_rooted_3connected(9)) / static_cast<double>(count_rooted_dissections(5));
  double rate = b.stats.success_rate();
  double sigma = std::sqrt(exact * (1 - exact) / b.stats.trials);
  c.require(std::abs(rate - exact) <= 4 * sigma, "per-trial rate at n=9 within 4 sigma");
  c.note << "n=9: p=" << pval << " rate " << rate << " vs " << exact << " over " << b.stats.trials << " trials; ";

  req.a = 200;
  req.count = 1500;
  SampleBatch big = sample_batch(req);
  double limit = limit_success_by_edges();
  c.require(std::abs(big.stats.success_rate() - limit) <= 0.02, "n=200 rate near 2^8/3^6");
  c.note << "n=200: rate " << big.stats.success_rate() << " vs " << limit << "; ";

  req.kind = SampleKind::ByIJ;
  req.count = 200;
  std::vector<double> per_accept;
  Series2 pij = series_3connected_ij(40);
  c.note << "j=2i-4 rejections/accept:";
  for (int i : {8, 12, 16, 20}) {
    req.a = i;
    req.b = 2 * i - 4;
    SampleBatch s = sample_batch(req);
    double r = static_cast<double>(s.stats.rejections) / s.stats.accepts();
    double ex = static_cast<double>(count_rooted_dissections_ij(i - 3, req.b - 3)) /
                    static_cast<double>(pij[i - 2][req.b - 2]) - 1;
    per_accept.push_back(r / i);
    c.note << " i=" << i << " " << r << " (exact " << ex << ")";
  }
  for (size_t k = 1; k < per_accept.size(); ++k) c.require(per_accept[k] > per_accept[k - 1], "superlinear growth");
  c.note << "; ";
}

// 7. codec round trips and lengths
void criterion7(Check& c) {
  long oracle_maps = 0;
  for (int e = 6; e <= 9; ++e)
    for (const auto& g : all_rootings(enumerate_3connected(e), false))
      for (CodeMode mode : {CodeMode::Paren, CodeMode::Parametric}) {
        CodeBits code = encode(g, mode);
        c.require(rooted_same(decode(from_bytes(to_bytes(code))), g), "oracle round trip");
        if (mode == CodeMode::Paren) {
          c.require(code.payload.size() == 2u * (g.num_edges() + code.edge_added - 2), "payload 2(n-2)");
          ++oracle_maps;
        }
      }
  double worst = 0;
  long sampled = 0;
  for (int n : {20, 50, 100}) {
    SampleRequest req;
    req.a = n;
    req.count = 10000;
    req.seed = 7 + n;
    req.jobs = jobs();
    auto maps = sample_batch(req).maps;
    std::vector<char> ok(maps.size(), 1);
    std::vector<double> bpe(maps.size(), 0);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < req.jobs; ++w)
      pool.emplace_back([&] {
        for (size_t k; (k = next++) < maps.size();) {
          const PlanarMap& g = maps[k];
          CodeBits code = encode(g);
          ok[k] = rooted_same(decode(from_bytes(to_bytes(code))), g) &&
                  code.payload.size() == 2u * (g.num_edges() + code.edge_added - 2);
          if (n == 100) bpe[k] = code_length_report(g).bits_per_edge;
        }
      });
    for (auto& t : pool) t.join();
    c.require(std::all_of(ok.begin(), ok.end(), [](char x) { return x; }), "sampled round trip at n=" + std::to_string(n));
    worst = std::max(worst, *std::max_element(bpe.begin(), bpe.end()));
    sampled += static_cast<long>(maps.size());
  }
  c.require(worst <= 2.35, "bits per edge at n=100");
  Rng rng(99);
  c.note << oracle_maps << " oracle maps, " << sampled << " samples; max bits/edge at n=100 " << worst
         << "; paren vs parametric payload:";
  for (int i : {20, 30, 40}) {
    PlanarMap g = sample_rooted_triangulation(i - 3, rng);
    size_t paren = encode(g, CodeMode::Paren).payload.size(), par = encode(g, CodeMode::Parametric).payload.size();
    c.require(par < paren, "parametric beats paren at i=" + std::to_string(i));
    c.note << " i=" << i << " " << paren << "/" << par;
  }
  c.note << "; ";
}

// 8. word encodings of bicolored trees
void criterion8(Check& c) {
  long pairs = 0, trees = 0;
  for (int i = 1; i <= 7; ++i)
    for (int j = 0; i + j <= 7; ++j) {
      auto all = enumerate_black_rooted(i, j);
      if (all.empty()) continue;
      ClassIndex idx(all);
      for (const auto& t : all) {
        WordTriple w = tree_to_words(t);
        c.require(rooted_same(words_to_tree(w.black, w.white), t), "tree -> words -> tree");
        ++trees;
      }
      // every word pair lands on a tree, each tree equally often
      std::vector<long> hits(idx.size(), 0);
      const int lb = 2 * j + 1, lw = 2 * i;
      long nb = static_cast<long>(binomial(lb, i)), nw = static_cast<long>(binomial(lw, j));
      for (long rb = 0; rb < nb; ++rb)
        for (long rw = 0; rw < nw; ++rw) {
          auto bb = unrank_composition_word(lb, i, rb), ww = unrank_composition_word(lw, j, rw);
          TreeWord black{WordKind::Black, std::string(lb, 'L')}, white{WordKind::White, std::string(lw, 'l')};
          for (int k = 0; k < lb; ++k)
            if (bb[k]) black.letters[k] = 'N';
          for (int k = 0; k < lw; ++k)
            if (ww[k]) white.letters[k] = 'n';
          TreeWord comb = combine_words(black, white);
          std::vector<int> wt;
          for (char x : comb.letters) wt.push_back(letter_weight(x));
          int good = 0;
          for (size_t r = 0; r < wt.size(); ++r) {
            long s = 0;
            bool fine = true;
            for (size_t k = 0; k + 1 < wt.size(); ++k) fine = fine && (s += wt[(r + k) % wt.size()]) >= 0;
            good += fine;
          }
          c.require(good == 1, "one good conjugate per cyclic class");
          int k = idx.find(words_to_tree(black, white));
          c.require(k >= 0, "word pair gives a valid tree");
          if (k >= 0) ++hits[k];
          ++pairs;
        }
      c.require(std::adjacent_find(hits.begin(), hits.end(), std::not_equal_to<>()) == hits.end(), "even fibres");
    }
  auto cls = enumerate_black_rooted(3, 3);
  ClassIndex idx(cls);
  std::vector<long> counts(idx.size(), 0);
  Rng rng(33);
  for (int k = 0; k < 100000; ++k) {
    int x = idx.find(sample_black_rooted(3, 3, rng));
    c.require(x >= 0, "sampled tree in a class");
    if (x >= 0) ++counts[x];
  }
  double pval = chi_square_uniform_p(counts);
  c.require(idx.size() == 100 && pval > 0.001, "(3,3) tree sampler uniform");
  c.note << trees << " trees, " << pairs << " word pairs; (3,3): " << idx.size() << " classes p=" << pval << "; ";
}

}  // namespace

int main() {
  struct Item {
    const char* title;
    void (*run)(Check&);
  };
  const Item items[] = {
      {"closure bijection on trees up to 6 nodes", criterion1},
      {"rooted dissection counts and bivariate identity", criterion2},
      {"tri-orientation structure and uniqueness", criterion3},
      {"minimal alpha0-orientation vs exhaustive enumeration", criterion4},
      {"series, formulas and enumeration", criterion5},
      {"sampler uniformity and rejection rates", criterion6},
      {"codec round trips and code length", criterion7},
      {"tree word encodings", criterion8},
  };
  int failed = 0;
  for (int k = 0; k < 8; ++k) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      items[k].run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += report(k + 1, items[k].title, c, s);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed ? 1 : 0;
}
