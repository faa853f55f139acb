#include "pmaps/sample.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"

namespace pmaps {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point& t) {
  auto now = Clock::now();
  double s = std::chrono::duration<double>(now - t).count();
  t = now;
  return s;
}

std::vector<int> outer_face_darts(const PlanarMap& m) {
  std::vector<int> out;
  int r = m.root_dart(), d = r;
  do {
    out.push_back(d);
    d = m.phi(d);
  } while (d != r);
  return out;
}

// Steps after rooting the dissection: test, add the edge, map to the primal.
std::optional<PlanarMap> finish_trial(const PlanarMap& d, SampleStats& st, Clock::time_point& t) {
  bool ok = is_undecomposable(d);
  st.test_seconds += since(t);
  if (!ok) {
    ++st.rejections;
    return std::nullopt;
  }
  PlanarMap q = pi(d);
  PlanarMap m = primal_of_quadrangulation(q.has_colors() ? q : q.without_colors());
  st.finish_seconds += since(t);
  return m;
}

}  // namespace

SampleStats& SampleStats::operator+=(const SampleStats& o) {
  trials += o.trials;
  rejections += o.rejections;
  tree_seconds += o.tree_seconds;
  closure_seconds += o.closure_seconds;
  test_seconds += o.test_seconds;
  finish_seconds += o.finish_seconds;
  return *this;
}

bool ij_feasible(int i, int j) { return i >= 4 && j >= 4 && j <= 2 * i - 4 && i <= 2 * j - 4; }

double limit_success_by_edges() { return 256.0 / 729.0; }

double limit_success_by_ij(double alpha) {
  double a = (2 - alpha) * (2 * alpha - 1) / alpha;
  return limit_success_by_edges() * a * a;
}

std::optional<PlanarMap> trial_by_edges(int n, Rng& rng, SampleStats& st) {
  if (n < 6) throw Error(Errc::InvalidArgument, "need at least 6 edges");
  auto t = Clock::now();
  ++st.trials;
  PlanarMap tree = sample_rooted_binary(n - 4, rng);
  st.tree_seconds += since(t);
  PlanarMap d = close(tree).dissection;
  std::vector<int> hex = outer_face_darts(d);
  d = d.with_root(hex[std::uniform_int_distribution<int>(0, 5)(rng)]).without_colors();
  st.closure_seconds += since(t);
  return finish_trial(d, st, t);
}

std::optional<PlanarMap> trial_by_ij(int i, int j, Rng& rng, SampleStats& st) {
  if (!ij_feasible(i, j)) throw Error(Errc::EmptyClass, "no 3-connected map with these vertex and face counts");
  auto t = Clock::now();
  ++st.trials;
  PlanarMap tree = sample_black_rooted(i - 3, j - 3, rng);
  st.tree_seconds += since(t);
  PlanarMap d = close(tree).dissection;
  std::vector<int> black;
  for (int h : outer_face_darts(d))
    if (d.dart_color(h) == Color::Black) black.push_back(h);
  d = d.with_root(black[std::uniform_int_distribution<int>(0, 2)(rng)]);
  st.closure_seconds += since(t);
  return finish_trial(d, st, t);
}

namespace {

template <class Trial>
Sample run_trials(Trial trial, const SampleOptions& opt) {
  Sample s;
  for (;;) {
    if (opt.max_trials > 0 && s.stats.trials >= opt.max_trials)
      throw Error(Errc::TrialCapReached, "trial cap reached");
    if (auto m = trial(s.stats)) {
      s.map = std::move(*m);
      return s;
    }
  }
}

}  // namespace

Sample sample_3connected_by_edges(int n, Rng& rng, const SampleOptions& opt) {
  if (n == 7) throw Error(Errc::EmptyClass, "no 3-connected map has 7 edges");
  if (n < 6) throw Error(Errc::InvalidArgument, "need at least 6 edges");
  return run_trials([&](SampleStats& st) { return trial_by_edges(n, rng, st); }, opt);
}

Sample sample_3connected_by_ij(int i, int j, Rng& rng, const SampleOptions& opt) {
  if (!ij_feasible(i, j)) throw Error(Errc::EmptyClass, "no 3-connected map with these vertex and face counts");
  return run_trials([&](SampleStats& st) { return trial_by_ij(i, j, rng, st); }, opt);
}

PlanarMap sample_rooted_triangulation(int n, Rng& rng) {
  if (n < 1) throw Error(Errc::InvalidArgument, "need at least one inner vertex");
  PlanarMap d = color_complete(close(sample_triangulation_tree(n, rng)).dissection);
  int r = d.root_dart();
  if (d.dart_color(r) != Color::Black) d = d.with_root(d.phi(r));
  PlanarMap g = primal_of_complete_dissection(d);
  std::vector<int> outer = outer_face_darts(g);
  return g.with_root(outer[std::uniform_int_distribution<int>(0, 2)(rng)]);
}

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

SampleBatch sample_batch(const SampleRequest& req) {
  if (req.count < 0) throw Error(Errc::InvalidArgument, "negative count");
  // Validate once before spawning workers.
  if (req.kind == SampleKind::ByEdges && (req.a < 6 || req.a == 7))
    throw Error(req.a == 7 ? Errc::EmptyClass : Errc::InvalidArgument, "no 3-connected map with that many edges");
  if (req.kind == SampleKind::ByIJ && !ij_feasible(req.a, req.b))
    throw Error(Errc::EmptyClass, "no 3-connected map with these vertex and face counts");
  if (req.kind == SampleKind::Triangulation && req.a < 1)
    throw Error(Errc::InvalidArgument, "need at least one inner vertex");

  SampleBatch out;
  out.maps.resize(req.count);
  std::vector<SampleStats> stats(req.count);
  auto one = [&](long k) {
    Rng rng = stream_rng(req.seed, static_cast<std::uint64_t>(k));
    switch (req.kind) {
      case SampleKind::ByEdges: {
        Sample s = sample_3connected_by_edges(req.a, rng);
        out.maps[k] = std::move(s.map);
        stats[k] = s.stats;
        break;
      }
      case SampleKind::ByIJ: {
        Sample s = sample_3connected_by_ij(req.a, req.b, rng);
        out.maps[k] = std::move(s.map);
        stats[k] = s.stats;
        break;
      }
      case SampleKind::Triangulation:
        out.maps[k] = sample_rooted_triangulation(req.a, rng);
        stats[k].trials = 1;
        break;
    }
  };
  int jobs = std::max(1, std::min<int>(req.jobs, static_cast<int>(std::max<long>(1, req.count))));
  if (jobs == 1) {
    for (long k = 0; k < req.count; ++k) one(k);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (long k; (k = next++) < req.count;) one(k);
      });
    for (auto& th : pool) th.join();
  }
  for (const auto& s : stats) out.stats += s;
  return out;
}

}  // namespace pmaps
