#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmaps/map_core.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

struct SampleStats {
  long trials = 0;
  long rejections = 0;
  // Seconds spent per phase: tree sampling, closure and rooting, the
  // undecomposability test, and the final edge-adding plus angular mapping.
  double tree_seconds = 0, closure_seconds = 0, test_seconds = 0, finish_seconds = 0;

  long accepts() const { return trials - rejections; }
  double success_rate() const { return trials ? static_cast<double>(accepts()) / trials : 0.0; }
  SampleStats& operator+=(const SampleStats& o);
};

struct SampleOptions {
  long max_trials = 0;  // 0 means unlimited; otherwise TrialCapReached
};

struct Sample {
  PlanarMap map;
  SampleStats stats;
};

// One rejection trial; the map when accepted.
std::optional<PlanarMap> trial_by_edges(int n, Rng& rng, SampleStats& stats);
std::optional<PlanarMap> trial_by_ij(int i, int j, Rng& rng, SampleStats& stats);

// Uniform rooted 3-connected map with n >= 6 edges (none exists for n = 7).
Sample sample_3connected_by_edges(int n, Rng& rng, const SampleOptions& opt = {});
// Uniform rooted 3-connected map with i vertices and j faces.
Sample sample_3connected_by_ij(int i, int j, Rng& rng, const SampleOptions& opt = {});
// Uniform rooted triangulation with n inner vertices; no rejection.
PlanarMap sample_rooted_triangulation(int n, Rng& rng);

bool ij_feasible(int i, int j);

// 2^8/3^6.
double limit_success_by_edges();
// Limit of the per-trial success rate when i/j tends to alpha in (1/2, 2).
double limit_success_by_ij(double alpha);

// Generator for sample number k of a run seeded with seed; results do not
// depend on how indices are spread over workers.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

enum class SampleKind { ByEdges, ByIJ, Triangulation };
struct SampleRequest {
  SampleKind kind = SampleKind::ByEdges;
  int a = 0, b = 0;  // n, or (i, j), or n
  long count = 1;
  std::uint64_t seed = 1;
  int jobs = 1;
};
struct SampleBatch {
  std::vector<PlanarMap> maps;
  SampleStats stats;
};
SampleBatch sample_batch(const SampleRequest& req);

}  // namespace pmaps
