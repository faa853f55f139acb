#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmaps/map_core.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Per-dart direction on a dissection: +1 outward, -1 inward, 0 on hexagon edges.
struct TriOrientation {
  std::vector<int> dir;
  bool operator==(const TriOrientation& o) const { return dir == o.dir; }
};

struct ClosureResult {
  PlanarMap dissection;     // rooted at the hexagon dart from H0 to H1
  TriOrientation orient;
  std::vector<int> stem_map;  // tree dart -> its new opposite dart, -1 if not a stem
  std::vector<int> hexagon;   // vertex ids H0..H5
};

// Tree darts keep their ids. Opposite darts of the stems follow, then the 12
// hexagon darts: the one from H_k to H_k+1 is 2k, its reverse 2k+1 (offsets).
ClosureResult close(const PlanarMap& tree);

struct PartialClosure {
  PlanarMap map;         // tree darts first, then the opposite darts created
  int stems_left = 0;
  int outer_entire = 0;  // entire darts on the face that carries the stems
};
// Stack-based closure; with rng, closes available stems in random order instead.
PartialClosure partial_closure(const PlanarMap& tree, Rng* rng = nullptr);

// Keeps outward darts of inner edges. root_dart (a kept dart) roots the result.
PlanarMap open(const PlanarMap& dissection, const TriOrientation& orient,
               std::optional<int> root_dart = std::nullopt);

struct TriReport {
  std::vector<std::string> issues;
  std::optional<Circuit> circuit;
  int bi_oriented = 0;
  int simply_oriented = 0;
  bool ok() const { return issues.empty(); }
};
TriReport verify_triorientation(const PlanarMap& dissection, const TriOrientation& orient);

// Unique tri-orientation without clockwise circuit of an irreducible dissection.
TriOrientation triorient_minimal(const PlanarMap& dissection);

// Vertex ids of the outer face in face order, starting at the origin of
// its first dart (the root when rooted).
std::vector<int> outer_cycle(const PlanarMap& m);

}  // namespace pmaps
