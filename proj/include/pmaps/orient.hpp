#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pmaps/map_core.hpp"
#include "pmaps/trees.hpp"

namespace pmaps {

// Outer vertices of a rooted outer-triangular map with root r: a1 is the
// root vertex, a3 = head(r), a2 = head(phi(r)). a1, a2, a3 are clockwise.
struct OuterLabels {
  int a1 = -1, a2 = -1, a3 = -1;
};
OuterLabels outer_labels(const PlanarMap& g);

enum class VertexRole : std::uint8_t { Primal, Dual, EdgeVertex };

struct DerivedMap {
  PlanarMap map;  // 6 stems, on the three outer vertices and the three outer edge-vertices
  std::vector<VertexRole> role;    // per derived vertex
  std::vector<int> origin;         // per derived vertex: G vertex, G face, or lower G dart of the edge
  std::vector<int> p_at_v, p_at_e;  // per G dart g: derived darts of the half of g's edge at vertex(g)
  std::vector<int> d_at_f, d_at_e;  // per G dart g with inner face(g): dual derived darts, else -1
  std::vector<int> stems;          // derived stem darts
  std::vector<int> source;         // per derived dart: G dart it comes from, -1 for stems
};
DerivedMap derived_map(const PlanarMap& g);

// Orientation of the derived map stored on G's darts.
// primal_out[g]: vertex(g) -> edge-vertex. dual_out[g]: face(g) -> edge-vertex
// (ignored when face(g) is the outer face). label[g] in {1,2,3}.
struct Alpha0Orientation {
  std::vector<char> primal_out, dual_out;
  std::vector<int> label;
  OuterLabels outer;  // stems at a1, a2, a3 carry labels 1, 2, 3
  long pointer_moves = 0;
  int steps = 0;
};

enum class EligibleStrategy { Rightmost, Leftmost, Random };
struct Alpha0Options {
  EligibleStrategy strategy = EligibleStrategy::Rightmost;
  Rng* rng = nullptr;          // Random strategy
  bool check_pointer = false;  // compare every pointer choice with a full scan
  bool check_invariants = false;
};
Alpha0Orientation minimal_alpha0(const PlanarMap& g, const Alpha0Options& opt = {});

// Per derived dart: 1 when the edge is directed away from the dart's origin.
std::vector<char> derived_out(const DerivedMap& dm, const Alpha0Orientation& x);

struct Alpha0Report {
  std::vector<std::string> issues;
  std::optional<Circuit> circuit;
  bool ok() const { return issues.empty(); }
};
Alpha0Report verify_alpha0(const PlanarMap& g, const DerivedMap& dm, const Alpha0Orientation& x);
// Outdegree and clockwise-circuit checks on a bare derived orientation.
Alpha0Report verify_derived_orientation(const DerivedMap& dm, const std::vector<char>& out);

// Cycle C_k bookkeeping, exposed for tests of the eligible-vertex scan.
struct ShellingState {
  std::vector<int> right, left;  // neighbours along C_k from a3 to a2, -1 off the cycle
  std::vector<char> active;
  std::vector<int> blocked;  // number of separating faces at the vertex
  int a2 = -1, a3 = -1;
  int pointer = -1;
};
// Rightmost vertex that is active, not blocked and not a2/a3; NoEligibleVertex otherwise.
int eligible_scan(const ShellingState& st);

}  // namespace pmaps
