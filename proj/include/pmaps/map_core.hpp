#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmaps/error.hpp"

namespace pmaps {

enum class Color : std::uint8_t { Black = 0, White = 1 };
inline Color flip(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct FaceView {
  int id = -1;
  std::vector<int> darts;
  int degree = 0;
  bool is_outer = false;
};

// Rotation-system map. sigma(d) is the next dart counterclockwise around the
// origin of d; alpha(d) == d marks a stem. The face of d is the phi-orbit of d
// with phi = sigma o alpha, and it lies on the right of d. Immutable once built.
class PlanarMap {
 public:
  PlanarMap() = default;

  int darts() const { return static_cast<int>(alpha_.size()); }
  int alpha(int d) const { return alpha_[d]; }
  int sigma(int d) const { return sigma_[d]; }
  int sigma_inv(int d) const { return sigma_inv_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }
  bool is_stem(int d) const { return alpha_[d] == d; }

  int vertex(int d) const { return vert_[d]; }
  // Vertex at the far end of d; -1 for a stem.
  int head(int d) const { return is_stem(d) ? -1 : vert_[alpha_[d]]; }
  int face(int d) const { return face_[d]; }

  int num_vertices() const { return static_cast<int>(vert_first_.size()); }
  int num_faces() const { return static_cast<int>(face_first_.size()); }
  int num_edges() const { return num_edges_; }
  int num_stems() const { return num_stems_; }
  int vertex_first(int v) const { return vert_first_[v]; }
  int face_first(int f) const { return face_first_[f]; }
  int vertex_degree(int v) const { return vert_deg_[v]; }
  int face_degree(int f) const { return face_deg_[f]; }
  std::vector<int> vertex_darts(int v) const;
  std::vector<int> face_darts(int f) const;
  std::vector<FaceView> faces() const;

  std::optional<int> root() const { return root_; }
  bool rooted() const { return root_.has_value(); }
  int root_dart() const;  // throws MissingRoot
  int outer_face() const { return outer_; }
  bool has_outer() const { return outer_ >= 0; }
  bool is_outer_vertex(int v) const;

  bool has_colors() const { return !colors_.empty(); }
  Color color(int v) const { return colors_[v]; }
  Color dart_color(int d) const { return colors_[vert_[d]]; }
  const std::vector<Color>& colors() const { return colors_; }

  const std::vector<int>& alpha_vec() const { return alpha_; }
  const std::vector<int>& sigma_vec() const { return sigma_; }

  PlanarMap with_root(std::optional<int> root) const;
  PlanarMap with_outer_dart(int d) const;
  PlanarMap with_colors(std::vector<Color> colors) const;
  PlanarMap without_colors() const;

 private:
  friend PlanarMap build_map(std::vector<int>, std::vector<int>, std::optional<int>, int,
                             std::vector<Color>);
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<int> vert_, face_;
  std::vector<int> vert_first_, face_first_, vert_deg_, face_deg_;
  int num_edges_ = 0, num_stems_ = 0;
  std::optional<int> root_;
  int outer_ = -1;
  std::vector<Color> colors_;
};

// Validates and computes vertices/faces. The outer face is the face of the
// root when rooted, else the face of outer_dart (if >= 0). Stems do not count
// as edges in the Euler check V - E + F = 2.
PlanarMap build_map(std::vector<int> alpha, std::vector<int> sigma,
                    std::optional<int> root = std::nullopt, int outer_dart = -1,
                    std::vector<Color> colors = {});

// Mutable permutation pair used while constructing maps.
struct RawMap {
  std::vector<int> alpha, sigma;

  int size() const { return static_cast<int>(alpha.size()); }
  int add_dart() {
    int d = size();
    alpha.push_back(d);
    sigma.push_back(d);
    return d;
  }
  void link(int a, int b) {
    alpha[a] = b;
    alpha[b] = a;
  }
  // x must be a lone dart (sigma[x] == x); afterwards sigma(c) == x.
  void insert_after(int c, int x) {
    sigma[x] = sigma[c];
    sigma[c] = x;
  }
};

// Builds a map from face boundaries given as vertex-label cycles, each listed
// with its face on the right (inner faces clockwise). Every directed edge may
// appear once and must have its reverse. Root is the dart root.first -> root.second.
PlanarMap map_from_faces(const std::vector<std::vector<int>>& faces, std::pair<int, int> root,
                         std::vector<int>* label_of_vertex = nullptr);

enum class MapClass { BinaryTreeMap, Quadrangulation, HexDissection, OuterTriangular, Other };
const char* map_class_name(MapClass c);
MapClass classify(const PlanarMap& m);

// Breadth-first two-coloring; throws OddCycle on conflict.
PlanarMap bicolor(const PlanarMap& m, int seed_vertex, Color seed_color);

struct CycleInterior {
  std::vector<int> faces;
  bool is_clockwise = false;
};
CycleInterior cycle_interior(const PlanarMap& m, const std::vector<int>& cycle);

// Looks for a simple cycle of usable darts with the bounded side on the right.
// usable[d] means d may be traversed from its origin to its head.
struct Circuit {
  std::vector<int> darts;
  std::vector<int> faces;
};
std::optional<Circuit> find_clockwise_circuit(const PlanarMap& m, const std::vector<char>& usable);

// Breadth-first relabeling code from a root dart: pairs (alpha, sigma) in new labels.
std::vector<int> canonical_code(const PlanarMap& m, int root);
std::vector<int> unrooted_canonical_code(const PlanarMap& m);
bool rooted_equal(const PlanarMap& a, int ra, const PlanarMap& b, int rb);
bool maps_isomorphic(const PlanarMap& a, const PlanarMap& b, bool rooted);
// Renumbers darts in breadth-first order from the root (root becomes 0).
PlanarMap canonical_relabel(const PlanarMap& m);

std::string to_pmap(const PlanarMap& m);
PlanarMap parse_pmap(std::string_view text);
// Reads blank-line separated blocks; lines starting with '#' are skipped.
std::vector<PlanarMap> read_pmap_stream(std::istream& in);

}  // namespace pmaps
