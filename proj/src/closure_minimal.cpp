#include "pmaps/angular.hpp"
#include "pmaps/closure.hpp"
#include "pmaps/orient.hpp"

namespace pmaps {

// Completes the dissection, maps it to its outer-triangular primal map, and
// transposes the minimal alpha0-orientation: a dart at an inner vertex takes
// the direction of the derived edge that follows it clockwise.
TriOrientation triorient_minimal(const PlanarMap& d0) {
  if (!d0.has_outer() || d0.face_degree(d0.outer_face()) != 6)
    throw Error(Errc::InvalidArgument, "outer face is not a hexagon");
  PlanarMap d = d0.rooted() ? d0 : d0.with_root(d0.face_first(d0.outer_face()));
  if (!d.has_colors()) d = bicolor(d, d.vertex(d.root_dart()), Color::Black);
  PlanarMap dc = complete_dissection(d);
  int r = dc.root_dart();
  if (dc.dart_color(r) != Color::Black) r = dc.phi(r);
  dc = dc.with_root(r);
  AngularResult ang = angular_of_complete_dissection(dc);
  const PlanarMap& g = ang.map;
  const std::vector<int>& m = ang.image;
  Alpha0Orientation x = minimal_alpha0(g);

  const int outer = d.outer_face();
  TriOrientation o;
  o.dir.assign(d.darts(), 0);
  for (int h = 0; h < d.darts(); ++h) {
    if (d.face(h) == outer || d.face(d.alpha(h)) == outer) continue;
    if (d.is_outer_vertex(d.vertex(h))) {
      o.dir[h] = -1;
      continue;
    }
    bool out;
    if (d.dart_color(h) == Color::Black)
      out = x.primal_out[m[dc.sigma_inv(h)]];
    else
      out = x.dual_out[g.sigma(m[dc.sigma_inv(d.alpha(h))])];
    o.dir[h] = out ? 1 : -1;
  }
  return o;
}

}  // namespace pmaps
