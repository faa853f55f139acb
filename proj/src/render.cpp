#include "pmaps/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace pmaps {

std::vector<Point> tutte_layout(const PlanarMap& m, int iterations) {
  const int V = m.num_vertices();
  std::vector<Point> p(V);
  std::vector<char> fixed(V, 0);
  int start = m.rooted() ? m.root_dart() : (m.has_outer() ? m.face_first(m.outer_face()) : 0);
  std::vector<int> ring;
  int d = start;
  do {
    int v = m.vertex(d);
    if (!fixed[v]) {
      fixed[v] = 1;
      ring.push_back(v);
    }
    d = m.phi(d);
  } while (d != start);
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    // clockwise along the outer face, starting at the top
    double a = std::numbers::pi / 2 - 2 * std::numbers::pi * i / k;
    p[ring[i]] = {std::cos(a), std::sin(a)};
  }
  for (int it = 0; it < iterations; ++it) {
    double moved = 0;
    for (int v = 0; v < V; ++v) {
      if (fixed[v]) continue;
      Point s;
      int n = 0;
      for (int e : m.vertex_darts(v)) {
        int w = m.head(e);
        if (w < 0) continue;
        s.x += p[w].x;
        s.y += p[w].y;
        ++n;
      }
      if (!n) continue;
      Point q{s.x / n, s.y / n};
      moved = std::max(moved, std::abs(q.x - p[v].x) + std::abs(q.y - p[v].y));
      p[v] = q;
    }
    if (moved < 1e-9) break;
  }
  return p;
}

std::string render_svg(const PlanarMap& m, const RenderOptions& opt) {
  std::vector<Point> p = tutte_layout(m);
  const double half = opt.size / 2, scale = half * 0.9;
  auto X = [&](const Point& q) { return half + scale * q.x; };
  auto Y = [&](const Point& q) { return half - scale * q.y; };
  std::ostringstream os;
  os.precision(2);
  os << std::fixed;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
     << "\" viewBox=\"0 0 " << opt.size << ' ' << opt.size << "\">\n";
  os << "<g stroke=\"#333\" stroke-width=\"1.5\">\n";
  for (int d = 0; d < m.darts(); ++d) {
    const Point& a = p[m.vertex(d)];
    if (m.is_stem(d)) {
      // short spur pointing away from the centre
      double len = std::hypot(a.x, a.y);
      Point b = len > 1e-9 ? Point{a.x * 1.08, a.y * 1.08} : Point{a.x, a.y + 0.08};
      os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b)
         << "\" stroke-dasharray=\"3,2\"/>\n";
      continue;
    }
    if (m.alpha(d) < d) continue;
    const Point& b = p[m.head(d)];
    bool root = m.rooted() && (m.root_dart() == d || m.root_dart() == m.alpha(d));
    os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b) << '"'
       << (root ? " stroke=\"#c00\" stroke-width=\"3\"" : "") << "/>\n";
  }
  os << "</g>\n";
  for (int v = 0; v < m.num_vertices(); ++v) {
    bool white = m.has_colors() && m.color(v) == Color::White;
    os << "<circle cx=\"" << X(p[v]) << "\" cy=\"" << Y(p[v]) << "\" r=\"4\" fill=\""
       << (white ? "#fff" : "#000") << "\" stroke=\"#000\"/>\n";
    if (opt.labels)
      os << "<text x=\"" << X(p[v]) + 6 << "\" y=\"" << Y(p[v]) - 6 << "\" font-size=\"10\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pmaps
