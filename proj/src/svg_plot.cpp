#include "cellule/svg_plot.hpp"

#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace cellule {

namespace {

struct Embedding {
  // cartesian images of the two simple roots
  double a1x, a1y, a2x, a2y;

  std::pair<double, double> to_xy(const std::vector<Rat>& p) const {
    double c1 = p[0].to_double(), c2 = p[1].to_double();
    return {c1 * a1x + c2 * a2x, c1 * a1y + c2 * a2y};
  }
};

Embedding make_embedding(const RootSystem& rs) {
  // Cholesky of the Gram matrix: alpha1 = (sqrt g11, 0),
  // alpha2 = (g12 / sqrt g11, sqrt(g22 - g12^2 / g11)).
  double g11 = rs.gram()[0][0].to_double();
  double g12 = rs.gram()[0][1].to_double();
  double g22 = rs.gram()[1][1].to_double();
  Embedding e;
  e.a1x = std::sqrt(g11);
  e.a1y = 0.0;
  e.a2x = g12 / e.a1x;
  e.a2y = std::sqrt(g22 - e.a2x * e.a2x);
  return e;
}

std::string color_for(int idx) {
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2",
                                  "#edc948", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};
  return palette[size_t(idx) % (sizeof(palette) / sizeof(palette[0]))];
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(5);
  out << std::fixed << v;
  return out.str();
}

}  // namespace

std::string render_alcove_svg(std::shared_ptr<const CoxeterSystem> sys, const PlotOptions& opt) {
  require(sys->rank() == 2, ErrorCode::RankUnsupported, "alcove plots are rank-2 only");
  const RootSystem& rs = sys->roots();
  Embedding emb = make_embedding(rs);
  const double win = opt.window;

  // enumerate alcoves whose representative point lies in the window box
  std::set<std::vector<std::int32_t>> seen;
  std::deque<Element> frontier{sys->identity()};
  seen.insert(sys->identity().coords());
  std::vector<Element> shown;
  while (!frontier.empty()) {
    Element cur = frontier.front();
    frontier.pop_front();
    auto [cx, cy] = emb.to_xy(rep_point(cur));
    bool inside = std::abs(cx) <= win + 1.0 && std::abs(cy) <= win + 1.0;
    if (inside && std::abs(cx) <= win && std::abs(cy) <= win) shown.push_back(cur);
    if (!inside || cur.length() >= opt.max_length) continue;
    for (int s = 0; s < sys->num_generators(); ++s) {
      Element nb = sys->left_mult(s, cur);
      if (!seen.count(nb.coords())) {
        seen.insert(nb.coords());
        frontier.push_back(nb);
      }
    }
  }
  std::sort(shown.begin(), shown.end(), Element::length_key_less);

  int maxlen = 0;
  for (const auto& w : shown) maxlen = std::max(maxlen, w.length());
  CellDecomposition decomp(sys, maxlen + 1);

  const double scale = 360.0 / win;  // viewport is 800x800 with margin
  auto X = [&](double x) { return 400.0 + x * scale; };
  auto Y = [&](double y) { return 400.0 - y * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  // alcove polygons colored by lowest-cell block
  std::map<std::string, int> block_color;
  for (const auto& w : shown) {
    auto assignment = decomp.assign(w);
    std::string fill = "#e0e0e0";
    if (assignment) {
      std::string key = decomp.assignment_string(*assignment);
      auto it = block_color.find(key);
      if (it == block_color.end()) it = block_color.emplace(key, int(block_color.size())).first;
      fill = color_for(it->second);
    }
    svg << "<polygon points=\"";
    const int r = sys->rank();
    bool first = true;
    for (const auto& v0 : rs.alcove_vertices()) {
      std::vector<Rat> v(size_t(r), Rat(0));
      for (int i = 0; i < r; ++i) {
        Rat acc(w.map().t[size_t(i)]);
        for (int k = 0; k < r; ++k) acc = acc + Rat(w.map().m[size_t(i * r + k)]) * v0[size_t(k)];
        v[size_t(i)] = acc;
      }
      auto [px, py] = emb.to_xy(v);
      if (!first) svg << " ";
      first = false;
      svg << fmt(X(px)) << "," << fmt(Y(py));
    }
    svg << "\" fill=\"" << fill << "\" fill-opacity=\"0.55\" stroke=\"none\"/>\n";
  }

  // hyperplane segments, stroke width by weight
  for (int d = 0; d < rs.num_positive(); ++d) {
    // cartesian normal of <x, alpha_d-check>: gradient wrt (c1, c2) mapped
    // through the inverse embedding; parametrize the line instead via two
    // points in root coordinates.
    const auto& pairing = rs.positive(d).pairing;
    double p1 = double(pairing[0]), p2 = double(pairing[1]);
    for (int n = -int(3 * win) - 4; n <= int(3 * win) + 4; ++n) {
      // points with p1 c1 + p2 c2 = n; pick a base point and direction
      double b1, b2;
      if (std::abs(p1) > std::abs(p2)) {
        b1 = double(n) / p1;
        b2 = 0;
      } else {
        b1 = 0;
        b2 = double(n) / p2;
      }
      double d1 = -p2, d2 = p1;  // direction in root coordinates
      double bx = b1 * emb.a1x + b2 * emb.a2x, by = b1 * emb.a1y + b2 * emb.a2y;
      double dx = d1 * emb.a1x + d2 * emb.a2x, dy = d1 * emb.a1y + d2 * emb.a2y;
      double norm = std::hypot(dx, dy);
      dx /= norm;
      dy /= norm;
      // recenter on the point of the line nearest the origin and skip lines
      // that stay outside the window
      double t = -(bx * dx + by * dy);
      bx += t * dx;
      by += t * dy;
      if (std::hypot(bx, by) > 1.5 * win) continue;
      double span = 1.6 * win;
      double x0 = bx - span * dx, y0 = by - span * dy;
      double x1 = bx + span * dx, y1 = by + span * dy;
      int cw = sys->hyperplane_weight(d, n);
      svg << "<line x1=\"" << fmt(X(x0)) << "\" y1=\"" << fmt(Y(y0)) << "\" x2=\"" << fmt(X(x1))
          << "\" y2=\"" << fmt(Y(y1)) << "\" stroke=\"#333333\" stroke-width=\""
          << fmt(0.4 + 0.5 * cw) << "\"/>\n";
    }
  }

  // special points, one marker class per orbit
  OrbitData orbits = special_point_orbits(*sys, std::max(3, int(3 * win) + 2));
  for (size_t i = 0; i < orbits.points.size(); ++i) {
    auto [px, py] = emb.to_xy(orbits.points[i].coords);
    if (std::abs(px) > win || std::abs(py) > win) continue;
    int cls = orbits.orbit_of_point[i];
    svg << "<circle cx=\"" << fmt(X(px)) << "\" cy=\"" << fmt(Y(py)) << "\" r=\"5\" fill=\""
        << color_for(8 + cls) << "\" class=\"special-orbit-" << cls << "\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cellule
