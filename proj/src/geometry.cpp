#include "cellule/geometry.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace cellule {

namespace {

const CoxeterSystem& sys_of(const Element& w) {
  require(w.system() != nullptr, ErrorCode::Internal, "element without a system");
  return *w.system();
}

std::int64_t pos_mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

// sign of <rep(wA0), beta-check> - level, computed on integer numerators.
int side_of(const Element& w, int root, std::int64_t level) {
  const CoxeterSystem& sys = sys_of(w);
  const int r = sys.rank();
  const auto& pnum = sys.roots().barycenter_num();
  const std::int64_t den = sys.roots().barycenter_den();
  const auto& f = w.map();
  std::int64_t val = 0;
  const auto& pairing = sys.roots().positive(root).pairing;
  for (int i = 0; i < r; ++i) {
    std::int64_t qi = den * f.t[size_t(i)];
    for (int k = 0; k < r; ++k) qi += f.m[size_t(i * r + k)] * pnum[size_t(k)];
    val += pairing[size_t(i)] * qi;
  }
  val -= level * den;
  return val > 0 ? 1 : (val < 0 ? -1 : 0);
}

}  // namespace

std::vector<Rat> rep_point(const Element& w) {
  const CoxeterSystem& sys = sys_of(w);
  const int r = sys.rank();
  const auto& p0 = sys.roots().alcove_barycenter();
  const auto& f = w.map();
  std::vector<Rat> out(size_t(r), Rat(0));
  for (int i = 0; i < r; ++i) {
    Rat acc(f.t[size_t(i)]);
    for (int k = 0; k < r; ++k) acc = acc + Rat(f.m[size_t(i * r + k)]) * p0[size_t(k)];
    out[size_t(i)] = acc;
  }
  return out;
}

Alcove alcove_of(const Element& w) { return Alcove{w, rep_point(w)}; }

Alcove act_generator(int s, const Alcove& a) {
  return alcove_of(sys_of(a.elem).left_mult(s, a.elem));
}

std::vector<Hyperplane> separating_hyperplanes(const Element& a, const Element& b) {
  const CoxeterSystem& sys = sys_of(a);
  std::vector<Hyperplane> out;
  for (int d = 0; d < sys.roots().num_positive(); ++d) {
    std::int64_t ka = a.coords()[size_t(d)], kb = b.coords()[size_t(d)];
    std::int64_t lo = std::min(ka, kb) + 1, hi = std::max(ka, kb);
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back({d, n});
  }
  return out;
}

std::vector<Hyperplane> separating_hyperplanes(const Alcove& a, const Alcove& b) {
  return separating_hyperplanes(a.elem, b.elem);
}

Hyperplane crossing_hyperplane(int s, const Element& w) {
  const CoxeterSystem& sys = sys_of(w);
  Element sw = sys.left_mult(s, w);
  for (int d = 0; d < sys.roots().num_positive(); ++d)
    if (sw.coords()[size_t(d)] != w.coords()[size_t(d)])
      return {d, std::max<std::int64_t>(sw.coords()[size_t(d)], w.coords()[size_t(d)])};
  fail(ErrorCode::Internal, "adjacent alcoves with equal coordinates");
}

Strip strip_of(int direction, const Alcove& a) {
  return Strip{direction, a.elem.coords()[size_t(direction)]};
}

MaxStripRegion maximal_strip_region(const Alcove& a) {
  const CoxeterSystem& sys = sys_of(a.elem);
  MaxStripRegion out;
  for (int d = 0; d < sys.roots().num_positive(); ++d) {
    std::int64_t k = a.elem.coords()[size_t(d)];
    int w0 = sys.hyperplane_weight(d, 0), w1 = sys.hyperplane_weight(d, 1);
    std::int64_t lo, hi;
    if (w0 == w1) {
      lo = k;
      hi = k + 1;
    } else {
      // only hyperplanes of the heavier parity bound the maximal strip
      std::int64_t p = w0 > w1 ? 0 : 1;
      lo = k - pos_mod2(k - p);
      hi = (k + 1) + pos_mod2(p - (k + 1));
    }
    out.interval.push_back({lo, hi});
  }
  return out;
}

bool outside_max_strips(const Element& w) {
  const CoxeterSystem& sys = sys_of(w);
  MaxStripRegion base = maximal_strip_region(alcove_of(sys.identity()));
  // wA0 lies in the union of the maximal strips through A0 iff it lies in
  // one of them; an alcove never crosses a hyperplane.
  for (size_t d = 0; d < base.interval.size(); ++d) {
    std::int64_t k = w.coords()[d];
    if (base.interval[d].first <= k && k + 1 <= base.interval[d].second) return false;
  }
  return true;
}

BoundContext bound_context(const Element& x, const Element& y) {
  const CoxeterSystem& sys = sys_of(x);
  BoundContext out;
  out.x = x;
  out.y = y;
  Element xy = sys.multiply(x, y);
  for (int d = 0; d < sys.roots().num_positive(); ++d) {
    std::int64_t k0 = 0, ky = y.coords()[size_t(d)], kxy = xy.coords()[size_t(d)];
    std::int64_t lo1 = std::min(k0, ky) + 1, hi1 = std::max(k0, ky);
    std::int64_t lo2 = std::min(ky, kxy) + 1, hi2 = std::max(ky, kxy);
    std::int64_t lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) continue;
    int cmax = 0;
    for (std::int64_t n = lo; n <= hi; ++n) {
      out.h_xy.push_back({d, n});
      cmax = std::max(cmax, sys.hyperplane_weight(d, n));
    }
    out.directions.push_back(d);
    out.c_per_direction[d] = cmax;
    out.c_total += cmax;
  }
  return out;
}

Hyperplane reflect_hyperplane(const CoxeterSystem& sys, const Hyperplane& h, const Hyperplane& mirror) {
  // <(x)sigma, beta-check> = <x, s_alpha(beta-check)> + n <alpha, beta-check>
  // for sigma the reflection in H_{alpha,n}, so the image of H_{beta,m} is
  // H_{delta, eps (m - n c)} with s_alpha(beta-check) = eps delta-check.
  auto [idx, sign] = sys.roots().reflect(mirror.root, h.root);
  std::int64_t c = sys.roots().root_coroot_pair(mirror.root, h.root);
  return Hyperplane{idx, sign * (h.level - mirror.level * c)};
}

SType s_type_classify(const Hyperplane& h, const Element& x, const Element& y, int s) {
  const CoxeterSystem& sys = sys_of(x);
  require(sys.is_right_descent(x, s), ErrorCode::PreconditionViolated, "need xs < x");
  require(sys.is_left_descent(s, y), ErrorCode::PreconditionViolated, "need sy < y");
  Hyperplane hs = crossing_hyperplane(s, y);
  require(h.root != hs.root, ErrorCode::PreconditionViolated,
          "hyperplane parallel to the crossing hyperplane of s");
  // membership of h in H_{xs,y}
  Element xs = sys.right_mult(x, s);
  Element xsy = sys.multiply(xs, y);
  auto separates = [&](const Element& a, const Element& b) {
    std::int64_t ka = a.coords()[size_t(h.root)], kb = b.coords()[size_t(h.root)];
    return std::min(ka, kb) + 1 <= h.level && h.level <= std::max(ka, kb);
  };
  require(separates(sys.identity(), y) && separates(y, xsy), ErrorCode::PreconditionViolated,
          "hyperplane not in H_{xs,y}");

  std::int64_t c = sys.roots().root_coroot_pair(hs.root, h.root);
  if (c == 0) return SType::Fixed;
  // All of h, hs and the mirror image of h pass through a common
  // codimension-2 subspace; the image meets the pair of opposite regions
  // whose sign pattern (wrt h, hs) matches (sign c, 1) up to global sign.
  int sign_h = side_of(y, h.root, h.level);
  int sign_s = side_of(y, hs.root, hs.level);
  require(sign_h != 0 && sign_s != 0, ErrorCode::Internal, "representative point on a hyperplane");
  int csign = c > 0 ? 1 : -1;
  return csign == sign_h * sign_s ? SType::Type1 : SType::Type2;
}

namespace {

struct RatVecLess {
  bool operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return false;
  }
};

// All alcove vertices lambda with |<lambda, beta-check>| <= radius for every
// direction, gathered from a BFS over nearby alcoves, with m(lambda).
std::map<std::vector<Rat>, int, RatVecLess> vertex_m_values(const CoxeterSystem& sys, int radius) {
  const int n = sys.roots().num_positive();
  std::set<std::vector<std::int32_t>> seen;
  std::deque<Element> frontier{sys.identity()};
  seen.insert(sys.identity().coords());
  std::map<std::vector<Rat>, int, RatVecLess> out;
  auto consider = [&](const Element& w) {
    for (const auto& v0 : sys.roots().alcove_vertices()) {
      // vertex = M v0 + t, exact rational
      const int r = sys.rank();
      std::vector<Rat> v(size_t(r), Rat(0));
      for (int i = 0; i < r; ++i) {
        Rat acc(w.map().t[size_t(i)]);
        for (int k = 0; k < r; ++k) acc = acc + Rat(w.map().m[size_t(i * r + k)]) * v0[size_t(k)];
        v[size_t(i)] = acc;
      }
      bool inside = true;
      int m = 0;
      for (int d = 0; d < n && inside; ++d) {
        Rat p = sys.roots().pair_point(v, d);
        if (p > Rat(radius) || p < Rat(-radius)) inside = false;
        if (p.is_integer()) m += sys.hyperplane_weight(d, p.num());
      }
      if (inside && !out.count(v)) out[v] = m;
    }
  };
  while (!frontier.empty()) {
    Element cur = frontier.front();
    frontier.pop_front();
    consider(cur);
    for (int s = 0; s < sys.num_generators(); ++s) {
      Element nb = sys.left_mult(s, cur);
      bool near = true;
      for (int d = 0; d < n; ++d) {
        std::int32_t k = nb.coords()[size_t(d)];
        if (k > radius || k < -radius - 1) near = false;
      }
      if (near && !seen.count(nb.coords())) {
        seen.insert(nb.coords());
        frontier.push_back(nb);
      }
    }
  }
  return out;
}

std::vector<std::vector<Rat>> special_coords(const CoxeterSystem& sys, int radius) {
  auto verts = vertex_m_values(sys, radius);
  int maxm = 0;
  for (const auto& [v, m] : verts) maxm = std::max(maxm, m);
  require(maxm == sys.nu_tilde(), ErrorCode::Internal,
          "maximal vertex weight does not match nu-tilde");
  std::vector<std::vector<Rat>> out;
  for (const auto& [v, m] : verts)
    if (m == maxm) out.push_back(v);
  return out;
}

void fill_parabolic_data(const CoxeterSystem& sys, SpecialPoint& sp) {
  // Stabilizer data is standard-parabolic exactly for vertices of A0.
  for (const auto& v : sys.roots().alcove_vertices()) {
    if (v == sp.coords) {
      sp.has_parabolic_data = true;
      for (int s = 0; s < sys.num_generators(); ++s) {
        const auto& g = sys.generator(s);
        Rat p = sys.roots().pair_point(sp.coords, g.wall_root);
        if (p == Rat(g.wall_level)) sp.stabilizer_gens.push_back(s);
      }
      sp.w_lambda = sys.longest_parabolic(sp.stabilizer_gens);
      return;
    }
  }
}

int count_orbits(const CoxeterSystem& sys, const std::vector<std::vector<Rat>>& pts,
                 std::vector<int>& comp) {
  const int n = sys.roots().num_positive();
  std::map<std::vector<Rat>, int, RatVecLess> index;
  for (int i = 0; i < int(pts.size()); ++i) index[pts[size_t(i)]] = i;
  // widest pairing value over the box bounds the reflection levels that can
  // map one box point onto another
  std::int64_t span = 2;
  for (const auto& lam : pts)
    for (int d = 0; d < n; ++d) {
      std::int64_t p = sys.roots().pair_point(lam, d).floor();
      span = std::max(span, std::abs(p) + 2);
    }
  comp.assign(pts.size(), -1);
  int ncomp = 0;
  for (int start = 0; start < int(pts.size()); ++start) {
    if (comp[size_t(start)] >= 0) continue;
    comp[size_t(start)] = ncomp;
    std::deque<int> q{start};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      const auto& lam = pts[size_t(u)];
      for (int d = 0; d < n; ++d) {
        Rat p = sys.roots().pair_point(lam, d);
        // single reflections sigma_{d,lev} already give lambda + k alpha
        // for every k, so levels within the box span connect the whole
        // orbit inside the box
        std::int64_t base = p.floor();
        for (std::int64_t lev = base - 2 * span; lev <= base + 2 * span; ++lev) {
          // image = lambda - (p - lev) * alpha_d
          Rat f = p - Rat(lev);
          std::vector<Rat> img = lam;
          const auto& root = sys.roots().positive(d).root;
          for (int i = 0; i < sys.rank(); ++i)
            img[size_t(i)] = img[size_t(i)] - f * Rat(root[size_t(i)]);
          auto it = index.find(img);
          if (it != index.end() && comp[size_t(it->second)] < 0) {
            comp[size_t(it->second)] = ncomp;
            q.push_back(it->second);
          }
        }
      }
    }
    ++ncomp;
  }
  return ncomp;
}

}  // namespace

std::vector<SpecialPoint> special_points(const CoxeterSystem& sys, int radius) {
  require(radius >= 1, ErrorCode::RadiusTooSmall, "radius must be at least 1");
  auto verts = vertex_m_values(sys, radius);
  std::vector<SpecialPoint> out;
  int maxm = 0;
  for (const auto& [v, m] : verts) maxm = std::max(maxm, m);
  require(maxm == sys.nu_tilde(), ErrorCode::Internal,
          "maximal vertex weight does not match nu-tilde");
  for (const auto& [v, m] : verts) {
    if (m != maxm) continue;
    SpecialPoint sp;
    sp.coords = v;
    sp.m_value = m;
    fill_parabolic_data(sys, sp);
    out.push_back(std::move(sp));
  }
  return out;
}

OrbitData special_point_orbits(const CoxeterSystem& sys, int radius) {
  auto pts = special_coords(sys, radius);
  auto pts_bigger = special_coords(sys, radius + 1);
  std::vector<int> comp, comp_bigger;
  int n1 = count_orbits(sys, pts, comp);
  int n2 = count_orbits(sys, pts_bigger, comp_bigger);
  require(n1 == n2, ErrorCode::RadiusTooSmall,
          "orbit count not stable between radius and radius+1");

  // one representative per orbit, chosen among the special vertices of A0
  std::vector<std::pair<SpecialPoint, int>> reps_with_comp;
  std::set<int> covered;
  for (const auto& v : sys.roots().alcove_vertices()) {
    for (int i = 0; i < int(pts.size()); ++i) {
      if (!(pts[size_t(i)] == v)) continue;
      if (covered.count(comp[size_t(i)])) continue;
      covered.insert(comp[size_t(i)]);
      SpecialPoint sp;
      sp.coords = v;
      sp.m_value = sys.nu_tilde();
      fill_parabolic_data(sys, sp);
      require(sp.has_parabolic_data, ErrorCode::Internal, "representative without parabolic data");
      reps_with_comp.push_back({std::move(sp), comp[size_t(i)]});
    }
  }
  require(int(covered.size()) == n1, ErrorCode::RadiusTooSmall,
          "an orbit of special points has no representative among the A0 vertices");
  std::sort(reps_with_comp.begin(), reps_with_comp.end(),
            [](const auto& a, const auto& b) { return RatVecLess()(a.first.coords, b.first.coords); });

  OrbitData out;
  std::vector<int> comp_to_rep(size_t(n1), -1);
  for (int i = 0; i < int(reps_with_comp.size()); ++i) {
    comp_to_rep[size_t(reps_with_comp[size_t(i)].second)] = i;
    out.reps.push_back(reps_with_comp[size_t(i)].first);
  }
  for (int i = 0; i < int(pts.size()); ++i) {
    SpecialPoint sp;
    sp.coords = pts[size_t(i)];
    sp.m_value = sys.nu_tilde();
    fill_parabolic_data(sys, sp);
    out.points.push_back(std::move(sp));
    out.orbit_of_point.push_back(comp_to_rep[size_t(comp[size_t(i)])]);
  }
  return out;
}

std::vector<SpecialPoint> omega_orbit_reps(const CoxeterSystem& sys, int radius) {
  return special_point_orbits(sys, radius).reps;
}

Quarter quarter_of(const CoxeterSystem& sys, const std::vector<Rat>& vertex, const Alcove& inside) {
  Quarter q;
  q.vertex = vertex;
  for (int d = 0; d < sys.roots().num_positive(); ++d) {
    Rat p = sys.roots().pair_point(vertex, d);
    if (!p.is_integer()) continue;
    Rat at = sys.roots().pair_point(inside.rep, d) - p;
    require(at.sign() != 0, ErrorCode::Internal, "alcove representative on a quarter wall");
    q.walls.push_back({d, p.num()});
    q.signs.push_back(at.sign());
  }
  return q;
}

bool quarter_contains(const Quarter& q, const Alcove& a) {
  const CoxeterSystem& sys = sys_of(a.elem);
  for (size_t i = 0; i < q.walls.size(); ++i) {
    Rat at = sys.roots().pair_point(a.rep, q.walls[i].first) - Rat(q.walls[i].second);
    if (at.sign() != q.signs[i]) return false;
  }
  return true;
}

}  // namespace cellule
