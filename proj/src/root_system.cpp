#include "cellule/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cellule {

namespace {

// Solve the linear system A x = b over the rationals (A square, invertible).
std::vector<Rat> solve_rat(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].sign() == 0) ++piv;
    require(piv < n, ErrorCode::Internal, "singular matrix in solve_rat");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat d = a[col][col];
    for (size_t j = 0; j < n; ++j) a[col][j] = a[col][j] / d;
    b[col] = b[col] / d;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].sign() == 0) continue;
      Rat f = a[row][col];
      for (size_t j = 0; j < n; ++j) a[row][j] = a[row][j] - f * a[col][j];
      b[row] = b[row] - f * b[col];
    }
  }
  return b;
}

}  // namespace

RootSystem::RootSystem(int rank, std::vector<std::vector<int>> cartan)
    : rank_(rank), cartan_(std::move(cartan)) {}

RootSystem RootSystem::make_a1() {
  RootSystem rs(1, {{2}});
  rs.generate();
  return rs;
}

RootSystem RootSystem::make_a2() {
  RootSystem rs(2, {{2, -1}, {-1, 2}});
  rs.generate();
  return rs;
}

RootSystem RootSystem::make_c2tilde() {
  // Finite B2 with alpha1 the short root; the affine arrangement of its
  // coroot functionals has Coxeter diagram s1 =4= s2 =4= s3.
  RootSystem rs(2, {{2, -1}, {-2, 2}});
  rs.generate();
  return rs;
}

RootSystem RootSystem::make_g2() {
  // alpha1 short, alpha2 long.
  RootSystem rs(2, {{2, -1}, {-3, 2}});
  rs.generate();
  return rs;
}

RootSystem RootSystem::make_b3tilde() {
  // Finite C3 (alpha3 the long root 2e3); the alcove arrangement is the
  // affine B3 diagram: fork at s2, double bond s2 =4= s3.
  RootSystem rs(3, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  rs.generate();
  return rs;
}

void RootSystem::generate() {
  const int r = rank_;

  // Closure of the simple (root, coroot) pairs under simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<PositiveRoot> all;
  for (int i = 0; i < r; ++i) {
    PositiveRoot p;
    p.root.assign(size_t(r), 0);
    p.coroot.assign(size_t(r), 0);
    p.root[size_t(i)] = 1;
    p.coroot[size_t(i)] = 1;
    all.push_back(p);
    seen.insert(p.root);
  }
  for (size_t head = 0; head < all.size(); ++head) {
    PositiveRoot cur = all[head];
    for (int j = 0; j < r; ++j) {
      // <beta, alpha_j-check> and <alpha_j, beta-check> from Cartan integers.
      int pr = 0, pc = 0;
      for (int i = 0; i < r; ++i) {
        pr += cur.root[size_t(i)] * cartan_[size_t(i)][size_t(j)];
        pc += cur.coroot[size_t(i)] * cartan_[size_t(j)][size_t(i)];
      }
      PositiveRoot img = cur;
      img.root[size_t(j)] -= pr;
      img.coroot[size_t(j)] -= pc;
      bool positive = true, negative = true;
      for (int i = 0; i < r; ++i) {
        if (img.root[size_t(i)] > 0) negative = false;
        if (img.root[size_t(i)] < 0) positive = false;
      }
      require(positive || negative, ErrorCode::Internal, "non-signed root image");
      if (positive && !seen.count(img.root)) {
        seen.insert(img.root);
        all.push_back(img);
      }
    }
  }
  positive_ = std::move(all);
  std::sort(positive_.begin(), positive_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    int ha = std::accumulate(a.root.begin(), a.root.end(), 0);
    int hb = std::accumulate(b.root.begin(), b.root.end(), 0);
    if (ha != hb) return ha < hb;
    return a.root < b.root;
  });

  const int n = num_positive();
  for (auto& p : positive_) {
    p.pairing.assign(size_t(r), 0);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) p.pairing[size_t(i)] += p.coroot[size_t(k)] * cartan_[size_t(i)][size_t(k)];
  }

  // Highest coroot: the unique coroot dominating all others coordinatewise.
  highest_ = -1;
  for (int b = 0; b < n; ++b) {
    bool dom = true;
    for (int c = 0; c < n && dom; ++c)
      for (int i = 0; i < r; ++i)
        if (positive_[size_t(b)].coroot[size_t(i)] < positive_[size_t(c)].coroot[size_t(i)]) {
          dom = false;
          break;
        }
    if (dom) {
      highest_ = b;
      break;
    }
  }
  require(highest_ >= 0, ErrorCode::Internal, "no highest coroot found");

  pair_table_.assign(size_t(n), std::vector<int>(size_t(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = 0;
      for (int i = 0; i < r; ++i) v += positive_[size_t(a)].root[size_t(i)] * positive_[size_t(b)].pairing[size_t(i)];
      pair_table_[size_t(a)][size_t(b)] = v;
    }

  refl_table_.assign(size_t(n), std::vector<std::pair<int, int>>(size_t(n), {-1, 0}));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // s_a(beta_b) = beta_b - <beta_b, alpha_a-check> alpha_a.
      std::vector<int> img = positive_[size_t(b)].root;
      int k = pair_table_[size_t(b)][size_t(a)];
      for (int i = 0; i < r; ++i) img[size_t(i)] -= k * positive_[size_t(a)].root[size_t(i)];
      int sign = 0;
      for (int i : img) {
        if (i > 0) sign = 1;
        if (i < 0) sign = -1;
        if (sign != 0) break;
      }
      require(sign != 0, ErrorCode::Internal, "reflection image is zero");
      if (sign < 0)
        for (auto& c : img) c = -c;
      int idx = -1;
      for (int c = 0; c < n; ++c)
        if (positive_[size_t(c)].root == img) {
          idx = c;
          break;
        }
      require(idx >= 0, ErrorCode::Internal, "reflection image not a root");
      refl_table_[size_t(a)][size_t(b)] = {idx, sign};
    }

  // Fundamental coweights u_i (<u_i, alpha_j-check> = delta_ij) and the
  // alcove vertices v_0 = 0, v_i = u_i / c_i with c the highest coroot.
  std::vector<std::vector<Rat>> nt(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r)));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) nt[size_t(j)][size_t(k)] = Rat(cartan_[size_t(k)][size_t(j)]);
  vertices_.clear();
  vertices_.push_back(std::vector<Rat>(size_t(r), Rat(0)));
  const auto& hc = positive_[size_t(highest_)].coroot;
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> e(size_t(r), Rat(0));
    e[size_t(i)] = Rat(1);
    std::vector<Rat> u = solve_rat(nt, e);
    for (auto& c : u) c = c / Rat(hc[size_t(i)]);
    vertices_.push_back(u);
  }
  barycenter_.assign(size_t(r), Rat(0));
  for (const auto& v : vertices_)
    for (int i = 0; i < r; ++i) barycenter_[size_t(i)] = barycenter_[size_t(i)] + v[size_t(i)];
  for (auto& c : barycenter_) c = c / Rat(r + 1);

  barycenter_den_ = 1;
  for (const auto& c : barycenter_) barycenter_den_ = std::lcm(barycenter_den_, c.den());
  barycenter_num_.clear();
  for (const auto& c : barycenter_) barycenter_num_.push_back(c.num() * (barycenter_den_ / c.den()));

  // Symmetrize the Cartan matrix: pick d_1 = 2 on the first node and
  // propagate d_j n_{ji} = d_i n_{ij} along diagram edges.
  std::vector<Rat> d(size_t(r), Rat(0));
  d[0] = Rat(2);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j || cartan_[size_t(i)][size_t(j)] == 0) continue;
        if (d[size_t(i)].sign() != 0 && d[size_t(j)].sign() == 0) {
          d[size_t(j)] = d[size_t(i)] * Rat(cartan_[size_t(i)][size_t(j)], cartan_[size_t(j)][size_t(i)]);
          changed = true;
        }
      }
  }
  gram_.assign(size_t(r), std::vector<Rat>(size_t(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram_[size_t(i)][size_t(j)] = Rat(cartan_[size_t(i)][size_t(j)]) * d[size_t(j)] / Rat(2);
}

Rat RootSystem::pair_point(const std::vector<Rat>& x, int beta) const {
  Rat v(0);
  for (int i = 0; i < rank_; ++i) v = v + x[size_t(i)] * Rat(positive_[size_t(beta)].pairing[size_t(i)]);
  return v;
}

}  // namespace cellule
