#include "cellule/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace cellule {

namespace {

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Family family_from_string(const std::string& s) {
  if (s == "A~1" || s == "A~2") return Family::AAffine;
  if (s == "C~2") return Family::CAffine;
  if (s == "G~2") return Family::G2Affine;
  if (s == "B~3") return Family::BAffine;
  fail(ErrorCode::UnsupportedType, "unknown type string '" + s + "'");
}

std::string family_type_string(Family f, int rank) {
  switch (f) {
    case Family::AAffine: return "A~" + std::to_string(rank);
    case Family::CAffine: return "C~" + std::to_string(rank);
    case Family::G2Affine: return "G~2";
    case Family::BAffine: return "B~" + std::to_string(rank);
    case Family::DAffine: return "D~" + std::to_string(rank);
  }
  return "?";
}

GroupDescriptor GroupDescriptor::from_type_string(const std::string& type,
                                                  const std::map<std::string, int>& weights) {
  GroupDescriptor d;
  d.family = family_from_string(type);
  if (type == "A~1")
    d.rank = 1;
  else if (type == "B~3")
    d.rank = 3;
  else
    d.rank = 2;
  d.weights = weights;
  return d;
}

AffineMap AffineMap::identity(int rank) {
  AffineMap f;
  f.m.assign(size_t(rank) * size_t(rank), 0);
  f.t.assign(size_t(rank), 0);
  for (int i = 0; i < rank; ++i) f.m[size_t(i * rank + i)] = 1;
  return f;
}

bool AffineMap::is_identity() const {
  const int r = int(t.size());
  for (int i = 0; i < r; ++i) {
    if (t[size_t(i)] != 0) return false;
    for (int j = 0; j < r; ++j)
      if (m[size_t(i * r + j)] != (i == j ? 1 : 0)) return false;
  }
  return true;
}

AffineMap compose(const AffineMap& f, const AffineMap& g, int rank) {
  AffineMap h;
  h.m.assign(size_t(rank) * size_t(rank), 0);
  h.t.assign(size_t(rank), 0);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < rank; ++k) acc += f.m[size_t(i * rank + k)] * g.m[size_t(k * rank + j)];
      h.m[size_t(i * rank + j)] = acc;
    }
    std::int64_t acc = f.t[size_t(i)];
    for (int k = 0; k < rank; ++k) acc += f.m[size_t(i * rank + k)] * g.t[size_t(k)];
    h.t[size_t(i)] = acc;
  }
  return h;
}

AffineMap inverse(const AffineMap& f, int rank) {
  // The linear part lies in a finite reflection group, so det = +-1 and the
  // adjugate gives the exact integer inverse.
  AffineMap h;
  h.m.assign(size_t(rank) * size_t(rank), 0);
  h.t.assign(size_t(rank), 0);
  const auto& m = f.m;
  std::int64_t det = 0;
  if (rank == 1) {
    det = m[0];
    h.m[0] = 1;
  } else if (rank == 2) {
    det = m[0] * m[3] - m[1] * m[2];
    h.m[0] = m[3];
    h.m[1] = -m[1];
    h.m[2] = -m[2];
    h.m[3] = m[0];
  } else if (rank == 3) {
    auto at = [&](int i, int j) { return m[size_t(i * 3 + j)]; };
    det = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
          at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
          at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    auto cof = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h.m[size_t(i * 3 + j)] = cof(j, i);
  } else {
    fail(ErrorCode::UnsupportedType, "rank > 3 not supported");
  }
  require(det == 1 || det == -1, ErrorCode::Internal, "affine map with |det| != 1");
  if (det == -1)
    for (auto& v : h.m) v = -v;
  for (int i = 0; i < rank; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k < rank; ++k) acc += h.m[size_t(i * rank + k)] * f.t[size_t(k)];
    h.t[size_t(i)] = -acc;
  }
  return h;
}

// ---------------------------------------------------------------------------

CoxeterSystem::~CoxeterSystem() = default;

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const GroupDescriptor& desc_in) {
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  CoxeterSystem& s = *sys;
  s.desc_ = desc_in;

  switch (desc_in.family) {
    case Family::AAffine:
      if (desc_in.rank == 1)
        s.roots_ = RootSystem::make_a1();
      else if (desc_in.rank == 2)
        s.roots_ = RootSystem::make_a2();
      else
        fail(ErrorCode::UnsupportedType, "A-affine supported for rank 1 and 2 only");
      break;
    case Family::CAffine:
      require(desc_in.rank == 2, ErrorCode::UnsupportedType, "C-affine supported for rank 2 only");
      s.roots_ = RootSystem::make_c2tilde();
      break;
    case Family::G2Affine:
      require(desc_in.rank == 2, ErrorCode::UnsupportedType, "G2-affine has rank 2");
      s.roots_ = RootSystem::make_g2();
      break;
    case Family::BAffine:
      require(desc_in.rank == 3, ErrorCode::UnsupportedType, "B-affine supported for rank 3 only");
      s.roots_ = RootSystem::make_b3tilde();
      break;
    case Family::DAffine:
      fail(ErrorCode::UnsupportedType, "D-affine types are not supported");
  }

  const int r = s.rank();
  const int n = s.roots_.num_positive();

  // Generators: s_i is the A0 wall in the i-th simple-root direction at
  // level 0, s_{r+1} the wall at level 1 in the highest-coroot direction.
  s.gens_.clear();
  for (int i = 0; i <= r; ++i) {
    GeneratorInfo g;
    g.name = "s" + std::to_string(i + 1);
    if (i < r) {
      int idx = -1;
      for (int b = 0; b < n; ++b) {
        const auto& root = s.roots_.positive(b).root;
        bool is_ei = true;
        for (int k = 0; k < r; ++k)
          if (root[size_t(k)] != (k == i ? 1 : 0)) is_ei = false;
        if (is_ei) {
          idx = b;
          break;
        }
      }
      require(idx >= 0, ErrorCode::Internal, "simple root not found");
      g.wall_root = idx;
      g.wall_level = 0;
    } else {
      g.wall_root = s.roots_.highest_coroot_root();
      g.wall_level = 1;
    }
    // sigma_{beta,n}: x -> x - (<x,beta-check> - n) beta.
    const auto& pr = s.roots_.positive(g.wall_root);
    AffineMap f = AffineMap::identity(r);
    for (int i2 = 0; i2 < r; ++i2)
      for (int j2 = 0; j2 < r; ++j2)
        f.m[size_t(i2 * r + j2)] -= std::int64_t(pr.root[size_t(i2)]) * pr.pairing[size_t(j2)];
    for (int i2 = 0; i2 < r; ++i2) f.t[size_t(i2)] = std::int64_t(g.wall_level) * pr.root[size_t(i2)];
    g.reflection = f;
    s.gens_.push_back(std::move(g));
  }

  // Coxeter matrix from the geometry: order of the product of two wall
  // reflections (0 encodes infinite order; only A~1 has one).
  const int ng = r + 1;
  s.cox_m_.assign(size_t(ng), std::vector<int>(size_t(ng), 0));
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b) s.cox_m_[size_t(a)][size_t(b)] = a == b ? 1 : s.order_of_product(a, b);

  // Conjugacy classes of generators: connected components over odd bonds.
  s.conj_class_.assign(size_t(ng), -1);
  int nclass = 0;
  for (int a = 0; a < ng; ++a) {
    if (s.conj_class_[size_t(a)] >= 0) continue;
    std::deque<int> q{a};
    s.conj_class_[size_t(a)] = nclass;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int b2 = 0; b2 < ng; ++b2) {
        int m = s.cox_m_[size_t(u)][size_t(b2)];
        if (u != b2 && m != 0 && m % 2 == 1 && s.conj_class_[size_t(b2)] < 0) {
          s.conj_class_[size_t(b2)] = nclass;
          q.push_back(b2);
        }
      }
    }
    ++nclass;
  }

  // Weights: default 1, named overrides, end-node normalization for the two
  // types whose diagram has a weight-breaking symmetry, conjugacy validation.
  std::vector<int> w(size_t(ng), 1);
  for (const auto& [name, val] : desc_in.weights) {
    bool found = false;
    for (int a = 0; a < ng; ++a)
      if (s.gens_[size_t(a)].name == name) {
        w[size_t(a)] = val;
        found = true;
      }
    require(found, ErrorCode::InvalidWeights, "unknown generator name '" + name + "'");
    require(val >= 1, ErrorCode::InvalidWeights, "weight of " + name + " must be positive");
  }
  const bool end_normalized_type =
      (desc_in.family == Family::CAffine) || (desc_in.family == Family::AAffine && r == 1);
  if (end_normalized_type && w.front() < w.back()) std::reverse(w.begin(), w.end());
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < ng; ++b)
      require(s.conj_class_[size_t(a)] != s.conj_class_[size_t(b)] || w[size_t(a)] == w[size_t(b)],
              ErrorCode::InvalidWeights,
              "conjugate generators " + s.gens_[size_t(a)].name + ", " + s.gens_[size_t(b)].name +
                  " must have equal weights");
  s.weights_ = w;
  s.xi_.clear();
  for (int a = 0; a < ng; ++a) s.xi_.push_back(LaurentPoly::xi(w[size_t(a)]));

  // Hyperplane weights by probing: the face shared by wA0 and s(wA0) has
  // type s, and its supporting hyperplane is read off the coordinate that
  // changed.  Weights are 2-periodic per direction (translation by the
  // root lies in the reflection group), so 2n slots suffice.
  s.weight_table_.assign(size_t(n), std::vector<int>(2, -1));
  {
    int remaining = 2 * n;
    std::set<std::vector<std::int32_t>> seen;
    std::deque<Element> frontier{s.identity()};
    seen.insert(s.identity().coords());
    int guard = 0;
    while (remaining > 0 && !frontier.empty()) {
      require(++guard < 2'000'000, ErrorCode::Internal, "weight probe did not converge");
      Element cur = frontier.front();
      frontier.pop_front();
      for (int a = 0; a < ng; ++a) {
        Element nb = s.left_mult(a, cur);
        int dir = -1;
        for (int b = 0; b < n; ++b)
          if (nb.coords()[size_t(b)] != cur.coords()[size_t(b)]) {
            dir = b;
            break;
          }
        std::int64_t level = std::max(cur.coords()[size_t(dir)], nb.coords()[size_t(dir)]);
        int parity = int(((level % 2) + 2) % 2);
        int& slot = s.weight_table_[size_t(dir)][size_t(parity)];
        if (slot < 0) {
          slot = w[size_t(a)];
          --remaining;
        } else {
          require(slot == w[size_t(a)], ErrorCode::Internal, "inconsistent hyperplane weight");
        }
        if (!seen.count(nb.coords()) && nb.length() <= 14) {
          seen.insert(nb.coords());
          frontier.push_back(nb);
        }
      }
    }
    require(remaining == 0, ErrorCode::Internal, "hyperplane weight table incomplete");
  }

  // Finite part, nu, nu-tilde, big-S.
  for (int a = 0; a < ng; ++a)
    if (s.gens_[size_t(a)].wall_level == 0) s.finite_part_.push_back(a);
  s.w0_ = s.longest_parabolic(s.finite_part_);
  s.nu_ = s.w0_.length();

  // big-S: subsets J of size |S_0| whose Coxeter graph is isomorphic to
  // the graph of S_0, filtered by maximal weight of the longest element.
  std::vector<std::vector<int>> iso_subsets;
  std::vector<int> base = s.finite_part_;
  std::vector<int> perm(static_cast<size_t>(r));
  for (int mask = 1; mask < (1 << ng); ++mask) {
    std::vector<int> j;
    for (int a = 0; a < ng; ++a)
      if (mask & (1 << a)) j.push_back(a);
    if (int(j.size()) != r) continue;
    std::iota(perm.begin(), perm.end(), 0);
    bool iso = false;
    do {
      bool ok = true;
      for (int p = 0; p < r && ok; ++p)
        for (int q = 0; q < r && ok; ++q)
          if (s.cox_m_[size_t(j[size_t(p)])][size_t(j[size_t(q)])] !=
              s.cox_m_[size_t(base[size_t(perm[size_t(p)])])][size_t(base[size_t(perm[size_t(q)])])])
            ok = false;
      if (ok) iso = true;
    } while (!iso && std::next_permutation(perm.begin(), perm.end()));
    if (iso) iso_subsets.push_back(j);
  }
  s.nu_tilde_ = 0;
  std::vector<std::pair<int, std::vector<int>>> weighted;
  for (const auto& j : iso_subsets) {
    Element wj = s.longest_parabolic(j);
    int lw = s.weight_length(wj);
    weighted.push_back({lw, j});
    s.nu_tilde_ = std::max(s.nu_tilde_, lw);
  }
  for (auto& [lw, j] : weighted)
    if (lw == s.nu_tilde_) s.big_s_.push_back(j);

  return sys;
}

int CoxeterSystem::order_of_product(int a, int b) const {
  AffineMap f = compose(gens_[size_t(b)].reflection, gens_[size_t(a)].reflection, rank());
  AffineMap g = f;
  for (int k = 1; k <= 6; ++k) {
    if (g.is_identity()) return k;
    g = compose(g, f, rank());
  }
  return 0;  // infinite
}

int CoxeterSystem::generator_index(const std::string& name) const {
  for (int a = 0; a < num_generators(); ++a)
    if (gens_[size_t(a)].name == name) return a;
  fail(ErrorCode::UnknownGenerator, "no generator named '" + name + "'");
}

void CoxeterSystem::compute_coords(Element& e) const {
  const int r = rank();
  const int n = roots_.num_positive();
  const auto& pnum = roots_.barycenter_num();
  const std::int64_t den = roots_.barycenter_den();
  // q = M p0num + den * t: numerator of the representative point of the alcove.
  std::vector<std::int64_t> q(size_t(r), 0);
  for (int i = 0; i < r; ++i) {
    std::int64_t acc = den * e.map_.t[size_t(i)];
    for (int k = 0; k < r; ++k) acc += e.map_.m[size_t(i * r + k)] * pnum[size_t(k)];
    q[size_t(i)] = acc;
  }
  e.coords_.assign(size_t(n), 0);
  int len = 0;
  for (int b = 0; b < n; ++b) {
    const auto& pairing = roots_.positive(b).pairing;
    std::int64_t val = 0;
    for (int i = 0; i < r; ++i) val += pairing[size_t(i)] * q[size_t(i)];
    std::int64_t k = floordiv(val, den);
    e.coords_[size_t(b)] = std::int32_t(k);
    len += int(k < 0 ? -k : k);
  }
  e.len_ = len;
}

Element CoxeterSystem::identity() const {
  Element e;
  e.sys_ = this;
  e.map_ = AffineMap::identity(rank());
  compute_coords(e);
  return e;
}

Element CoxeterSystem::generator_element(int s) const {
  Element e;
  e.sys_ = this;
  e.map_ = gens_[size_t(s)].reflection;
  compute_coords(e);
  return e;
}

Element CoxeterSystem::element_from_map(const AffineMap& f) const {
  Element e;
  e.sys_ = this;
  e.map_ = f;
  compute_coords(e);
  return e;
}

Element CoxeterSystem::word_to_element(const Word& word) const {
  Element cur = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = left_mult(*it, cur);
  return cur;
}

Element CoxeterSystem::word_to_element(const std::string& spaced) const {
  Word w;
  std::istringstream in(spaced);
  std::string tok;
  while (in >> tok) w.push_back(generator_index(tok));
  return word_to_element(w);
}

Element CoxeterSystem::multiply(const Element& a, const Element& b) const {
  require(a.sys_ == this && b.sys_ == this, ErrorCode::Internal, "element from another system");
  // With w A0 = A0 g_w (reflection group acting on the right), the map of a
  // product is g_a g_b, i.e. "apply g_a, then g_b" as plain functions.
  Element e;
  e.sys_ = this;
  e.map_ = compose(b.map_, a.map_, rank());
  compute_coords(e);
  return e;
}

Element CoxeterSystem::left_mult(int s, const Element& w) const {
  Element e;
  e.sys_ = this;
  e.map_ = compose(w.map_, gens_[size_t(s)].reflection, rank());
  compute_coords(e);
  return e;
}

Element CoxeterSystem::right_mult(const Element& w, int s) const {
  Element e;
  e.sys_ = this;
  e.map_ = compose(gens_[size_t(s)].reflection, w.map_, rank());
  compute_coords(e);
  return e;
}

Element CoxeterSystem::inverse_of(const Element& w) const {
  Element e;
  e.sys_ = this;
  e.map_ = inverse(w.map_, rank());
  compute_coords(e);
  return e;
}

bool CoxeterSystem::is_right_descent(const Element& w, int s) const {
  // ws < w iff the type-s wall of A0 separates A0 from wA0.  (The analogous
  // O(1) test for left descents fails in this model: left multiplication
  // crosses the image of the wall under g_w, not the wall itself.)
  const GeneratorInfo& g = gens_[size_t(s)];
  std::int32_t k = w.coords()[size_t(g.wall_root)];
  return g.wall_level == 0 ? k <= -1 : k >= 1;
}

bool CoxeterSystem::is_left_descent(int s, const Element& w) const {
  return left_mult(s, w).length() < w.length();
}

std::vector<int> CoxeterSystem::descents(const Element& w, Side side) const {
  std::vector<int> out;
  for (int s = 0; s < num_generators(); ++s) {
    bool d = side == Side::Left ? is_left_descent(s, w) : is_right_descent(w, s);
    if (d) out.push_back(s);
  }
  return out;
}

Word CoxeterSystem::reduced_word(const Element& w) const {
  Word out;
  Element cur = w;
  while (cur.length() > 0) {
    int chosen = -1;
    Element next;
    for (int s = 0; s < num_generators(); ++s) {
      Element cand = left_mult(s, cur);
      if (cand.length() < cur.length()) {
        chosen = s;
        next = cand;
        break;
      }
    }
    require(chosen >= 0, ErrorCode::Internal, "no descent on a non-identity element");
    out.push_back(chosen);
    cur = next;
  }
  return out;
}

std::string CoxeterSystem::word_string(const Word& w) const {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += gens_[size_t(w[i])].name;
  }
  return out;
}

std::string CoxeterSystem::element_to_string(const Element& w) const {
  return word_string(reduced_word(w));
}

int CoxeterSystem::weight_length(const Element& w) const {
  // L(w) = total weight of the hyperplanes separating A0 from wA0.
  int total = 0;
  for (int b = 0; b < roots_.num_positive(); ++b) {
    std::int32_t k = w.coords()[size_t(b)];
    std::int64_t lo, hi;  // separating levels n with lo <= n <= hi
    if (k > 0) {
      lo = 1;
      hi = k;
    } else if (k < 0) {
      lo = k + 1;
      hi = 0;
    } else {
      continue;
    }
    std::int64_t count = hi - lo + 1;
    std::int64_t even = count / 2 + ((count % 2 != 0 && lo % 2 == 0) ? 1 : 0);
    std::int64_t odd = count - even;
    total += int(even) * weight_table_[size_t(b)][0] + int(odd) * weight_table_[size_t(b)][1];
  }
  return total;
}

bool CoxeterSystem::bruhat_leq(const Element& x, const Element& w) const {
  if (x.coords() == w.coords()) return true;
  if (x.length() >= w.length()) return false;
  if (x.length() == 0) return true;
  {
    std::lock_guard<std::mutex> lk(bruhat_mu_);
    auto it = bruhat_memo_.find({x.coords(), w.coords()});
    if (it != bruhat_memo_.end()) return it->second;
  }
  int s = -1;
  Element sw;
  for (int a = 0; a < num_generators(); ++a) {
    Element cand = left_mult(a, w);
    if (cand.length() < w.length()) {
      s = a;
      sw = cand;
      break;
    }
  }
  Element sx = left_mult(s, x);
  bool res = sx.length() < x.length() ? bruhat_leq(sx, sw) : bruhat_leq(x, sw);
  {
    std::lock_guard<std::mutex> lk(bruhat_mu_);
    bruhat_memo_[{x.coords(), w.coords()}] = res;
  }
  return res;
}

Ball CoxeterSystem::ball(int radius, size_t cap) const {
  require(radius >= 0, ErrorCode::Internal, "negative ball radius");
  Ball out;
  out.radius = radius;
  std::set<std::vector<std::int32_t>> seen;
  std::deque<Element> frontier{identity()};
  seen.insert(identity().coords());
  out.elems.push_back(identity());
  while (!frontier.empty()) {
    Element cur = frontier.front();
    frontier.pop_front();
    if (cur.length() == radius) continue;
    for (int s = 0; s < num_generators(); ++s) {
      Element nb = left_mult(s, cur);
      if (nb.length() != cur.length() + 1 || seen.count(nb.coords())) continue;
      require(out.elems.size() < cap, ErrorCode::BallTooLarge,
              "ball(" + std::to_string(radius) + ") exceeds element cap");
      seen.insert(nb.coords());
      out.elems.push_back(nb);
      frontier.push_back(nb);
    }
  }
  std::sort(out.elems.begin(), out.elems.end(), Element::length_key_less);
  for (int i = 0; i < int(out.elems.size()); ++i) out.index[out.elems[size_t(i)].coords()] = i;
  return out;
}

std::vector<Element> CoxeterSystem::parabolic_elements(const std::vector<int>& j_in) const {
  std::vector<int> j = sorted_unique(j_in);
  size_t cap = 10;
  for (int i = 2; i <= num_generators(); ++i) cap *= size_t(i);  // 10 * |S|!
  std::set<std::vector<std::int32_t>> seen;
  std::vector<Element> out{identity()};
  seen.insert(identity().coords());
  for (size_t head = 0; head < out.size(); ++head) {
    Element cur = out[head];
    for (int s : j) {
      Element nb = left_mult(s, cur);
      if (seen.count(nb.coords())) continue;
      require(out.size() < cap, ErrorCode::InfiniteParabolic,
              "parabolic closure exceeded cap; subgroup is infinite");
      seen.insert(nb.coords());
      out.push_back(nb);
    }
  }
  std::sort(out.begin(), out.end(), Element::length_key_less);
  return out;
}

bool CoxeterSystem::parabolic_is_finite(const std::vector<int>& j, size_t) const {
  try {
    parabolic_elements(j);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfiniteParabolic) return false;
    throw;
  }
}

Element CoxeterSystem::longest_parabolic(const std::vector<int>& j) const {
  std::vector<Element> all = parabolic_elements(j);
  const Element& wj = all.back();  // sorted by length
  for (int s : sorted_unique(j)) {
    require(is_left_descent(s, wj) && is_right_descent(wj, s), ErrorCode::Internal,
            "longest parabolic element lacks a two-sided descent");
  }
  return wj;
}

CosetFactorization CoxeterSystem::coset_factorize(const Element& w, const std::vector<int>& j_in,
                                                  Side parabolic_side) const {
  std::vector<int> j = sorted_unique(j_in);
  require(parabolic_is_finite(j), ErrorCode::InfiniteParabolic, "coset factorization needs finite W_J");
  Element cur = w;
  Word word;
  if (parabolic_side == Side::Left) {
    // w = u . x, u in W_J, x without left J-descents.
    for (;;) {
      int s = -1;
      for (int a : j)
        if (is_left_descent(a, cur)) {
          s = a;
          break;
        }
      if (s < 0) break;
      word.push_back(s);
      cur = left_mult(s, cur);
    }
    return {word_to_element(word), cur};
  }
  // w = x . u, u in W_J, x without right J-descents.
  for (;;) {
    int s = -1;
    for (int a : j)
      if (is_right_descent(cur, a)) {
        s = a;
        break;
      }
    if (s < 0) break;
    word.push_back(s);
    cur = right_mult(cur, s);
  }
  std::reverse(word.begin(), word.end());
  return {word_to_element(word), cur};
}

bool CoxeterSystem::is_min_coset_rep(const Element& w, const std::vector<int>& j, Side side) const {
  for (int s : j) {
    bool d = side == Side::Left ? is_left_descent(s, w) : is_right_descent(w, s);
    if (d) return false;
  }
  return true;
}

}  // namespace cellule
