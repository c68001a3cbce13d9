#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cellule/laurent.hpp"
#include "cellule/root_system.hpp"

namespace cellule {

class CoxeterSystem;

enum class Family { AAffine, CAffine, G2Affine, BAffine, DAffine };

Family family_from_string(const std::string& s);   // "A~1", "C~2", ...
std::string family_type_string(Family f, int rank);

struct GroupDescriptor {
  Family family = Family::AAffine;
  int rank = 1;  // rank of the finite root system; |S| = rank + 1
  std::map<std::string, int> weights;  // generator name -> positive weight

  static GroupDescriptor from_type_string(const std::string& type,
                                          const std::map<std::string, int>& weights);
};

// x -> M x + t on simple-root coordinates.  Every reflection in the affine
// arrangement is integer-affine in this basis, so group elements stay exact.
struct AffineMap {
  std::vector<std::int64_t> m;  // rank x rank, row major
  std::vector<std::int64_t> t;  // rank

  static AffineMap identity(int rank);
  bool is_identity() const;
  bool operator==(const AffineMap& o) const { return m == o.m && t == o.t; }
};

// Composition f(g(x)).
AffineMap compose(const AffineMap& f, const AffineMap& g, int rank);
AffineMap inverse(const AffineMap& f, int rank);

// A group element, identified with the alcove w A0.  The canonical key is
// the alcove coordinate vector (k_beta): k_beta < <x, beta-check> < k_beta+1
// on the alcove.  The affine map g with w A0 = A0 g is carried along so that
// geometric queries (vertices, representative points) stay exact.  Elements
// hold a pointer to their system; the system must outlive them.
class Element {
 public:
  Element() = default;

  const std::vector<std::int32_t>& coords() const { return coords_; }
  const AffineMap& map() const { return map_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }
  const CoxeterSystem* system() const { return sys_; }

  friend bool operator==(const Element& a, const Element& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Element& a, const Element& b) { return a.coords_ != b.coords_; }
  // Lexicographic on coordinates; use length_key_less for display order.
  friend bool operator<(const Element& a, const Element& b) { return a.coords_ < b.coords_; }

  static bool length_key_less(const Element& a, const Element& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return a.coords_ < b.coords_;
  }

 private:
  friend class CoxeterSystem;
  const CoxeterSystem* sys_ = nullptr;
  AffineMap map_;
  std::vector<std::int32_t> coords_;
  int len_ = 0;
};

using Word = std::vector<int>;  // generator indices

struct GeneratorInfo {
  std::string name;
  int wall_root;   // direction (index into positive roots) of the A0 wall
  int wall_level;  // 0 for the finite nodes, 1 for the affine node
  AffineMap reflection;
};

// Length-closed set {w : l(w) <= radius} with a deterministic ordering by
// (length, coordinate key) and an index for O(log) membership tests.
struct Ball {
  int radius = 0;
  std::vector<Element> elems;
  std::map<std::vector<std::int32_t>, int> index;

  bool contains(const Element& w) const { return index.count(w.coords()) != 0; }
  int index_of(const Element& w) const {
    auto it = index.find(w.coords());
    return it == index.end() ? -1 : it->second;
  }
  size_t size() const { return elems.size(); }
};

enum class Side { Left, Right };

struct CosetFactorization {
  Element parabolic_part;  // in W_J
  Element rep_part;        // minimal coset representative
};

class CoxeterSystem {
 public:
  // Validates the descriptor (positivity, conjugacy constraint, the
  // end-node normalization for A~1 / C~r) and precomputes root data,
  // Coxeter matrix, hyperplane weights, finite part, nu, nu-tilde, big-S.
  static std::shared_ptr<const CoxeterSystem> build(const GroupDescriptor& desc);

  ~CoxeterSystem();

  // --- static data -------------------------------------------------------
  const GroupDescriptor& descriptor() const { return desc_; }
  std::string type_string() const { return family_type_string(desc_.family, desc_.rank); }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  int num_generators() const { return rank() + 1; }
  const GeneratorInfo& generator(int s) const { return gens_[size_t(s)]; }
  int generator_index(const std::string& name) const;  // throws UnknownGenerator
  int coxeter_m(int s, int t) const { return cox_m_[size_t(s)][size_t(t)]; }  // 0 means infinity
  int weight(int s) const { return weights_[size_t(s)]; }
  const LaurentPoly& xi(int s) const { return xi_[size_t(s)]; }
  const std::vector<int>& conjugacy_class_of() const { return conj_class_; }

  const std::vector<int>& finite_part() const { return finite_part_; }  // S_0
  const Element& longest_finite() const { return w0_; }                 // w_0
  int nu() const { return nu_; }
  int nu_tilde() const { return nu_tilde_; }
  const std::vector<std::vector<int>>& big_s() const { return big_s_; }

  // Weight c_H of the hyperplane H_{beta,n}; 2-periodic in n because the
  // translation by beta lies in the reflection group.
  int hyperplane_weight(int root, std::int64_t level) const {
    return weight_table_[size_t(root)][size_t(((level % 2) + 2) % 2)];
  }
  // max over levels of hyperplane_weight in a fixed direction
  int direction_max_weight(int root) const {
    return std::max(weight_table_[size_t(root)][0], weight_table_[size_t(root)][1]);
  }

  // --- element construction & arithmetic ---------------------------------
  Element identity() const;
  Element generator_element(int s) const;
  Element word_to_element(const Word& word) const;
  Element word_to_element(const std::string& spaced_names) const;  // "s1 s2 s1"

  Element multiply(const Element& a, const Element& b) const;
  Element left_mult(int s, const Element& w) const;
  Element right_mult(const Element& w, int s) const;
  Element inverse_of(const Element& w) const;

  bool is_left_descent(int s, const Element& w) const;
  bool is_right_descent(const Element& w, int s) const;
  std::vector<int> descents(const Element& w, Side side) const;

  Word reduced_word(const Element& w) const;  // lexicographically least
  std::string word_string(const Word& w) const;
  std::string element_to_string(const Element& w) const;  // canonical word, "" for e

  // L(w) = sum of weights over any reduced word.
  int weight_length(const Element& w) const;

  bool bruhat_leq(const Element& x, const Element& w) const;

  Ball ball(int radius, size_t cap = 4'000'000) const;

  bool parabolic_is_finite(const std::vector<int>& j, size_t cap = 0) const;
  Element longest_parabolic(const std::vector<int>& j) const;
  std::vector<Element> parabolic_elements(const std::vector<int>& j) const;

  // mode Side::Left: w = u . x with u in W_J maximal (no transferable
  // J-descent on the left of x); Side::Right: w = x . u.
  CosetFactorization coset_factorize(const Element& w, const std::vector<int>& j, Side parabolic_side) const;
  bool is_min_coset_rep(const Element& w, const std::vector<int>& j, Side side) const;

  // Element from an explicit affine map (used by geometry for reflections).
  Element element_from_map(const AffineMap& f) const;

 private:
  CoxeterSystem() = default;
  void compute_coords(Element& e) const;
  int order_of_product(int s, int t) const;

  GroupDescriptor desc_;
  RootSystem roots_ = RootSystem::make_a1();
  std::vector<GeneratorInfo> gens_;
  std::vector<int> weights_;
  std::vector<LaurentPoly> xi_;
  std::vector<std::vector<int>> cox_m_;
  std::vector<int> conj_class_;
  std::vector<std::vector<int>> weight_table_;  // [root][level mod 2]
  std::vector<int> finite_part_;
  Element w0_;
  int nu_ = 0;
  int nu_tilde_ = 0;
  std::vector<std::vector<int>> big_s_;

  mutable std::mutex bruhat_mu_;
  mutable std::map<std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>>, bool> bruhat_memo_;
};

}  // namespace cellule
