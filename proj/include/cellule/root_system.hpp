#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellule/rational.hpp"

namespace cellule {

// One positive root beta together with its coroot and the integer linear
// functional <., beta-check> expressed on simple-root coordinates.
struct PositiveRoot {
  std::vector<int> root;     // coordinates in the simple-root basis
  std::vector<int> coroot;   // coordinates in the simple-coroot basis
  std::vector<int> pairing;  // pairing[i] = <alpha_i, beta-check>
};

// Crystallographic root system data for the supported irreducible types,
// in simple-root coordinates throughout.  Everything here is exact: root
// and coroot coordinates are integers, alcove vertices are rationals.
class RootSystem {
 public:
  // family tags follow the affine types they realize; the underlying finite
  // root system is chosen so that the alcove arrangement has the expected
  // Coxeter diagram (e.g. the C~r arrangement comes from the B_r roots).
  static RootSystem make_a1();
  static RootSystem make_a2();
  static RootSystem make_c2tilde();  // finite B2, alpha1 short
  static RootSystem make_g2();       // alpha1 short
  static RootSystem make_b3tilde();  // finite C3, alpha3 long

  int rank() const { return rank_; }
  int num_positive() const { return int(positive_.size()); }
  const PositiveRoot& positive(int i) const { return positive_[size_t(i)]; }
  int cartan(int i, int j) const { return cartan_[size_t(i)][size_t(j)]; }

  // Index of the root whose coroot is the highest coroot; the wall of the
  // fundamental alcove at level 1 lies in direction of this root.
  int highest_coroot_root() const { return highest_; }

  // <alpha_a, beta_b-check>, both indices into the positive roots.
  int root_coroot_pair(int a, int b) const { return pair_table_[size_t(a)][size_t(b)]; }

  // Image of the positive root b (and simultaneously of its coroot) under
  // the reflection in direction a: returns (index, sign) with
  // s_a(beta_b) = sign * beta_index.
  std::pair<int, int> reflect(int a, int b) const { return refl_table_[size_t(a)][size_t(b)]; }

  // <x, beta-check> for a rational point x in simple-root coordinates.
  Rat pair_point(const std::vector<Rat>& x, int beta) const;

  // Vertices of the fundamental alcove A0 (rank+1 of them, first is 0)
  // and its barycenter, all in simple-root coordinates.
  const std::vector<std::vector<Rat>>& alcove_vertices() const { return vertices_; }
  const std::vector<Rat>& alcove_barycenter() const { return barycenter_; }

  // Barycenter as integer numerators over a common denominator, for fast
  // exact floor computations on the hot path.
  const std::vector<std::int64_t>& barycenter_num() const { return barycenter_num_; }
  std::int64_t barycenter_den() const { return barycenter_den_; }

  // Symmetrized Gram matrix (alpha_i, alpha_j); used only for plotting.
  const std::vector<std::vector<Rat>>& gram() const { return gram_; }

 private:
  RootSystem(int rank, std::vector<std::vector<int>> cartan);
  void generate();

  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<PositiveRoot> positive_;
  int highest_ = -1;
  std::vector<std::vector<int>> pair_table_;
  std::vector<std::vector<std::pair<int, int>>> refl_table_;
  std::vector<std::vector<Rat>> vertices_;
  std::vector<Rat> barycenter_;
  std::vector<std::int64_t> barycenter_num_;
  std::int64_t barycenter_den_ = 1;
  std::vector<std::vector<Rat>> gram_;
};

}  // namespace cellule
