#pragma once

#include <optional>

#include "cellule/geometry.hpp"
#include "cellule/hecke.hpp"

namespace cellule {

// Membership in the lowest two-sided cell c0, with two independent oracles:
// the factorization criterion (some weak-order prefix carries a full J in
// big-S as right descents) and the maximal-strip criterion.
class C0Oracle {
 public:
  explicit C0Oracle(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {}

  bool contains_factorization(const Element& w);
  bool contains_geometric(const Element& w) const { return outside_max_strips(w); }
  // Geometric result; optionally cross-checked against the factorization
  // oracle (disagreement signals an implementation bug).
  bool contains(const Element& w, bool check_agreement = false);

 private:
  std::shared_ptr<const CoxeterSystem> sys_;
  std::map<std::vector<std::int32_t>, bool> memo_;
};

struct MLambdaResult {
  std::vector<Element> elements;
  bool stable = false;  // no member at the top length layer
};

// M_lambda = { z : w_lambda z = w_lambda . z and s w_lambda z not in c0
// for all s in S_lambda }, enumerated over a length ball.
MLambdaResult enumerate_m_lambda(C0Oracle& oracle, const SpecialPoint& lambda, int bound);

// The decomposition of c0 into the pieces N_{lambda,z} = { x . w_lambda . z }.
class CellDecomposition {
 public:
  CellDecomposition(std::shared_ptr<const CoxeterSystem> sys, int m_bound, int orbit_radius = 3);

  const std::vector<SpecialPoint>& reps() const { return reps_; }
  const std::vector<std::vector<Element>>& m_lambda() const { return m_lambda_; }
  C0Oracle& oracle() { return oracle_; }

  struct Assignment {
    int lambda_index;
    Element z;
    friend bool operator==(const Assignment& a, const Assignment& b) {
      return a.lambda_index == b.lambda_index && a.z == b.z;
    }
    friend bool operator!=(const Assignment& a, const Assignment& b) { return !(a == b); }
  };

  // None iff w is not in c0; otherwise the unique (lambda, z) with
  // w = x . w_lambda . z, x in X_lambda.  Throws AmbiguousAssignment /
  // NoAssignment when the decomposition data is inconsistent with w.
  std::optional<Assignment> assign(const Element& w);

  std::string assignment_string(const Assignment& a) const;

 private:
  std::shared_ptr<const CoxeterSystem> sys_;
  C0Oracle oracle_;
  std::vector<SpecialPoint> reps_;
  std::vector<std::vector<Element>> m_lambda_;
};

// Left preorder edges on a ball: (y, w) recorded when C_y appears with a
// non-zero coefficient in T_s C_w for some s.  Edges are generated for w of
// length <= radius; supports live in the (radius+1)-ball.
struct PreorderGraph {
  Ball nodes;                           // ball(radius + 1)
  int radius = 0;                       // edge generation bound
  std::vector<std::vector<int>> below;  // below[w] = indices y with y <=_L w (one step)
};

PreorderGraph left_preorder_graph(HeckeContext& hk, int radius, int threads = 1);

struct CellPartition {
  std::vector<std::vector<int>> blocks;  // node indices per block
  std::vector<bool> open;                // touches the truncation boundary
  bool truncated = true;
};

CellPartition cell_partition(const PreorderGraph& g);

}  // namespace cellule
