#pragma once

#include "cellule/geometry.hpp"
#include "cellule/hecke.hpp"

namespace cellule {

// Data for the left module spanned by { T_x C_v : x in X_lambda } where
// v = w_lambda z and z has no left descent in S_lambda.
struct ParabolicContext {
  SpecialPoint lambda;         // must carry parabolic data (a vertex of A0)
  std::vector<int> s_lambda;   // generators of the stabilizer parabolic
  Element w_lambda;
  Element z;
  Element v;                   // w_lambda * z, lengths adding
};

ParabolicContext make_parabolic_context(const CoxeterSystem& sys, const SpecialPoint& lambda,
                                        const Element& z);

// r- and p*-tables over X_lambda intersected with a length ball, plus the
// checks built from them.  Rows are computed lazily and cached.
class ParabolicTable {
 public:
  ParabolicTable(HeckeContext& hk, ParabolicContext ctx, int max_length);

  const ParabolicContext& context() const { return ctx_; }
  // X_lambda elements with length <= max_length, sorted by (length, key).
  const std::vector<Element>& coset_reps() const { return xs_; }

  // r_{., y}: defined by (T_{y^{-1}})^{-1} C_v = sum_x bar(r_{x,y}) T_x C_v.
  const std::map<Element, LaurentPoly>& r_row(const Element& y);
  // p*_{., y}: the unique strictly-negative solution of the triangular
  // bar-invariance system; p*_{y,y} = 1.
  const std::map<Element, LaurentPoly>& p_star_row(const Element& y);

  // sum_x p*_{x,y} T_x C_v in the T-basis; equals C_{yv} when z is in
  // M_lambda.
  HeckeElement c_for_product(const Element& y);

  // sum over z in X_lambda of bar(r_{x,z}) r_{z,y} = delta_{x,y}.
  bool delta_identity_holds(const Element& x, const Element& y);

  // P_{v1,v} T_y T_{v1} has all coefficients in v^-1 Z[v^-1] (v1 < v).
  bool lowest_terms_check(const Element& y, const Element& v1);

 private:
  HeckeContext& hk_;
  ParabolicContext ctx_;
  std::vector<Element> xs_;
  std::map<Element, std::map<Element, LaurentPoly>> r_rows_;
  std::map<Element, std::map<Element, LaurentPoly>> p_rows_;
};

}  // namespace cellule
