#include "cellule/parabolic.hpp"

#include <algorithm>

namespace cellule {

ParabolicContext make_parabolic_context(const CoxeterSystem& sys, const SpecialPoint& lambda,
                                        const Element& z) {
  require(lambda.has_parabolic_data, ErrorCode::ContextInvalid,
          "special point without standard-parabolic stabilizer data");
  ParabolicContext ctx;
  ctx.lambda = lambda;
  ctx.s_lambda = lambda.stabilizer_gens;
  ctx.w_lambda = lambda.w_lambda;
  ctx.z = z;
  require(sys.is_min_coset_rep(z, ctx.s_lambda, Side::Left), ErrorCode::ContextInvalid,
          "z must satisfy w_lambda z = w_lambda . z");
  ctx.v = sys.multiply(ctx.w_lambda, z);
  require(ctx.v.length() == ctx.w_lambda.length() + z.length(), ErrorCode::ContextInvalid,
          "lengths do not add in w_lambda z");
  return ctx;
}

ParabolicTable::ParabolicTable(HeckeContext& hk, ParabolicContext ctx, int max_length)
    : hk_(hk), ctx_(std::move(ctx)) {
  const CoxeterSystem& sys = hk_.system();
  Ball b = sys.ball(max_length);
  for (const auto& w : b.elems)
    if (sys.is_min_coset_rep(w, ctx_.s_lambda, Side::Right)) xs_.push_back(w);
}

const std::map<Element, LaurentPoly>& ParabolicTable::r_row(const Element& y) {
  auto it = r_rows_.find(y);
  if (it != r_rows_.end()) return it->second;
  const CoxeterSystem& sys = hk_.system();
  require(sys.is_min_coset_rep(y, ctx_.s_lambda, Side::Right), ErrorCode::ContextInvalid,
          "r-row index must lie in X_lambda");
  // Each T_u in (T_{y^{-1}})^{-1} factors as T_x T_w with x in X_lambda and
  // w in W_lambda (lengths adding), and T_w C_v = v^{L(w)} C_v.
  std::map<Element, LaurentPoly> rbar;
  for (const auto& [u, p] : hk_.t_inverse(y).terms) {
    CosetFactorization f = sys.coset_factorize(u, ctx_.s_lambda, Side::Right);
    int lw = sys.weight_length(f.parabolic_part);
    LaurentPoly& slot = rbar[f.rep_part];
    slot += p * LaurentPoly::monomial(1, lw);
  }
  std::map<Element, LaurentPoly> row;
  for (auto& [x, p] : rbar)
    if (!p.is_zero()) row.emplace(x, p.bar());
  require(row.count(y) && row.at(y).is_one(), ErrorCode::Internal, "r_{y,y} != 1");
  return r_rows_.emplace(y, std::move(row)).first->second;
}

const std::map<Element, LaurentPoly>& ParabolicTable::p_star_row(const Element& y) {
  auto it = p_rows_.find(y);
  if (it != p_rows_.end()) return it->second;
  // Solve, descending in x: bar(p*_{x,y}) - p*_{x,y} = sum_{x < z <= y} r_{x,z} p*_{z,y}.
  std::map<Element, LaurentPoly> row;
  row.emplace(y, LaurentPoly::constant(1));
  std::vector<Element> order;
  for (const auto& x : xs_)
    if (x.length() <= y.length() && x != y) order.push_back(x);
  std::sort(order.begin(), order.end(), [](const Element& a, const Element& b) {
    return Element::length_key_less(b, a);  // descending
  });
  for (const auto& x : order) {
    LaurentPoly a;
    for (const auto& [z, pz] : row) {
      if (z == x) continue;
      const auto& rz = r_row(z);
      auto rit = rz.find(x);
      if (rit == rz.end()) continue;
      a += rit->second * pz;
    }
    if (a.is_zero()) continue;
    LaurentPoly p = LaurentPoly::solve_antisymmetric(a);
    if (!p.is_zero()) row.emplace(x, p);
  }
  return p_rows_.emplace(y, std::move(row)).first->second;
}

HeckeElement ParabolicTable::c_for_product(const Element& y) {
  const HeckeElement& cv = hk_.kl_c(ctx_.v);
  HeckeElement out;
  out.basis = Basis::T;
  for (const auto& [x, p] : p_star_row(y)) out += hk_.t_mult_element_left(x, cv).scaled(p);
  return out;
}

bool ParabolicTable::delta_identity_holds(const Element& x, const Element& y) {
  LaurentPoly acc;
  for (const auto& z : xs_) {
    if (z.length() > y.length() || z.length() < x.length()) continue;
    const auto& rz = r_row(z);
    auto rxz = rz.find(x);
    if (rxz == rz.end()) continue;
    const auto& ry = r_row(y);
    auto rzy = ry.find(z);
    if (rzy == ry.end()) continue;
    acc += rxz->second.bar() * rzy->second;
  }
  return x == y ? acc.is_one() : acc.is_zero();
}

bool ParabolicTable::lowest_terms_check(const Element& y, const Element& v1) {
  const CoxeterSystem& sys = hk_.system();
  require(sys.bruhat_leq(v1, ctx_.v) && v1 != ctx_.v, ErrorCode::PreconditionViolated,
          "need v1 < v");
  LaurentPoly p = hk_.kl_p(v1, ctx_.v);
  HeckeElement prod = hk_.t_multiply(y, v1).scaled(p);
  for (const auto& [w, c] : prod.terms)
    if (!c.strictly_negative()) return false;
  return true;
}

}  // namespace cellule
