#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "cellule/errors.hpp"

namespace cellule {

// Integer-coefficient Laurent polynomial in the indeterminate v.
// Zero coefficients are never stored, so the zero polynomial has an
// empty coefficient map and degree NEG_INF.
class LaurentPoly {
 public:
  using Coeffs = std::map<int, std::int64_t>;

  static constexpr int NEG_INF = std::numeric_limits<int>::min();

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  static LaurentPoly monomial(std::int64_t coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
  }
  // v^a - v^-a, the quadratic-relation coefficient for a generator of weight a.
  static LaurentPoly xi(int a) {
    LaurentPoly p = monomial(1, a);
    p.add_term(-1, -a);
    return p;
  }

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1; }

  std::int64_t coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
  }

  // Degree in v; NEG_INF for the zero polynomial.
  int deg() const { return coeffs_.empty() ? NEG_INF : coeffs_.rbegin()->first; }
  int low_deg() const { return coeffs_.empty() ? NEG_INF : coeffs_.begin()->first; }

  // Membership in v^-1 Z[v^-1].  The zero polynomial qualifies.
  bool strictly_negative() const { return coeffs_.empty() || deg() < 0; }

  void add_term(std::int64_t coeff, int exp) {
    if (coeff == 0) return;
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_[exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(c, e);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(-c, e);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ca * cb, ea + eb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ < b.coeffs_; }

  // The involution v -> v^-1.
  LaurentPoly bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  // "v^2 - v^-2", "1", "2v + 3 - v^-1"; terms in descending exponent order.
  std::string str() const;

  // Unique p in v^-1 Z[v^-1] with bar(p) - p = a.  Requires bar(a) = -a.
  static LaurentPoly solve_antisymmetric(const LaurentPoly& a);

 private:
  Coeffs coeffs_;
};

}  // namespace cellule
