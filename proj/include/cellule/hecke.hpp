#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cellule/coxeter.hpp"
#include "cellule/laurent.hpp"

namespace cellule {

enum class Basis { T, C };

// Finitely supported A-linear combination of basis elements indexed by
// group elements.  The basis tag is enforced: mixing T- and C-expansions
// in arithmetic is rejected rather than silently converted.
struct HeckeElement {
  Basis basis = Basis::T;
  std::map<Element, LaurentPoly> terms;

  static HeckeElement unit(Basis b, const Element& w) {
    HeckeElement h;
    h.basis = b;
    h.terms.emplace(w, LaurentPoly::constant(1));
    return h;
  }

  bool is_zero() const { return terms.empty(); }
  size_t support_size() const { return terms.size(); }

  LaurentPoly coeff(const Element& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? LaurentPoly() : it->second;
  }

  void add(const Element& w, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, p);
    } else {
      it->second += p;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    require(basis == o.basis, ErrorCode::Internal, "basis mismatch in Hecke arithmetic");
    for (const auto& [w, p] : o.terms) add(w, p);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    require(basis == o.basis, ErrorCode::Internal, "basis mismatch in Hecke arithmetic");
    for (const auto& [w, p] : o.terms) add(w, -p);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

  HeckeElement scaled(const LaurentPoly& f) const {
    HeckeElement out;
    out.basis = basis;
    if (f.is_zero()) return out;
    for (const auto& [w, p] : terms) out.terms.emplace(w, p * f);
    return out;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.basis == b.basis && a.terms == b.terms;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  // max over the support of deg_v of the coefficient; NEG_INF when zero
  int max_deg() const {
    int d = LaurentPoly::NEG_INF;
    for (const auto& [w, p] : terms) d = std::max(d, p.deg());
    return d;
  }

  // support element maximal for (length, coordinate key); terms must be nonempty
  const Element& top() const;
};

// Per-(system, weights) session for Hecke computations.  The memo tables
// (inverses of standard basis elements, Kazhdan-Lusztig elements) fill
// either on demand from a single thread or in bulk via fill(); after a
// bulk fill, all queries on the covered ball are read-only and safe to
// call from concurrent readers.
class HeckeContext {
 public:
  explicit HeckeContext(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {}

  const CoxeterSystem& system() const { return *sys_; }
  std::shared_ptr<const CoxeterSystem> system_ptr() const { return sys_; }

  HeckeElement t_basis(const Element& w) const { return HeckeElement::unit(Basis::T, w); }

  // T_s . h by the quadratic relation, extended linearly.
  HeckeElement t_mult_generator_left(int s, const HeckeElement& h) const;
  // T_x . h by folding generator multiplications over a reduced word of x.
  HeckeElement t_mult_element_left(const Element& x, const HeckeElement& h) const;
  HeckeElement t_mult_word_left(const Word& word, const HeckeElement& h) const;
  // T_x T_y; the coefficients are the structure constants f_{x,y,z}.
  HeckeElement t_multiply(const Element& x, const Element& y) const;

  // (T_{w^{-1}})^{-1} = T_w + sum over z < y of bar-R terms; memoized.
  const HeckeElement& t_inverse(const Element& w);

  // bar(sum a_w T_w) = sum bar(a_w) (T_{w^{-1}})^{-1}.
  HeckeElement bar(const HeckeElement& h);

  // The Kazhdan-Lusztig element C_w in the T-basis; memoized.
  const HeckeElement& kl_c(const Element& w);
  // P_{y,w}: coefficient of T_y in C_w (P_{w,w} = 1).
  LaurentPoly kl_p(const Element& y, const Element& w);

  HeckeElement expand_in_c_basis(HeckeElement h);
  HeckeElement ts_times_c(int s, const Element& w);

  // Read-only variants for use from concurrent readers after fill(); they
  // throw instead of extending the memo tables.
  const HeckeElement& kl_c_filled(const Element& w) const;
  LaurentPoly kl_p_filled(const Element& y, const Element& w) const;
  HeckeElement bar_filled(const HeckeElement& h) const { return bar_readonly(h); }
  HeckeElement expand_in_c_basis_filled(HeckeElement h) const;
  HeckeElement ts_times_c_filled(int s, const Element& w) const;

  // Bulk fill of t_inverse and C over a ball, layer by layer; layers are
  // independent given all shorter lengths, so they parallelize.
  void fill(const Ball& ball, int threads = 1);

  size_t kl_table_size() const { return c_memo_.size(); }

 private:
  using Key = std::vector<std::int32_t>;

  const HeckeElement* find_t_inverse(const Key& k) const;
  const HeckeElement* find_c(const Key& k) const;
  // Read-only computations used both on demand and by fill() workers.
  HeckeElement compute_t_inverse(const Element& w) const;
  HeckeElement compute_c(const Element& w, const HeckeElement& t_inverse_w) const;
  HeckeElement bar_readonly(const HeckeElement& h) const;

  std::shared_ptr<const CoxeterSystem> sys_;
  std::map<Key, HeckeElement> tinv_memo_;
  std::map<Key, HeckeElement> c_memo_;
};

}  // namespace cellule
