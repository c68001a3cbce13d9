#include "cellule/hecke.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cellule {

const Element& HeckeElement::top() const {
  require(!terms.empty(), ErrorCode::Internal, "top() of empty Hecke element");
  const Element* best = nullptr;
  for (const auto& [w, p] : terms)
    if (!best || Element::length_key_less(*best, w)) best = &w;
  return *best;
}

HeckeElement HeckeContext::t_mult_generator_left(int s, const HeckeElement& h) const {
  require(h.basis == Basis::T, ErrorCode::Internal, "generator multiplication needs the T-basis");
  HeckeElement out;
  out.basis = Basis::T;
  const CoxeterSystem& sys = *sys_;
  for (const auto& [w, p] : h.terms) {
    Element sw = sys.left_mult(s, w);
    if (sw.length() > w.length()) {
      out.add(sw, p);
    } else {
      out.add(sw, p);
      out.add(w, p * sys.xi(s));
    }
  }
  return out;
}

HeckeElement HeckeContext::t_mult_word_left(const Word& word, const HeckeElement& h) const {
  HeckeElement cur = h;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = t_mult_generator_left(*it, cur);
  return cur;
}

HeckeElement HeckeContext::t_mult_element_left(const Element& x, const HeckeElement& h) const {
  return t_mult_word_left(sys_->reduced_word(x), h);
}

HeckeElement HeckeContext::t_multiply(const Element& x, const Element& y) const {
  return t_mult_element_left(x, t_basis(y));
}

HeckeElement HeckeContext::compute_t_inverse(const Element& w) const {
  if (w.length() == 0) return HeckeElement::unit(Basis::T, w);
  int s = -1;
  Element sw;
  for (int a = 0; a < sys_->num_generators(); ++a) {
    Element cand = sys_->left_mult(a, w);
    if (cand.length() < w.length()) {
      s = a;
      sw = cand;
      break;
    }
  }
  const HeckeElement* tail = find_t_inverse(sw.coords());
  HeckeElement local;
  if (!tail) {
    local = compute_t_inverse(sw);
    tail = &local;
  }
  // T_s^{-1} = T_s - xi_s T_e
  HeckeElement out = t_mult_generator_left(s, *tail);
  out -= tail->scaled(sys_->xi(s));
  return out;
}

const HeckeElement* HeckeContext::find_t_inverse(const Key& k) const {
  auto it = tinv_memo_.find(k);
  return it == tinv_memo_.end() ? nullptr : &it->second;
}

const HeckeElement* HeckeContext::find_c(const Key& k) const {
  auto it = c_memo_.find(k);
  return it == c_memo_.end() ? nullptr : &it->second;
}

const HeckeElement& HeckeContext::t_inverse(const Element& w) {
  auto it = tinv_memo_.find(w.coords());
  if (it != tinv_memo_.end()) return it->second;
  HeckeElement h = compute_t_inverse(w);
  return tinv_memo_.emplace(w.coords(), std::move(h)).first->second;
}

HeckeElement HeckeContext::bar(const HeckeElement& h) {
  require(h.basis == Basis::T, ErrorCode::Internal, "bar involution acts on the T-basis");
  HeckeElement out;
  out.basis = Basis::T;
  for (const auto& [w, p] : h.terms) {
    const HeckeElement& inv = t_inverse(w);
    out += inv.scaled(p.bar());
  }
  return out;
}

HeckeElement HeckeContext::bar_readonly(const HeckeElement& h) const {
  HeckeElement out;
  out.basis = Basis::T;
  for (const auto& [w, p] : h.terms) {
    const HeckeElement* inv = find_t_inverse(w.coords());
    HeckeElement local;
    if (!inv) {
      local = compute_t_inverse(w);
      inv = &local;
    }
    out += inv->scaled(p.bar());
  }
  return out;
}

HeckeElement HeckeContext::compute_c(const Element& w, const HeckeElement& tinv_w) const {
  // Triangular bar-invariance correction: starting from T_w, cancel the
  // highest defect term of bar(E) - E with a strictly negative multiple of
  // an already-known C_y.  The corrections are the P-polynomials of the
  // final expansion up to lower-order contributions, and land in
  // v^-1 Z[v^-1] by construction.
  HeckeElement defect = tinv_w;  // bar(T_w) = (T_{w^{-1}})^{-1}
  defect.add(w, LaurentPoly::constant(-1));
  HeckeElement result = HeckeElement::unit(Basis::T, w);
  while (!defect.is_zero()) {
    Element y = defect.top();
    require(y.length() < w.length(), ErrorCode::Internal, "defect at or above the top term");
    LaurentPoly g = defect.coeff(y);
    LaurentPoly c = LaurentPoly::solve_antisymmetric(-g);
    const HeckeElement* cy = find_c(y.coords());
    require(cy != nullptr, ErrorCode::Internal, "missing shorter KL element during fill");
    // bar(c C_y) - c C_y = (bar(c) - c) C_y cancels g at T_y
    defect += cy->scaled(c.bar() - c);
    require(defect.coeff(y).is_zero(), ErrorCode::Internal, "defect cancellation failed");
    result += cy->scaled(c);
  }
  return result;
}

const HeckeElement& HeckeContext::kl_c(const Element& w) {
  auto it = c_memo_.find(w.coords());
  if (it != c_memo_.end()) return it->second;
  // Fill every shorter element of the lower Bruhat interval first; the
  // correction loop touches only elements below w.
  const HeckeElement& tinv = t_inverse(w);
  std::vector<Element> below;
  for (const auto& [z, p] : tinv.terms)
    if (z.length() < w.length()) below.push_back(z);
  std::sort(below.begin(), below.end(), Element::length_key_less);
  for (const auto& z : below) kl_c(z);
  HeckeElement c = compute_c(w, tinv);
  return c_memo_.emplace(w.coords(), std::move(c)).first->second;
}

LaurentPoly HeckeContext::kl_p(const Element& y, const Element& w) { return kl_c(w).coeff(y); }

HeckeElement HeckeContext::expand_in_c_basis(HeckeElement h) {
  require(h.basis == Basis::T, ErrorCode::Internal, "expansion expects a T-basis element");
  HeckeElement out;
  out.basis = Basis::C;
  while (!h.is_zero()) {
    Element y = h.top();
    LaurentPoly c = h.coeff(y);
    const HeckeElement& cy = kl_c(y);
    h -= cy.scaled(c);
    out.add(y, c);
    require(h.coeff(y).is_zero(), ErrorCode::Internal, "C-basis elimination failed");
  }
  return out;
}

HeckeElement HeckeContext::ts_times_c(int s, const Element& w) {
  return expand_in_c_basis(t_mult_generator_left(s, kl_c(w)));
}

const HeckeElement& HeckeContext::kl_c_filled(const Element& w) const {
  const HeckeElement* c = find_c(w.coords());
  require(c != nullptr, ErrorCode::Internal,
          "KL element not prefilled: " + sys_->element_to_string(w));
  return *c;
}

LaurentPoly HeckeContext::kl_p_filled(const Element& y, const Element& w) const {
  return kl_c_filled(w).coeff(y);
}

HeckeElement HeckeContext::expand_in_c_basis_filled(HeckeElement h) const {
  require(h.basis == Basis::T, ErrorCode::Internal, "expansion expects a T-basis element");
  HeckeElement out;
  out.basis = Basis::C;
  while (!h.is_zero()) {
    Element y = h.top();
    LaurentPoly c = h.coeff(y);
    h -= kl_c_filled(y).scaled(c);
    out.add(y, c);
    require(h.coeff(y).is_zero(), ErrorCode::Internal, "C-basis elimination failed");
  }
  return out;
}

HeckeElement HeckeContext::ts_times_c_filled(int s, const Element& w) const {
  return expand_in_c_basis_filled(t_mult_generator_left(s, kl_c_filled(w)));
}

void HeckeContext::fill(const Ball& ball, int threads) {
#ifndef _OPENMP
  threads = 1;
#endif
  // group elements by length
  int maxlen = 0;
  for (const auto& w : ball.elems) maxlen = std::max(maxlen, w.length());
  std::vector<std::vector<Element>> layers(size_t(maxlen) + 1);
  for (const auto& w : ball.elems) layers[size_t(w.length())].push_back(w);

  for (int len = 0; len <= maxlen; ++len) {
    const auto& layer = layers[size_t(len)];
    std::vector<Element> todo;
    for (const auto& w : layer)
      if (!c_memo_.count(w.coords())) todo.push_back(w);

    std::vector<HeckeElement> tinv_results(todo.size());
    std::vector<HeckeElement> c_results(todo.size());
    std::vector<std::string> errors(todo.size());
    // exceptions may not cross an OpenMP region; capture and rethrow after
    auto work = [&](size_t i) {
      try {
        const HeckeElement* inv = find_t_inverse(todo[i].coords());
        tinv_results[i] = inv ? *inv : compute_t_inverse(todo[i]);
        c_results[i] = compute_c(todo[i], tinv_results[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    };
    if (threads != 1 && todo.size() > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
      for (long long i = 0; i < (long long)todo.size(); ++i) work(size_t(i));
    } else {
      for (size_t i = 0; i < todo.size(); ++i) work(i);
    }
    for (const auto& e : errors)
      require(e.empty(), ErrorCode::Internal, "KL fill worker failed: " + e);
    for (size_t i = 0; i < todo.size(); ++i) {
      if (!tinv_memo_.count(todo[i].coords()))
        tinv_memo_.emplace(todo[i].coords(), std::move(tinv_results[i]));
      c_memo_.emplace(todo[i].coords(), std::move(c_results[i]));
    }
  }
}

}  // namespace cellule
