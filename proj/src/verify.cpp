#include "cellule/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cellule {

namespace {

// Index-sloted sweep: the check for item i may only write into slot i, so
// the merged output is independent of scheduling.  threads == 1 runs the
// plain serial reference loop.
template <class Fn>
void sweep(std::size_t n, int threads, Fn&& check) {
#ifndef _OPENMP
  threads = 1;
#endif
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) check(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads > 0 ? threads : omp_get_max_threads())
  for (long long i = 0; i < (long long)n; ++i) check(std::size_t(i));
#endif
}

std::vector<std::string> merge_slots(std::vector<std::vector<std::string>>& slots) {
  std::vector<std::string> out;
  for (auto& s : slots)
    for (auto& v : s) out.push_back(std::move(v));
  return out;
}

template <class Fn>
void guarded(std::vector<std::string>& slot, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    slot.push_back(std::string("exception: ") + e.what());
  }
}

bool hyperplane_in_hxy(const Hyperplane& h, const Element& y, const Element& xy) {
  std::int64_t ky = y.coords()[size_t(h.root)];
  std::int64_t kxy = xy.coords()[size_t(h.root)];
  bool in1 = std::min<std::int64_t>(0, ky) + 1 <= h.level && h.level <= std::max<std::int64_t>(0, ky);
  bool in2 = std::min(ky, kxy) + 1 <= h.level && h.level <= std::max(ky, kxy);
  return in1 && in2;
}

// Elements of the lower Bruhat interval [e, v]: products of subwords of a
// reduced word of v.
std::vector<Element> bruhat_interval(const CoxeterSystem& sys, const Element& v) {
  Word word = sys.reduced_word(v);
  std::set<Element> cur{sys.identity()};
  for (int s : word) {
    std::set<Element> next = cur;
    for (const auto& u : cur) next.insert(sys.right_mult(u, s));
    cur = std::move(next);
  }
  std::vector<Element> out(cur.begin(), cur.end());
  std::sort(out.begin(), out.end(), Element::length_key_less);
  return out;
}

}  // namespace

std::int64_t SuiteResult::stat(const std::string& name) const {
  for (const auto& [k, v] : stats)
    if (k == name) return v;
  return -1;
}

std::string weights_string(const CoxeterSystem& sys) {
  std::string out;
  for (int s = 0; s < sys.num_generators(); ++s) {
    if (s) out += ",";
    out += sys.generator(s).name + "=" + std::to_string(sys.weight(s));
  }
  return out;
}

// --------------------------------------------------------------------------
// bound suite

SuiteResult bound_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len_sum,
                        const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "bound";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball = sys->ball(max_len_sum);
  std::vector<Word> words;
  words.reserve(ball.size());
  for (const auto& w : ball.elems) words.push_back(sys->reduced_word(w));

  std::vector<std::pair<int, int>> pairs;
  for (int xi = 0; xi < int(ball.size()); ++xi)
    for (int yi = 0; yi < int(ball.size()); ++yi)
      if (ball.elems[size_t(xi)].length() + ball.elems[size_t(yi)].length() <= max_len_sum)
        pairs.push_back({xi, yi});

  HeckeContext hk(sys);
  const int nu_tilde = sys->nu_tilde();
  std::vector<std::vector<std::string>> slots(pairs.size());
  std::vector<int> degs(pairs.size(), LaurentPoly::NEG_INF);
  std::vector<char> tight(pairs.size(), 0);

  sweep(pairs.size(), opt.threads, [&](std::size_t i) {
    guarded(slots[i], [&] {
      const Element& x = ball.elems[size_t(pairs[i].first)];
      const Element& y = ball.elems[size_t(pairs[i].second)];
      HeckeElement prod = hk.t_mult_word_left(words[size_t(pairs[i].first)], hk.t_basis(y));
      int deg = prod.max_deg();
      BoundContext bc = bound_context(x, y);
      degs[i] = deg;
      if (deg == bc.c_total) tight[i] = 1;
      if (deg > bc.c_total)
        slots[i].push_back("deg f_{x,y,.} = " + std::to_string(deg) + " exceeds c_{x,y} = " +
                           std::to_string(bc.c_total) + " at x=\"" + sys->element_to_string(x) +
                           "\" y=\"" + sys->element_to_string(y) + "\"");
      if (deg > nu_tilde)
        slots[i].push_back("deg f_{x,y,.} = " + std::to_string(deg) + " exceeds nu-tilde = " +
                           std::to_string(nu_tilde) + " at x=\"" + sys->element_to_string(x) +
                           "\" y=\"" + sys->element_to_string(y) + "\"");
      // the coefficient of T_{xy} is 1 exactly when the lengths add
      Element xy = sys->multiply(x, y);
      bool add = xy.length() == x.length() + y.length();
      if (add != (bc.c_total == 0))
        slots[i].push_back("c_{x,y} = 0 iff lengths add fails at x=\"" + sys->element_to_string(x) +
                           "\" y=\"" + sys->element_to_string(y) + "\"");
    });
  });

  int max_deg = LaurentPoly::NEG_INF;
  std::int64_t tight_pairs = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    max_deg = std::max(max_deg, degs[i]);
    tight_pairs += tight[i];
  }
  res.violations = merge_slots(slots);
  res.add_stat("pairs", std::int64_t(pairs.size()));
  res.add_stat("max_deg", max_deg);
  res.add_stat("tight_pairs", tight_pairs);
  res.add_stat("nu_tilde", nu_tilde);
  return res;
}

// --------------------------------------------------------------------------
// lemma suite

SuiteResult lemma_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len_sum,
                        const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "lemmas";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball = sys->ball(max_len_sum);
  struct Triple {
    int xi, yi, s;
  };
  std::vector<Triple> triples;
  for (int xi = 0; xi < int(ball.size()); ++xi)
    for (int yi = 0; yi < int(ball.size()); ++yi) {
      if (ball.elems[size_t(xi)].length() + ball.elems[size_t(yi)].length() > max_len_sum) continue;
      for (int s = 0; s < sys->num_generators(); ++s) triples.push_back({xi, yi, s});
    }

  std::vector<std::vector<std::string>> slots(triples.size());
  std::vector<std::int64_t> checked(triples.size(), 0);

  sweep(triples.size(), opt.threads, [&](std::size_t i) {
    guarded(slots[i], [&] {
      const Element& x = ball.elems[size_t(triples[i].xi)];
      const Element& y = ball.elems[size_t(triples[i].yi)];
      const int s = triples[i].s;
      auto at = [&](const std::string& what) {
        return what + " fails at x=\"" + sys->element_to_string(x) + "\" y=\"" +
               sys->element_to_string(y) + "\" s=" + sys->generator(s).name;
      };
      bool x_desc = sys->is_right_descent(x, s);
      bool y_desc = sys->is_left_descent(s, y);
      if (!x_desc && !y_desc) {
        // transfer across an ascent pair: c_{xs,y} = c_{x,sy}
        Element xs = sys->right_mult(x, s);
        Element sy = sys->left_mult(s, y);
        if (bound_context(xs, y).c_total != bound_context(x, sy).c_total)
          slots[i].push_back(at("transfer identity c_{xs,y} = c_{x,sy}"));
        checked[i] = 1;
        return;
      }
      if (!(x_desc && y_desc)) return;
      checked[i] = 1;
      Element xs = sys->right_mult(x, s);
      Element sy = sys->left_mult(s, y);
      BoundContext bcxy = bound_context(x, y);
      BoundContext bcxsy = bound_context(xs, y);
      if (bound_context(xs, sy).c_total > bcxy.c_total)
        slots[i].push_back(at("monotonicity c_{xs,sy} <= c_{x,y}"));
      Hyperplane hs = crossing_hyperplane(s, y);
      bool hs_in_xsy =
          std::find(bcxsy.directions.begin(), bcxsy.directions.end(), hs.root) != bcxsy.directions.end();
      bool hs_in_xy =
          std::find(bcxy.directions.begin(), bcxy.directions.end(), hs.root) != bcxy.directions.end();
      if (hs_in_xsy) slots[i].push_back(at("crossing direction excluded from I_{xs,y}"));
      if (!hs_in_xy) slots[i].push_back(at("crossing direction present in I_{x,y}"));
      if (int(bcxsy.directions.size()) > int(bcxy.directions.size()) - 1)
        slots[i].push_back(at("direction injection |I_{xs,y}| <= |I_{x,y}| - 1"));
      int c_hs = hs_in_xy ? bcxy.c_per_direction.at(hs.root) : 0;
      if (bcxsy.c_total > bcxy.c_total - c_hs)
        slots[i].push_back(at("weight drop c_{xs,y} <= c_{x,y} - c_{x,y}(dir s)"));
      // mirror membership by type, and parallel hyperplanes share a type
      Element xy = sys->multiply(x, y);
      std::map<int, SType> dir_type;
      for (const Hyperplane& h : bcxsy.h_xy) {
        SType st = s_type_classify(h, x, y, s);
        auto it = dir_type.find(h.root);
        if (it == dir_type.end())
          dir_type[h.root] = st;
        else if (it->second != st)
          slots[i].push_back(at("parallel hyperplanes with distinct s-types"));
        bool member;
        if (st == SType::Type2)
          member = hyperplane_in_hxy(reflect_hyperplane(*sys, h, hs), y, xy);
        else
          member = hyperplane_in_hxy(h, y, xy);
        if (!member) slots[i].push_back(at("mirror membership for s-type classification"));
      }
    });
  });

  std::int64_t applicable = 0;
  for (auto c : checked) applicable += c;
  res.violations = merge_slots(slots);
  res.add_stat("triples", std::int64_t(triples.size()));
  res.add_stat("applicable", applicable);
  return res;
}

// --------------------------------------------------------------------------
// KL suite

SuiteResult kl_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len, const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "kl";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball = sys->ball(max_len);
  HeckeContext hk(sys);
  hk.fill(ball, opt.threads);

  std::vector<std::vector<std::string>> slots(ball.size());
  sweep(ball.size(), opt.threads, [&](std::size_t i) {
    guarded(slots[i], [&] {
      const Element& w = ball.elems[i];
      const HeckeElement& c = hk.kl_c_filled(w);
      if (hk.bar_filled(c) != c)
        slots[i].push_back("C_w not bar-invariant at w=\"" + sys->element_to_string(w) + "\"");
      if (!c.coeff(w).is_one())
        slots[i].push_back("top coefficient of C_w is not 1 at w=\"" + sys->element_to_string(w) + "\"");
      for (const auto& [y, p] : c.terms) {
        if (y == w) continue;
        if (!p.strictly_negative())
          slots[i].push_back("P_{y,w} not strictly negative at y=\"" + sys->element_to_string(y) +
                             "\" w=\"" + sys->element_to_string(w) + "\"");
        if (!sys->bruhat_leq(y, w))
          slots[i].push_back("support of C_w outside the Bruhat interval at w=\"" +
                             sys->element_to_string(w) + "\"");
      }
      // descent recursion P_{x,w} = v^{-L(s)} P_{sx,w} for x < sx, sw < w
      for (int s = 0; s < sys->num_generators(); ++s) {
        if (!sys->is_left_descent(s, w)) continue;
        for (const auto& x : ball.elems) {
          if (x.length() > w.length()) break;
          Element sx = sys->left_mult(s, x);
          if (sx.length() < x.length()) continue;
          LaurentPoly lhs = hk.kl_p_filled(x, w);
          LaurentPoly rhs = hk.kl_p_filled(sx, w) * LaurentPoly::monomial(1, -sys->weight(s));
          if (lhs != rhs)
            slots[i].push_back("descent recursion fails at x=\"" + sys->element_to_string(x) +
                               "\" w=\"" + sys->element_to_string(w) + "\" s=" + sys->generator(s).name);
        }
      }
    });
  });

  res.violations = merge_slots(slots);
  res.add_stat("elements", std::int64_t(ball.size()));
  res.add_stat("kl_table", std::int64_t(hk.kl_table_size()));
  return res;
}

// --------------------------------------------------------------------------
// induced module suite (r-table delta identity, product basis, lowest terms)

SuiteResult module5_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                          const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "endp";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball = sys->ball(max_len);
  HeckeContext hk(sys);
  hk.fill(ball, opt.threads);
  auto reps = omega_orbit_reps(*sys, 3);
  C0Oracle oracle(sys);

  std::int64_t delta_pairs = 0, nb_checked = 0, endp_checked = 0, contexts = 0;

  for (const auto& lam : reps) {
    // delta identity is a property of the parabolic alone; check it once per
    // representative with z = e
    {
      ParabolicContext ctx = make_parabolic_context(*sys, lam, sys->identity());
      ParabolicTable table(hk, ctx, std::min(max_len, 6));
      const auto& xs = table.coset_reps();
      for (const auto& x : xs)
        for (const auto& y : xs) {
          if (x.length() > y.length()) continue;
          ++delta_pairs;
          if (!table.delta_identity_holds(x, y))
            res.violations.push_back("delta identity fails at x=\"" + sys->element_to_string(x) +
                                     "\" y=\"" + sys->element_to_string(y) + "\"");
        }
    }

    // only contexts with l(v) = l(w_lambda) + l(z) <= max_len carry checks
    int z_bound = std::max(0, max_len - lam.w_lambda.length());
    MLambdaResult m = enumerate_m_lambda(oracle, lam, z_bound + 1);
    Ball yball = sys->ball(max_len);
    for (const auto& z : m.elements) {
      Element v = sys->multiply(lam.w_lambda, z);
      if (v.length() > max_len) continue;
      ++contexts;
      ParabolicContext ctx = make_parabolic_context(*sys, lam, z);
      ParabolicTable table(hk, ctx, max_len - v.length());

      // product basis: sum_x p*_{x,y} T_x C_v equals C_{yv}
      for (const auto& y : table.coset_reps()) {
        Element yv = sys->multiply(y, v);
        require(yv.length() == y.length() + v.length(), ErrorCode::Internal,
                "lengths do not add in y v for y in X_lambda");
        ++nb_checked;
        if (table.c_for_product(y) != hk.kl_c(yv))
          res.violations.push_back("product basis identity fails at y=\"" +
                                   sys->element_to_string(y) + "\" v=\"" +
                                   sys->element_to_string(v) + "\"");
      }

      // lowest terms: P_{v1,v} T_y T_{v1} has strictly negative coefficients
      std::vector<Element> interval = bruhat_interval(*sys, v);
      struct EndpItem {
        Element y, v1;
      };
      std::vector<EndpItem> items;
      for (const auto& y : yball.elems) {
        if (!sys->is_min_coset_rep(y, ctx.s_lambda, Side::Right)) continue;
        for (const auto& v1 : interval) {
          if (v1 == v || y.length() + v1.length() > max_len) continue;
          items.push_back({y, v1});
        }
      }
      std::vector<std::vector<std::string>> slots(items.size());
      sweep(items.size(), opt.threads, [&](std::size_t i) {
        guarded(slots[i], [&] {
          const Element& y = items[i].y;
          const Element& v1 = items[i].v1;
          LaurentPoly p = hk.kl_p_filled(v1, v);
          HeckeElement prod = hk.t_multiply(y, v1).scaled(p);
          for (const auto& [wz, cz] : prod.terms)
            if (!cz.strictly_negative())
              slots[i].push_back("lowest-terms check fails at y=\"" + sys->element_to_string(y) +
                                 "\" v1=\"" + sys->element_to_string(v1) + "\" v=\"" +
                                 sys->element_to_string(v) + "\"");
        });
      });
      endp_checked += std::int64_t(items.size());
      for (auto& v2 : merge_slots(slots)) res.violations.push_back(std::move(v2));
    }
  }

  res.add_stat("delta_pairs", delta_pairs);
  res.add_stat("contexts", contexts);
  res.add_stat("product_basis_checked", nb_checked);
  res.add_stat("lowest_terms_checked", endp_checked);
  return res;
}

// --------------------------------------------------------------------------
// lowest-cell oracle agreement

SuiteResult c0_agreement_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                               const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "c0-agreement";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball = sys->ball(max_len);
  C0Oracle oracle(sys);
  // bottom-up fill of the factorization memo (weak-order prefixes are shorter)
  std::vector<char> fact(ball.size(), 0);
  for (std::size_t i = 0; i < ball.size(); ++i)
    fact[i] = oracle.contains_factorization(ball.elems[i]) ? 1 : 0;

  std::vector<std::vector<std::string>> slots(ball.size());
  std::vector<char> geo(ball.size(), 0);
  sweep(ball.size(), opt.threads, [&](std::size_t i) {
    guarded(slots[i], [&] {
      geo[i] = outside_max_strips(ball.elems[i]) ? 1 : 0;
      if (geo[i] != fact[i])
        slots[i].push_back("oracles disagree at w=\"" + sys->element_to_string(ball.elems[i]) +
                           "\" strips=" + std::to_string(geo[i]) +
                           " factorization=" + std::to_string(fact[i]));
    });
  });

  std::int64_t members = 0;
  for (auto g : geo) members += g;
  res.violations = merge_slots(slots);
  res.add_stat("elements", std::int64_t(ball.size()));
  res.add_stat("c0_members", members);
  return res;
}

// --------------------------------------------------------------------------
// edge closure of the N_{lambda,z} blocks

SuiteResult main_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                       const SuiteOptions& opt) {
  SuiteResult res;
  res.suite = "main";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  HeckeContext hk(sys);
  PreorderGraph graph = left_preorder_graph(hk, max_len, opt.threads);
  CellDecomposition decomp(sys, max_len + 1);

  const auto& nodes = graph.nodes.elems;
  std::vector<std::optional<CellDecomposition::Assignment>> assign(nodes.size());
  std::vector<std::string> assign_errors;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    try {
      assign[i] = decomp.assign(nodes[i]);
    } catch (const Error& e) {
      assign_errors.push_back(std::string("exception: ") + e.what());
    }
  }
  for (auto& v : assign_errors) res.violations.push_back(std::move(v));

  std::vector<std::vector<std::string>> slots(nodes.size());
  std::int64_t edges = 0, c0_nodes = 0;
  for (std::size_t wi = 0; wi < nodes.size(); ++wi) {
    if (nodes[wi].length() > max_len || !assign[wi].has_value()) continue;
    ++c0_nodes;
    guarded(slots[wi], [&] {
      for (int yi : graph.below[wi]) {
        ++edges;
        if (!assign[size_t(yi)].has_value() || *assign[size_t(yi)] != *assign[wi])
          slots[wi].push_back("preorder edge leaves block " +
                              decomp.assignment_string(*assign[wi]) + " at w=\"" +
                              sys->element_to_string(nodes[wi]) + "\" y=\"" +
                              sys->element_to_string(nodes[size_t(yi)]) + "\"");
      }
    });
  }

  for (auto& v : merge_slots(slots)) res.violations.push_back(std::move(v));
  res.add_stat("nodes", std::int64_t(nodes.size()));
  res.add_stat("c0_nodes", c0_nodes);
  res.add_stat("edges_from_c0", edges);
  res.add_stat("lambda_count", std::int64_t(decomp.reps().size()));
  return res;
}

// --------------------------------------------------------------------------
// left-cell count in the lowest cell

SuiteResult count_suite(std::shared_ptr<const CoxeterSystem> sys, int max_bound) {
  SuiteResult res;
  res.suite = "count";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  auto reps = omega_orbit_reps(*sys, 3);
  C0Oracle oracle(sys);
  std::int64_t total = 0;
  bool all_stable = true;
  for (const auto& lam : reps) {
    MLambdaResult m = enumerate_m_lambda(oracle, lam, max_bound);
    if (!m.stable) all_stable = false;
    total += std::int64_t(m.elements.size());
  }
  std::int64_t w0_order = std::int64_t(sys->parabolic_elements(sys->finite_part()).size());
  res.add_stat("lambda_count", std::int64_t(reps.size()));
  res.add_stat("cell_count", total);
  res.add_stat("w0_order", w0_order);
  if (!all_stable) {
    res.caveats.push_back("StabilizationUnknown: M_lambda still growing at the bound");
    res.violations.push_back("M_lambda enumeration did not stabilize by bound " +
                             std::to_string(max_bound));
  } else if (total != w0_order) {
    res.violations.push_back("left cell count " + std::to_string(total) + " != |W_0| = " +
                             std::to_string(w0_order));
  }
  return res;
}

// --------------------------------------------------------------------------
// infrastructure invariants

SuiteResult infra_suite(std::shared_ptr<const CoxeterSystem> sys, const SuiteOptions& opt,
                        std::uint64_t seed) {
  SuiteResult res;
  res.suite = "infra";
  res.type = sys->type_string();
  res.weights = weights_string(*sys);

  Ball ball10 = sys->ball(10);
  std::vector<std::vector<std::string>> slots(ball10.size());
  sweep(ball10.size(), opt.threads, [&](std::size_t i) {
    guarded(slots[i], [&] {
      const Element& w = ball10.elems[i];
      Word word = sys->reduced_word(w);
      if (int(word.size()) != w.length())
        slots[i].push_back("reduced word length mismatch at \"" + sys->element_to_string(w) + "\"");
      if (sys->word_to_element(word) != w)
        slots[i].push_back("reduced word does not round trip at \"" + sys->element_to_string(w) + "\"");
      if (int(separating_hyperplanes(sys->identity(), w).size()) != w.length())
        slots[i].push_back("separating hyperplane count differs from length at \"" +
                           sys->element_to_string(w) + "\"");
      if (w.length() <= 8) {
        Alcove a = alcove_of(w);
        if (element_of(a) != w) slots[i].push_back("alcove/element round trip fails");
        for (int s = 0; s < sys->num_generators(); ++s) {
          if (element_of(act_generator(s, a)) != sys->left_mult(s, w))
            slots[i].push_back("generator action disagrees with multiplication");
          if (element_of(act_generator(s, act_generator(s, a))) != w)
            slots[i].push_back("generator action is not an involution");
        }
        Element inv = sys->inverse_of(w);
        if (sys->multiply(w, inv).length() != 0) slots[i].push_back("inverse fails");
        if (inv.length() != w.length()) slots[i].push_back("inverse changes length");
        int lw = 0;
        for (int s : word) lw += sys->weight(s);
        if (lw != sys->weight_length(w))
          slots[i].push_back("weight length disagrees with word weights at \"" +
                             sys->element_to_string(w) + "\"");
      }
    });
  });
  res.violations = merge_slots(slots);
  res.add_stat("ball10", std::int64_t(ball10.size()));

  // bar is an involution on random elements supported on the 6-ball
  HeckeContext hk(sys);
  Ball ball6 = sys->ball(6);
  hk.fill(ball6, opt.threads);
  std::mt19937_64 rng(seed);
  std::int64_t bar_checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    HeckeElement h;
    h.basis = Basis::T;
    std::uniform_int_distribution<int> pick(0, int(ball6.size()) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expd(-4, 4);
    for (int k = 0; k < 5; ++k)
      h.add(ball6.elems[size_t(pick(rng))], LaurentPoly::monomial(coeff(rng), expd(rng)));
    if (hk.bar_filled(hk.bar_filled(h)) != h) {
      res.violations.push_back("bar involution squared is not the identity");
      break;
    }
    ++bar_checked;
  }
  res.add_stat("bar_involution_trials", bar_checked);

  // associativity on random triples from the 5-ball
  Ball ball5 = sys->ball(5);
  std::vector<std::array<int, 3>> triples;
  std::uniform_int_distribution<int> pick5(0, int(ball5.size()) - 1);
  for (int t = 0; t < 1000; ++t) triples.push_back({pick5(rng), pick5(rng), pick5(rng)});
  std::vector<std::vector<std::string>> tslots(triples.size());
  sweep(triples.size(), opt.threads, [&](std::size_t i) {
    guarded(tslots[i], [&] {
      const Element& x = ball5.elems[size_t(triples[i][0])];
      const Element& y = ball5.elems[size_t(triples[i][1])];
      const Element& z = ball5.elems[size_t(triples[i][2])];
      HeckeElement xy = hk.t_multiply(x, y);
      HeckeElement lhs;
      lhs.basis = Basis::T;
      for (const auto& [u, p] : xy.terms) lhs += hk.t_multiply(u, z).scaled(p);
      HeckeElement rhs = hk.t_mult_element_left(x, hk.t_multiply(y, z));
      if (lhs != rhs)
        tslots[i].push_back("associativity fails at (\"" + sys->element_to_string(x) + "\",\"" +
                            sys->element_to_string(y) + "\",\"" + sys->element_to_string(z) + "\")");
    });
  });
  for (auto& v : merge_slots(tslots)) res.violations.push_back(std::move(v));
  res.add_stat("associativity_triples", std::int64_t(triples.size()));
  return res;
}

}  // namespace cellule
