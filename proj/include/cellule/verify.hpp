#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellule/cells.hpp"
#include "cellule/hecke.hpp"
#include "cellule/parabolic.hpp"

namespace cellule {

// threads == 1 selects the serial reference implementation; anything else
// runs the OpenMP kernels (0 = library default thread count).  Results are
// identical either way: parallel loops write to index-owned slots and are
// merged in index order.
struct SuiteOptions {
  int threads = 0;
};

struct SuiteResult {
  std::string suite;
  std::string type;
  std::string weights;
  std::vector<std::pair<std::string, std::int64_t>> stats;
  std::vector<std::string> violations;
  std::vector<std::string> caveats;

  bool passed() const { return violations.empty(); }
  std::int64_t stat(const std::string& name) const;
  void add_stat(const std::string& name, std::int64_t v) { stats.push_back({name, v}); }

  friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
    return a.suite == b.suite && a.type == b.type && a.weights == b.weights && a.stats == b.stats &&
           a.violations == b.violations && a.caveats == b.caveats;
  }
};

std::string weights_string(const CoxeterSystem& sys);

// deg_v f_{x,y,z} <= c_{x,y} and <= nu-tilde over all pairs with
// l(x) + l(y) <= max_len_sum.
SuiteResult bound_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len_sum,
                        const SuiteOptions& opt = {});

// The geometric transfer identities behind the degree bound, exhaustively
// over applicable (x, y, s) triples in the same ball.
SuiteResult lemma_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len_sum,
                        const SuiteOptions& opt = {});

// Bar-invariance, unitriangularity with strictly negative coefficients,
// and the descent recursion of the KL table up to max_len.
SuiteResult kl_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                     const SuiteOptions& opt = {});

// The induced-module identities: the delta identity of the r-table, the
// product-basis identity C_{yv} = sum p* T_x C_v, and the lowest-terms
// check, per orbit representative and z in M_lambda.
SuiteResult module5_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                          const SuiteOptions& opt = {});

// Elementwise agreement of the factorization and maximal-strip criteria
// for the lowest cell on a ball.
SuiteResult c0_agreement_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                               const SuiteOptions& opt = {});

// Edge closure: no left-preorder edge leaves a block N_{lambda,z} of the
// lowest cell, over the ball of the given radius.
SuiteResult main_suite(std::shared_ptr<const CoxeterSystem> sys, int max_len,
                       const SuiteOptions& opt = {});

// Stabilized count sum |M_lambda| == |W_0|, plus the orbit count |R|.
SuiteResult count_suite(std::shared_ptr<const CoxeterSystem> sys, int max_bound);

// Infrastructure invariants: word/geometry length agreement, alcove round
// trips, bar-involution, associativity on random triples.
SuiteResult infra_suite(std::shared_ptr<const CoxeterSystem> sys, const SuiteOptions& opt = {},
                        std::uint64_t seed = 12345);

}  // namespace cellule
