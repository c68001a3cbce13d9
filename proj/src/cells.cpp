#include "cellule/cells.hpp"

#include <algorithm>
#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cellule {

bool C0Oracle::contains_factorization(const Element& w) {
  auto it = memo_.find(w.coords());
  if (it != memo_.end()) return it->second;
  const CoxeterSystem& sys = *sys_;
  std::vector<int> dr = sys.descents(w, Side::Right);
  bool res = false;
  for (const auto& j : sys.big_s()) {
    bool all = true;
    for (int s : j)
      if (std::find(dr.begin(), dr.end(), s) == dr.end()) all = false;
    if (all) {
      res = true;
      break;
    }
  }
  if (!res) {
    for (int s : dr) {
      if (contains_factorization(sys.right_mult(w, s))) {
        res = true;
        break;
      }
    }
  }
  memo_[w.coords()] = res;
  return res;
}

bool C0Oracle::contains(const Element& w, bool check_agreement) {
  bool geo = contains_geometric(w);
  if (check_agreement) {
    bool fact = contains_factorization(w);
    require(geo == fact, ErrorCode::OracleDisagreement,
            "strip and factorization criteria disagree at " + sys_->element_to_string(w));
  }
  return geo;
}

MLambdaResult enumerate_m_lambda(C0Oracle& oracle, const SpecialPoint& lambda, int bound) {
  require(lambda.has_parabolic_data, ErrorCode::ContextInvalid,
          "M_lambda needs a representative with parabolic data");
  const CoxeterSystem& sys = *lambda.w_lambda.system();
  Ball b = sys.ball(bound);
  MLambdaResult out;
  int top = 0;
  for (const auto& z : b.elems) {
    if (!sys.is_min_coset_rep(z, lambda.stabilizer_gens, Side::Left)) continue;
    Element wz = sys.multiply(lambda.w_lambda, z);
    bool ok = true;
    for (int s : lambda.stabilizer_gens) {
      if (oracle.contains(sys.left_mult(s, wz))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.elements.push_back(z);
      top = std::max(top, z.length());
    }
  }
  out.stable = top < bound;
  return out;
}

CellDecomposition::CellDecomposition(std::shared_ptr<const CoxeterSystem> sys, int m_bound,
                                     int orbit_radius)
    : sys_(sys), oracle_(sys) {
  reps_ = omega_orbit_reps(*sys_, orbit_radius);
  for (const auto& rep : reps_) {
    MLambdaResult m = enumerate_m_lambda(oracle_, rep, m_bound);
    m_lambda_.push_back(std::move(m.elements));
  }
}

std::optional<CellDecomposition::Assignment> CellDecomposition::assign(const Element& w) {
  if (!oracle_.contains(w)) return std::nullopt;
  const CoxeterSystem& sys = *sys_;
  std::optional<Assignment> found;
  for (int li = 0; li < int(reps_.size()); ++li) {
    const SpecialPoint& lam = reps_[size_t(li)];
    for (const Element& z : m_lambda_[size_t(li)]) {
      Element u = sys.multiply(w, sys.inverse_of(z));
      if (u.length() + z.length() != w.length()) continue;
      bool top = true;
      for (int s : lam.stabilizer_gens)
        if (!sys.is_right_descent(u, s)) top = false;
      if (!top) continue;  // u does not end with the full w_lambda
      require(!found, ErrorCode::AmbiguousAssignment,
              "element admits two decompositions: " + sys.element_to_string(w));
      found = Assignment{li, z};
    }
  }
  require(found.has_value(), ErrorCode::NoAssignment,
          "element of c0 without a decomposition (M_lambda bound too small?): " +
              sys.element_to_string(w));
  return found;
}

std::string CellDecomposition::assignment_string(const Assignment& a) const {
  std::string out = "lambda=(";
  const auto& v = reps_[size_t(a.lambda_index)].coords;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  out += ") z=\"" + sys_->element_to_string(a.z) + "\"";
  return out;
}

PreorderGraph left_preorder_graph(HeckeContext& hk, int radius, int threads) {
  const CoxeterSystem& sys = hk.system();
  PreorderGraph g;
  g.radius = radius;
  g.nodes = sys.ball(radius + 1);
  hk.fill(g.nodes, threads);
  const int n = int(g.nodes.size());
  g.below.assign(size_t(n), {});

#ifndef _OPENMP
  threads = 1;
#endif
  std::vector<std::vector<int>> results(static_cast<size_t>(n));
  std::vector<std::string> errors(static_cast<size_t>(n));
  // exceptions may not cross an OpenMP region; capture and rethrow after
  auto work = [&](int wi) {
    try {
      const Element& w = g.nodes.elems[size_t(wi)];
      if (w.length() > radius) return;
      std::vector<int> out;
      for (int s = 0; s < sys.num_generators(); ++s) {
        HeckeElement exp = hk.ts_times_c_filled(s, w);
        for (const auto& [y, c] : exp.terms) {
          int yi = g.nodes.index_of(y);
          require(yi >= 0, ErrorCode::Internal, "C-expansion leaves the node ball");
          out.push_back(yi);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      results[size_t(wi)] = std::move(out);
    } catch (const std::exception& e) {
      errors[size_t(wi)] = e.what();
    }
  };
  if (threads != 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (int wi = 0; wi < n; ++wi) work(wi);
  } else {
    for (int wi = 0; wi < n; ++wi) work(wi);
  }
  for (const auto& e : errors)
    require(e.empty(), ErrorCode::Internal, "preorder edge worker failed: " + e);
  g.below = std::move(results);
  return g;
}

namespace {

// Iterative Tarjan over the "below" adjacency.
struct TarjanState {
  const PreorderGraph& g;
  std::vector<int> index, low, comp;
  std::vector<bool> on_stack;
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  explicit TarjanState(const PreorderGraph& g_)
      : g(g_),
        index(g_.nodes.size(), -1),
        low(g_.nodes.size(), 0),
        comp(g_.nodes.size(), -1),
        on_stack(g_.nodes.size(), false) {}

  void run(int root) {
    struct Frame {
      int v;
      size_t edge;
    };
    std::vector<Frame> frames{{root, 0}};
    index[size_t(root)] = low[size_t(root)] = next_index++;
    stack.push_back(root);
    on_stack[size_t(root)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& adj = g.below[size_t(f.v)];
      if (f.edge < adj.size()) {
        int u = adj[f.edge++];
        if (index[size_t(u)] < 0) {
          index[size_t(u)] = low[size_t(u)] = next_index++;
          stack.push_back(u);
          on_stack[size_t(u)] = true;
          frames.push_back({u, 0});
        } else if (on_stack[size_t(u)]) {
          low[size_t(f.v)] = std::min(low[size_t(f.v)], index[size_t(u)]);
        }
      } else {
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[size_t(frames.back().v)] = std::min(low[size_t(frames.back().v)], low[size_t(v)]);
        if (low[size_t(v)] == index[size_t(v)]) {
          for (;;) {
            int u = stack.back();
            stack.pop_back();
            on_stack[size_t(u)] = false;
            comp[size_t(u)] = next_comp;
            if (u == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
};

}  // namespace

CellPartition cell_partition(const PreorderGraph& g) {
  TarjanState t(g);
  for (int v = 0; v < int(g.nodes.size()); ++v)
    if (t.index[size_t(v)] < 0) t.run(v);
  std::vector<std::vector<int>> blocks(size_t(t.next_comp));
  for (int v = 0; v < int(g.nodes.size()); ++v) blocks[size_t(t.comp[size_t(v)])].push_back(v);
  // deterministic order: by the minimal node (nodes are already sorted by
  // (length, key))
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  CellPartition out;
  out.truncated = true;
  for (auto& b : blocks) {
    bool open = false;
    for (int v : b)
      if (g.nodes.elems[size_t(v)].length() >= g.radius) open = true;
    out.blocks.push_back(std::move(b));
    out.open.push_back(open);
  }
  return out;
}

}  // namespace cellule
