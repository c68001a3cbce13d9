// Wall-clock comparison of the serial reference loops against the OpenMP
// kernels for the heavy verification sweeps.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>

#include "cellule/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cellule;

namespace {

double time_ms(const std::function<SuiteResult()>& fn, SuiteResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string type = "C~2";
  std::string suite = "bound";
  int max_len = 9;
  int repeat = 1;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    auto next = [&]() -> std::string { return i + 1 < argc ? argv[++i] : ""; };
    if (a == "--type") type = next();
    else if (a == "--suite") suite = next();
    else if (a == "--max-length") max_len = std::stoi(next());
    else if (a == "--repeat") repeat = std::stoi(next());
    else {
      std::cerr << "usage: cellule-bench [--type T] [--suite bound|lemmas|kl|main] "
                   "[--max-length N] [--repeat K]\n";
      return 2;
    }
  }

  GroupDescriptor desc = GroupDescriptor::from_type_string(type, {});
  auto sys = CoxeterSystem::build(desc);

  auto run = [&](int threads) -> std::function<SuiteResult()> {
    SuiteOptions opt{threads};
    if (suite == "bound") return [=] { return bound_suite(sys, max_len, opt); };
    if (suite == "lemmas") return [=] { return lemma_suite(sys, max_len, opt); };
    if (suite == "kl") return [=] { return kl_suite(sys, max_len, opt); };
    if (suite == "main") return [=] { return main_suite(sys, max_len, opt); };
    std::cerr << "unknown suite " << suite << "\n";
    std::exit(2);
  };

  int hw = 1;
#ifdef _OPENMP
  hw = omp_get_max_threads();
#endif
  std::cout << "type=" << type << " suite=" << suite << " max-length=" << max_len
            << " threads(parallel)=" << hw << "\n";
  std::cout << "variant      time_ms    violations\n";

  double best_serial = 0, best_parallel = 0;
  SuiteResult serial_res, parallel_res;
  for (int k = 0; k < repeat; ++k) {
    SuiteResult r;
    double ms = time_ms(run(1), r);
    if (k == 0 || ms < best_serial) {
      best_serial = ms;
      serial_res = r;
    }
  }
  std::cout << "serial    " << best_serial << "  " << serial_res.violations.size() << "\n";
  for (int k = 0; k < repeat; ++k) {
    SuiteResult r;
    double ms = time_ms(run(0), r);
    if (k == 0 || ms < best_parallel) {
      best_parallel = ms;
      parallel_res = r;
    }
  }
  std::cout << "openmp    " << best_parallel << "  " << parallel_res.violations.size() << "\n";

  bool same = serial_res == parallel_res;
  std::cout << "results identical: " << (same ? "yes" : "NO") << "\n";
  if (best_parallel > 0)
    std::cout << "speedup: " << best_serial / best_parallel << "x\n";
  return same ? 0 : 1;
}
