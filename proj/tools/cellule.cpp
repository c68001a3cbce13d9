// Command-line front end: exact computations in affine Weyl groups and
// their Hecke algebras with positive weight functions, verification
// suites with JSON reports, and rank-2 SVG pictures of the alcove tiling.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cellule/cells.hpp"
#include "cellule/svg_plot.hpp"
#include "cellule/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cellule;

namespace {

std::map<std::string, int> parse_weights(const std::string& spec, const std::string& type) {
  std::map<std::string, int> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string item;
  int positional = 1;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    try {
      if (eq == std::string::npos) {
        out["s" + std::to_string(positional++)] = std::stoi(item);
      } else {
        out[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidWeights, "cannot parse weight entry '" + item + "'");
    }
  }
  static_cast<void>(type);
  return out;
}

json laurent_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c;
  return json{{"str", p.str()}, {"coeffs", coeffs}};
}

json element_json(const CoxeterSystem& sys, const Element& w) {
  return json{{"word", sys.element_to_string(w)}, {"coords", w.coords()}, {"length", w.length()}};
}

struct ReportSink {
  json report;
  std::string json_path;
  int exit_code = 0;

  void finish(double ms) {
    report["timing_ms"] = ms;
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      out << report.dump(2) << "\n";
    }
  }
};

json suite_json(const SuiteResult& r) {
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return json{{"suite", r.suite},       {"type", r.type},       {"weights", r.weights},
              {"stats", stats},         {"violations", r.violations}, {"caveats", r.caveats}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellule: affine Weyl groups, Hecke algebra structure constants,\n"
               "Kazhdan-Lusztig bases with unequal parameters, and the lowest\n"
               "two-sided cell, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();  // global options are accepted after the subcommand too

  std::string type = "A~2";
  std::string weights_spec;
  std::string json_path;
  int threads = 0;
  app.add_option("--type", type, "group type: A~1, A~2, C~2, G~2, B~3");
  app.add_option("--weights", weights_spec, "weights, e.g. s1=2,s2=1 or 2,1");
  app.add_option("--json", json_path, "write the report as JSON to this file");
  app.add_option("--threads", threads, "worker threads (1 = serial reference, 0 = auto)");

  // mult
  auto* cmd_mult = app.add_subcommand("mult", "structure constants of T_x T_y with the degree bound");
  std::string x_word, y_word;
  cmd_mult->add_option("x", x_word, "reduced word for x, e.g. \"s1 s2\"")->required();
  cmd_mult->add_option("y", y_word, "reduced word for y")->required();

  // klpoly
  auto* cmd_kl = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial P_{y,w}");
  std::string kl_y, kl_w;
  cmd_kl->add_option("y", kl_y, "reduced word for y")->required();
  cmd_kl->add_option("w", kl_w, "reduced word for w")->required();

  // cells
  auto* cmd_cells = app.add_subcommand("cells", "left preorder blocks on a length ball");
  int cells_n = 6;
  cmd_cells->add_option("--max-length", cells_n, "ball radius");

  // c0
  auto* cmd_c0 = app.add_subcommand("c0", "the lowest two-sided cell on a length ball");
  int c0_n = 8;
  bool c0_decompose = false;
  cmd_c0->add_option("--max-length", c0_n, "ball radius");
  cmd_c0->add_flag("--decompose", c0_decompose, "group members into the blocks N_{lambda,z}");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n = -1;
  cmd_verify->add_option("suite", suite, "bound | lemmas | endp | main | count")->required();
  cmd_verify->add_option("--max-length", verify_n, "ball bound (default per suite)");

  // plot
  auto* cmd_plot = app.add_subcommand("plot", "rank-2 SVG of the alcove tiling");
  std::string plot_out = "alcoves.svg";
  double plot_window = 2.0;
  cmd_plot->add_option("--out", plot_out, "output SVG path");
  cmd_plot->add_option("--window", plot_window, "half-width of the window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  constexpr int kMaxLengthCap = 16;
  for (int n : {cells_n, c0_n, verify_n}) {
    if (n > kMaxLengthCap) {
      std::cerr << "error: --max-length exceeds the cap of " << kMaxLengthCap << "\n";
      return 2;
    }
  }

  ReportSink sink;
  sink.json_path = json_path;
  auto t0 = std::chrono::steady_clock::now();

  try {
    GroupDescriptor desc = GroupDescriptor::from_type_string(type, parse_weights(weights_spec, type));
    auto sys = CoxeterSystem::build(desc);
    sink.report["config"] = {{"type", type}, {"weights", weights_string(*sys)}};

    if (*cmd_mult) {
      sink.report["command"] = "mult";
      HeckeContext hk(sys);
      Element x = sys->word_to_element(x_word);
      Element y = sys->word_to_element(y_word);
      HeckeElement prod = hk.t_multiply(x, y);
      BoundContext bc = bound_context(x, y);
      json results = json::array();
      bool ok = true;
      std::vector<std::pair<Element, LaurentPoly>> terms(prod.terms.begin(), prod.terms.end());
      std::sort(terms.begin(), terms.end(),
                [](const auto& a, const auto& b) { return Element::length_key_less(a.first, b.first); });
      for (const auto& [z, f] : terms) {
        bool term_ok = f.deg() <= bc.c_total && f.deg() <= sys->nu_tilde();
        ok = ok && term_ok;
        json r = element_json(*sys, z);
        r["f"] = laurent_json(f);
        r["deg"] = f.deg() == LaurentPoly::NEG_INF ? json(nullptr) : json(f.deg());
        r["within_bound"] = term_ok;
        results.push_back(std::move(r));
        std::cout << "T[" << sys->element_to_string(z) << "]: " << f.str() << "  (deg "
                  << f.deg() << ")\n";
      }
      sink.report["results"] = std::move(results);
      sink.report["c_xy"] = bc.c_total;
      sink.report["nu_tilde"] = sys->nu_tilde();
      sink.report["violations"] = json::array();
      sink.report["caveats"] = json::array();
      std::cout << "c_xy = " << bc.c_total << ", nu_tilde = " << sys->nu_tilde() << ", bound "
                << (ok ? "ok" : "VIOLATED") << "\n";
      if (!ok) {
        sink.report["violations"].push_back("degree bound violated");
        sink.exit_code = 1;
      }
    } else if (*cmd_kl) {
      sink.report["command"] = "klpoly";
      HeckeContext hk(sys);
      Element y = sys->word_to_element(kl_y);
      Element w = sys->word_to_element(kl_w);
      LaurentPoly p = hk.kl_p(y, w);
      sink.report["results"] = json::array({json{{"y", element_json(*sys, y)},
                                                 {"w", element_json(*sys, w)},
                                                 {"p", laurent_json(p)}}});
      sink.report["violations"] = json::array();
      sink.report["caveats"] = json::array();
      std::cout << "P[" << sys->element_to_string(y) << ", " << sys->element_to_string(w)
                << "] = " << p.str() << "\n";
    } else if (*cmd_cells) {
      sink.report["command"] = "cells";
      HeckeContext hk(sys);
      PreorderGraph g = left_preorder_graph(hk, cells_n, threads);
      CellPartition part = cell_partition(g);
      json blocks = json::array();
      for (size_t b = 0; b < part.blocks.size(); ++b) {
        json elems = json::array();
        for (int v : part.blocks[b]) elems.push_back(sys->element_to_string(g.nodes.elems[size_t(v)]));
        blocks.push_back(json{{"elements", elems}, {"open", bool(part.open[b])}});
      }
      sink.report["results"] = std::move(blocks);
      sink.report["violations"] = json::array();
      sink.report["caveats"] = json::array({"partition truncated to the length ball"});
      std::cout << "ball(" << cells_n << "): " << g.nodes.size() << " elements, "
                << part.blocks.size() << " preorder blocks (boundary blocks flagged open)\n";
    } else if (*cmd_c0) {
      sink.report["command"] = "c0";
      sink.report["config"]["max_length"] = c0_n;
      Ball ball = sys->ball(c0_n);
      C0Oracle oracle(sys);
      std::vector<Element> members;
      for (const auto& w : ball.elems)
        if (oracle.contains(w, /*check_agreement=*/true)) members.push_back(w);
      json results = json::array();
      if (c0_decompose) {
        CellDecomposition decomp(sys, c0_n);
        std::map<std::string, std::vector<std::string>> blocks;
        for (const auto& w : members) {
          auto a = decomp.assign(w);
          blocks[decomp.assignment_string(*a)].push_back(sys->element_to_string(w));
        }
        for (const auto& [k, elems] : blocks) results.push_back(json{{"block", k}, {"elements", elems}});
        std::cout << "c0 has " << members.size() << " members in ball(" << c0_n << "), "
                  << blocks.size() << " blocks\n";
      } else {
        for (const auto& w : members) results.push_back(element_json(*sys, w));
        std::cout << "c0 has " << members.size() << " members in ball(" << c0_n << ")\n";
      }
      sink.report["results"] = std::move(results);
      sink.report["oracles_checked"] = std::int64_t(ball.size());
      sink.report["violations"] = json::array();
      sink.report["caveats"] = json::array({"membership listed within the length ball only"});
    } else if (*cmd_verify) {
      sink.report["command"] = "verify";
      if (verify_n >= 0) sink.report["config"]["max_length"] = verify_n;
      SuiteOptions opt{threads};
      SuiteResult r;
      if (suite == "bound")
        r = bound_suite(sys, verify_n < 0 ? 10 : verify_n, opt);
      else if (suite == "lemmas")
        r = lemma_suite(sys, verify_n < 0 ? 10 : verify_n, opt);
      else if (suite == "endp")
        r = module5_suite(sys, verify_n < 0 ? 8 : verify_n, opt);
      else if (suite == "main")
        r = main_suite(sys, verify_n < 0 ? 8 : verify_n, opt);
      else if (suite == "count")
        r = count_suite(sys, verify_n < 0 ? 12 : verify_n);
      else
        throw Error(ErrorCode::Internal, "unknown suite '" + suite + "' (expected bound, lemmas, endp, main, count)");
      sink.report["results"] = suite_json(r);
      sink.report["violations"] = r.violations;
      sink.report["caveats"] = r.caveats;
      std::cout << "suite " << r.suite << " on " << r.type << " [" << r.weights << "]: ";
      for (const auto& [k, v] : r.stats) std::cout << k << "=" << v << " ";
      std::cout << "violations=" << r.violations.size() << "\n";
      for (const auto& v : r.violations) std::cout << "  VIOLATION: " << v << "\n";
      for (const auto& c : r.caveats) std::cout << "  caveat: " << c << "\n";
      if (!r.passed()) sink.exit_code = 1;
    } else if (*cmd_plot) {
      sink.report["command"] = "plot";
      PlotOptions opt;
      opt.window = plot_window;
      std::string svg = render_alcove_svg(sys, opt);
      std::ofstream out(plot_out);
      out << svg;
      sink.report["results"] = json{{"out", plot_out}, {"bytes", svg.size()}};
      sink.report["violations"] = json::array();
      sink.report["caveats"] = json::array();
      std::cout << "wrote " << plot_out << " (" << svg.size() << " bytes)\n";
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    sink.report["error"] = e.what();
    sink.exit_code = (e.code() == ErrorCode::StabilizationUnknown) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  sink.finish(ms);
  return sink.exit_code;
}
