// bctk: chromatic polynomials, broken circuits and proof-obligation checks
// for small multigraphs described in the GraphFile format.
//
// Exit codes: 0 success, 1 a verified property failed, 2 bad input,
// 3 integer overflow, 4 a size guard refused the instance.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bctk/broken_circuit.hpp"
#include "bctk/chromatic.hpp"
#include "bctk/errors.hpp"
#include "bctk/graph.hpp"
#include "bctk/graph_io.hpp"
#include "bctk/lemma_lab.hpp"

namespace {

struct FileOptions {
  std::string path;
  bool json = false;
  int max_edges = 20;
};

void add_file_options(CLI::App* cmd, FileOptions& opts) {
  cmd->add_option("file", opts.path, "graph in GraphFile format")->required();
  cmd->add_flag("--json", opts.json, "emit a JSON report instead of text");
  cmd->add_option("--max-edges", opts.max_edges,
                  "ceiling for subset enumeration (hard cap 24)")
      ->envname("BCTK_MAX_EDGES")
      ->check(CLI::Range(1, 24));
}

bctk::Graph load_guarded(const FileOptions& opts) {
  bctk::Graph g = bctk::load_graph_file(opts.path);
  if (g.edge_count() > opts.max_edges)
    throw bctk::GuardError("graph has " + std::to_string(g.edge_count()) +
                           " edges, above the --max-edges guard of " +
                           std::to_string(opts.max_edges));
  return g;
}

std::string set_text(const bctk::EdgeSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

int cmd_poly(const FileOptions& opts, bool ascii, bool use_cache,
             const std::vector<int64_t>& eval_points) {
  const bctk::Graph g = load_guarded(opts);
  bctk::PolynomialCache cache;
  const bctk::Polynomial p =
      use_cache ? bctk::chromatic_polynomial(g, cache) : bctk::chromatic_polynomial(g);

  if (opts.json) {
    bctk::Json report = bctk::poly_report(g, p);
    if (!eval_points.empty()) {
      bctk::Json evals = bctk::Json::array();
      for (int64_t x : eval_points) {
        bctk::Json row;
        row["lambda"] = x;
        row["value"] = p.evaluate(x);
        evals.push_back(std::move(row));
      }
      report["evaluations"] = std::move(evals);
    }
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  std::cout << "P = " << p.to_string(ascii) << "\n";
  std::cout << "a = [";
  const auto ak = p.ak_view();
  for (size_t i = 0; i < ak.size(); ++i) std::cout << (i ? ", " : "") << ak[i];
  std::cout << "]\n";
  for (int64_t x : eval_points) std::cout << "P(" << x << ") = " << p.evaluate(x) << "\n";
  return 0;
}

int cmd_bc(const FileOptions& opts) {
  const bctk::Graph g = load_guarded(opts);
  const bctk::GuardLimits limits{opts.max_edges, 1'000'000};
  const bctk::BrokenCircuitReport report = bctk::broken_circuits(g, limits);

  if (opts.json) {
    std::cout << bctk::bc_report(g, report).dump(2) << "\n";
    return 0;
  }
  std::cout << "broken circuits: " << report.broken_circuits.size() << "\n";
  for (size_t i = 0; i < report.broken_circuits.size(); ++i)
    std::cout << set_text(report.broken_circuits[i]) << "  (from cycle "
              << set_text(report.generating_cycle[i]) << ")\n";
  return 0;
}

int cmd_nbc(const FileOptions& opts, int k, bool list) {
  const bctk::Graph g = load_guarded(opts);
  const bctk::GuardLimits limits{opts.max_edges, 1'000'000};

  std::vector<bctk::EdgeSet> subsets;
  int64_t count;
  if (list) {
    subsets = bctk::nbc_subsets(g, k, limits);
    count = static_cast<int64_t>(subsets.size());
  } else {
    count = bctk::nbc_count(g, k, limits);
  }

  if (opts.json) {
    std::cout << bctk::nbc_report(g, k, count, list ? &subsets : nullptr).dump(2) << "\n";
    return 0;
  }
  std::cout << "nbc(" << k << ") = " << count << "\n";
  for (const auto& s : subsets) std::cout << set_text(s) << "\n";
  return 0;
}

int cmd_verify(const FileOptions& opts, bool ascii) {
  const bctk::Graph g = load_guarded(opts);
  const bctk::GuardLimits limits{opts.max_edges, 1'000'000};
  const bctk::LemmaGuards guards{14, limits};

  const bctk::Polynomial p = bctk::chromatic_polynomial(g);
  const bctk::BrokenCircuitReport circuits = bctk::broken_circuits(g, limits);
  const bctk::WhitneyReport whitney = bctk::whitney_check(g, limits);
  std::vector<bctk::CheckEntry> entries = bctk::check_graph(g, guards);

  bool all_ok = whitney.pass;
  for (const auto& entry : entries) all_ok = all_ok && (entry.skipped || entry.passed);

  // The whitney row is reported through the dedicated whitney object, not
  // the lemmas array.
  std::vector<bctk::CheckEntry> lemmas;
  for (auto& entry : entries)
    if (entry.check != "whitney") lemmas.push_back(entry);

  if (opts.json) {
    std::cout << bctk::verify_report(g, p, circuits, whitney, lemmas).dump(2) << "\n";
    return all_ok ? 0 : 1;
  }

  std::cout << "P = " << p.to_string(ascii) << "\n";
  std::cout << "whitney: " << (whitney.pass ? "pass" : "FAIL") << "\n";
  for (const auto& entry : lemmas) {
    std::cout << entry.check << ": "
              << (entry.skipped ? "skip" : entry.passed ? "pass" : "FAIL") << "\n";
    if (entry.counterexample)
      std::cout << "  counterexample: " << entry.counterexample->detail << " witness="
                << set_text(entry.counterexample->witness) << "\n";
  }
  std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int cmd_fuzz(const bctk::FuzzConfig& config, int threads, bool json) {
  const std::vector<bctk::Graph> corpus = bctk::generate_corpus(config);
  const bctk::RunSummary summary = bctk::run_all_checks(corpus, threads);

  if (json) {
    std::cout << bctk::fuzz_report(config, summary).dump(2) << "\n";
  } else {
    std::cout << summary.graphs << " graphs, " << summary.total_failures() << " failures\n";
    for (const auto& row : summary.rows)
      std::cout << row.check << ": pass=" << row.pass << " fail=" << row.fail
                << " skipped=" << row.skipped << "\n";
    for (const auto& failure : summary.failures)
      std::cout << "FAIL " << failure.check << " on " << failure.instance << " (minimized: "
                << failure.minimized_instance << "): " << failure.detail << "\n";
  }
  return summary.total_failures() == 0 ? 0 : 1;
}

int run(const std::function<int()>& body) {
  try {
    return body();
  } catch (const bctk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bctk::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bctk::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic polynomials and broken circuits of small multigraphs"};
  app.require_subcommand(1);

  FileOptions poly_opts;
  bool poly_ascii = false;
  bool poly_cache = false;
  std::vector<int64_t> poly_evals;
  CLI::App* poly = app.add_subcommand("poly", "chromatic polynomial of a graph");
  add_file_options(poly, poly_opts);
  poly->add_flag("--ascii", poly_ascii, "render without unicode");
  poly->add_flag("--cache", poly_cache, "memoize subgraphs during the recursion");
  poly->add_option("--eval", poly_evals, "also evaluate at these color counts");

  FileOptions bc_opts;
  CLI::App* bc = app.add_subcommand("bc", "broken circuits with generating cycles");
  add_file_options(bc, bc_opts);

  FileOptions nbc_opts;
  int nbc_k = 0;
  bool nbc_list = false;
  CLI::App* nbc = app.add_subcommand("nbc", "count subsets including no broken circuit");
  add_file_options(nbc, nbc_opts);
  nbc->add_option("k", nbc_k, "subset size")->required();
  nbc->add_flag("--list", nbc_list, "list the subsets as well");

  FileOptions verify_opts;
  bool verify_ascii = false;
  CLI::App* verify = app.add_subcommand("verify", "run every check on one graph");
  add_file_options(verify, verify_opts);
  verify->add_flag("--ascii", verify_ascii, "render without unicode");

  bctk::FuzzConfig fuzz_config;
  int fuzz_threads = 1;
  bool fuzz_json = false;
  CLI::App* fuzz = app.add_subcommand("fuzz", "check a seeded random corpus");
  fuzz->add_option("--n-max", fuzz_config.n_max, "largest vertex count")
      ->check(CLI::Range(1, 1'000'000));
  fuzz->add_option("--m-max", fuzz_config.m_max, "largest edge count")
      ->check(CLI::Range(0, 1'000'000));
  fuzz->add_option("--trials", fuzz_config.trials, "number of graphs")
      ->check(CLI::Range(0, 100'000'000));
  fuzz->add_option("--seed", fuzz_config.seed, "corpus seed");
  fuzz->add_flag("--allow-loops,!--no-loops", fuzz_config.allow_loops, "permit loops");
  fuzz->add_flag("--allow-parallel,!--no-parallel", fuzz_config.allow_parallel,
                 "permit parallel edges");
  fuzz->add_option("--threads", fuzz_threads, "worker threads (output is identical for any value)")
      ->check(CLI::Range(1, 256));
  fuzz->add_flag("--json", fuzz_json, "emit a JSON report instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*poly) return run([&] { return cmd_poly(poly_opts, poly_ascii, poly_cache, poly_evals); });
  if (*bc) return run([&] { return cmd_bc(bc_opts); });
  if (*nbc) return run([&] { return cmd_nbc(nbc_opts, nbc_k, nbc_list); });
  if (*verify) return run([&] { return cmd_verify(verify_opts, verify_ascii); });
  if (*fuzz) return run([&] { return cmd_fuzz(fuzz_config, fuzz_threads, fuzz_json); });
  return 2;  // unreachable: a subcommand is required
}
