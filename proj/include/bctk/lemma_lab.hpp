#pragma once

// Executable forms of the proof obligations behind the broken-circuit
// counting argument: parallel-edge reduction (L0), deletion invariance of
// broken-circuit inclusion (L1), compatibility of contraction with
// NBC subsets (L2, L3), the counting identities (L4a, L4b) and the
// coefficient recurrence (EQ3). Each check quantifies over edge subsets
// exhaustively, so they stay behind a quantification guard.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bctk/broken_circuit.hpp"
#include "bctk/graph.hpp"

namespace bctk {

enum class LemmaId { L0, L1, L2a, L2b, L3, L4a, L4b, EQ3 };
std::string_view to_string(LemmaId id);

struct Counterexample {
  EdgeSet witness;     // the violating edge set, empty for pure count mismatches
  std::string detail;  // human-readable account, enough to re-run the instance
};

struct LemmaVerdict {
  LemmaId lemma;
  std::string instance;  // serialized graph plus check parameters
  bool passed = false;
  std::optional<Counterexample> counterexample;  // present exactly when failed
};

struct LemmaGuards {
  int max_quantified_edges = 14;  // ceiling for 2^m subset sweeps
  GuardLimits limits{};
};

/// L0, for a parallel pair e < f: a subset of E(G) includes no broken circuit
/// of G exactly when it avoids e and includes no broken circuit of G - e.
LemmaVerdict check_lemma0(const Graph& g, EdgeId e, EdgeId f, const LemmaGuards& = {});

/// L1, for loop-free G with minimum edge e: subsets of E(G - e) include a
/// broken circuit of G - e exactly when they include one of G.
LemmaVerdict check_lemma1(const Graph& g, const LemmaGuards& = {});

/// L2, for simple G with minimum edge e and any NBC subset X containing e:
/// (a) X - {e} survives into the contraction at e, and (b) X - {e} includes
/// no broken circuit there. Returned as one verdict per part.
std::array<LemmaVerdict, 2> check_lemma2(const Graph& g, const LemmaGuards& = {});

/// L3, for simple G with minimum edge e: an NBC subset of the contraction at
/// e stays NBC in G after adding e back.
LemmaVerdict check_lemma3(const Graph& g, const LemmaGuards& = {});

/// L4a, for loop-free G with minimum edge e: as many NBC k-subsets of
/// E(G - e) as NBC k-subsets of E(G) avoiding e.
LemmaVerdict check_lemma4a(const Graph& g, int k, const LemmaGuards& = {});

/// L4b: dropping e is a bijection from the NBC k-subsets of E(G) containing
/// e onto the NBC (k-1)-subsets of the contraction at e. Materializes both
/// families and verifies well-definedness, injectivity and surjectivity;
/// the verdict detail records both cardinalities.
LemmaVerdict bijection_beta(const Graph& g, int k, const LemmaGuards& = {});

/// EQ3, for simple G with minimum edge e: a_k(G) = a_k(G - e) + a_{k-1}(G
/// contracted at e) for k = 1..n, computed from three chromatic polynomials.
LemmaVerdict check_recurrence(const Graph& g, const LemmaGuards& = {});

/// Seeded random multigraph corpus. Identical configs produce identical
/// corpora, byte for byte, on any platform.
struct FuzzConfig {
  int n_max = 5;
  int m_max = 8;
  int trials = 100;
  uint64_t seed = 0;
  bool allow_loops = true;
  bool allow_parallel = true;
};

std::vector<Graph> generate_corpus(const FuzzConfig& config);

/// Every graph with at most n_max vertices and m_max edges, one per multiset
/// of endpoint sets (edges listed in a fixed canonical order), loops and
/// parallel edges included.
void enumerate_all_graphs(int n_max, int m_max, const std::function<void(const Graph&)>& fn);

/// One row of a check run: pass/fail, or skipped when the precondition or a
/// guard ruled the check out for this graph.
struct CheckEntry {
  std::string check;  // "L0".."EQ3" or "whitney"
  bool passed = false;
  bool skipped = false;
  std::optional<Counterexample> counterexample;
};

/// All applicable lemma checks on one graph, aggregated per check identifier
/// (L0 over every parallel pair, L4a for k = 0..m, L4b for k = 1..m), plus a
/// whitney_check row. Fixed row order.
std::vector<CheckEntry> check_graph(const Graph& g, const LemmaGuards& = {});

/// Greedy shrink: repeatedly deletes single edges while still_fails stays
/// true. The result still fails; used to reduce fuzz counterexamples.
Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& still_fails);

struct RunSummary {
  struct Row {
    std::string check;
    int64_t pass = 0;
    int64_t fail = 0;
    int64_t skipped = 0;
  };
  struct Failure {
    std::string check;
    std::string instance;            // offending corpus graph
    std::string minimized_instance;  // after greedy edge deletion, still failing
    std::string detail;
  };

  int64_t graphs = 0;
  std::vector<Row> rows;  // fixed check order
  std::vector<Failure> failures;

  int64_t total_failures() const;
};

/// Runs check_graph over a corpus, optionally spreading graphs over threads.
/// Aggregation is ordered by corpus position, so the summary is identical for
/// any thread count. Failures carry minimized, still-failing counterexamples.
RunSummary run_all_checks(const std::vector<Graph>& corpus, int threads = 1,
                          const LemmaGuards& = {});

}  // namespace bctk
