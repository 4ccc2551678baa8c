#pragma once

// Cycles, broken circuits and no-broken-circuit (NBC) subsets of a graph with
// ordered edges. A cycle is a nonempty connected edge subset in which every
// incident vertex has degree exactly two, loops counting two; a broken
// circuit is a cycle minus its maximum edge. Everything here works by
// explicit subset enumeration behind size guards.

#include <cstdint>
#include <vector>

#include "bctk/chromatic.hpp"
#include "bctk/graph.hpp"

namespace bctk {

/// Edge subset in canonical form: strictly increasing edge ids.
using EdgeSet = std::vector<EdgeId>;

/// Enumeration ceilings. max_edges bounds 2^m subset sweeps, max_combinations
/// bounds per-k subset listings. Exceeding either raises GuardError.
struct GuardLimits {
  int max_edges = 20;
  int64_t max_combinations = 1'000'000;
};

/// All cycles of g, each as a canonical EdgeSet, in lexicographic order.
/// A loop is a one-edge cycle and a parallel pair is a two-edge cycle;
/// forests have none.
std::vector<EdgeSet> enumerate_cycles(const Graph& g, const GuardLimits& limits = {});

/// Broken circuits, deduplicated, with one generating cycle recorded per
/// broken circuit (the lexicographically smallest one).
struct BrokenCircuitReport {
  std::vector<EdgeSet> broken_circuits;  // lexicographic order, no duplicates
  std::vector<EdgeSet> generating_cycle;  // parallel to broken_circuits
};

BrokenCircuitReport broken_circuits(const Graph& g, const GuardLimits& limits = {});

/// Whether some broken circuit of g is a subset of x. The empty broken
/// circuit (from a loop) is included in every subset. Throws
/// std::out_of_range when x mentions an unknown edge.
bool includes_broken_circuit(const Graph& g, const EdgeSet& x, const GuardLimits& limits = {});

/// All k-subsets of E(g) including no broken circuit, in lexicographic order.
std::vector<EdgeSet> nbc_subsets(const Graph& g, int k, const GuardLimits& limits = {});

/// |nbc_subsets(g, k)|. Zero for k < 0 or k > m.
int64_t nbc_count(const Graph& g, int k, const GuardLimits& limits = {});

struct WhitneyRow {
  int k;
  int64_t a_k;        // signed coefficient view of the chromatic polynomial
  int64_t nbc;        // NBC subsets of size k
  bool equal;
};

/// Per-k comparison of the chromatic coefficients a_k with NBC subset counts,
/// for k = 0..n. pass is the conjunction of the rows.
struct WhitneyReport {
  std::vector<WhitneyRow> per_k;
  bool pass;
};

WhitneyReport whitney_check(const Graph& g, const GuardLimits& limits = {});

/// Position-mask view of the broken circuits of one graph, with an
/// inclusion table over all 2^m subsets. Shared by the quantified lemma
/// checks, which would otherwise rescan the circuit list per subset.
class BrokenCircuitIndex {
 public:
  explicit BrokenCircuitIndex(const Graph& g, const GuardLimits& limits = {});

  const Graph& graph() const { return *g_; }
  int edge_count() const { return m_; }
  const std::vector<uint32_t>& circuit_masks() const { return circuit_masks_; }

  /// Subset given by bit i = edges()[i] present.
  bool mask_includes_broken_circuit(uint32_t subset) const {
    return includes_[subset] != 0;
  }

  uint32_t mask_of(const EdgeSet& x) const;
  EdgeSet set_of(uint32_t mask) const;

  /// NBC subset counts for every size 0..m in one sweep.
  std::vector<int64_t> nbc_counts_by_size() const;

 private:
  const Graph* g_;
  int m_;
  std::vector<uint32_t> circuit_masks_;
  std::vector<char> includes_;  // 2^m entries
};

}  // namespace bctk
