#include "bctk/broken_circuit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bctk/errors.hpp"

namespace bctk {

namespace {

void check_edge_guard(const Graph& g, const GuardLimits& limits) {
  if (g.edge_count() > limits.max_edges)
    throw GuardError("edge count " + std::to_string(g.edge_count()) +
                     " exceeds the subset enumeration guard of " +
                     std::to_string(limits.max_edges));
}

// Sorted-range subset test: a contained in b.
bool is_subset(const EdgeSet& a, const EdgeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void validate_edge_set(const Graph& g, const EdgeSet& x) {
  EdgeId prev = -1;
  for (EdgeId e : x) {
    if (e <= prev) throw std::invalid_argument("edge set must be strictly increasing");
    g.position_of(e);  // throws std::out_of_range when absent
    prev = e;
  }
}

// Masks over edge positions (bit i = edges()[i]) that form cycles: nonempty,
// every incident vertex of degree exactly two with loops counting two, and
// connected. Ascending mask order.
std::vector<uint32_t> cycle_masks(const Graph& g, const GuardLimits& limits) {
  check_edge_guard(g, limits);
  const auto& edges = g.edges();
  const int m = g.edge_count();
  const int n = g.vertex_count();

  std::vector<uint32_t> out;
  std::vector<int> degree(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    std::fill(degree.begin(), degree.end(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
      return x;
    };

    bool regular = true;
    for (int i = 0; i < m && regular; ++i) {
      if (!(mask & (uint32_t{1} << i))) continue;
      const Edge& e = edges[static_cast<size_t>(i)];
      degree[static_cast<size_t>(e.u)] += e.is_loop() ? 2 : 1;
      if (!e.is_loop()) {
        degree[static_cast<size_t>(e.v)] += 1;
        parent[static_cast<size_t>(find(e.u))] = find(e.v);
      }
      regular = degree[static_cast<size_t>(e.u)] <= 2 && degree[static_cast<size_t>(e.v)] <= 2;
    }
    if (!regular) continue;

    int root = -1;
    bool connected = true;
    for (VertexId v = 0; v < n && connected; ++v) {
      if (degree[static_cast<size_t>(v)] == 0) continue;
      if (degree[static_cast<size_t>(v)] != 2) {
        connected = false;  // some incident vertex of degree one
        break;
      }
      int r = find(v);
      if (root == -1) root = r;
      connected = r == root;
    }
    if (connected) out.push_back(mask);
  }
  return out;
}

EdgeSet mask_to_set(const Graph& g, uint32_t mask) {
  EdgeSet out;
  for (int i = 0; i < g.edge_count(); ++i)
    if (mask & (uint32_t{1} << i)) out.push_back(g.edges()[static_cast<size_t>(i)].id);
  return out;
}

int64_t binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
    if (r > int64_t{4} << 60) return int64_t{4} << 60;  // saturate, only compared to guards
  }
  return static_cast<int64_t>(r);
}

}  // namespace

std::vector<EdgeSet> enumerate_cycles(const Graph& g, const GuardLimits& limits) {
  std::vector<EdgeSet> out;
  for (uint32_t mask : cycle_masks(g, limits)) out.push_back(mask_to_set(g, mask));
  std::sort(out.begin(), out.end());
  return out;
}

BrokenCircuitReport broken_circuits(const Graph& g, const GuardLimits& limits) {
  // Lexicographic cycle order makes the recorded generating cycle the
  // lexicographically smallest one for its broken circuit.
  std::map<EdgeSet, EdgeSet> by_circuit;
  for (const EdgeSet& cycle : enumerate_cycles(g, limits)) {
    EdgeSet circuit(cycle.begin(), cycle.end() - 1);  // drop the maximum edge
    by_circuit.try_emplace(std::move(circuit), cycle);
  }
  BrokenCircuitReport report;
  for (auto& [circuit, cycle] : by_circuit) {
    report.broken_circuits.push_back(circuit);
    report.generating_cycle.push_back(cycle);
  }
  return report;
}

bool includes_broken_circuit(const Graph& g, const EdgeSet& x, const GuardLimits& limits) {
  validate_edge_set(g, x);
  for (const EdgeSet& circuit : broken_circuits(g, limits).broken_circuits)
    if (is_subset(circuit, x)) return true;
  return false;
}

std::vector<EdgeSet> nbc_subsets(const Graph& g, int k, const GuardLimits& limits) {
  const int m = g.edge_count();
  if (k < 0 || k > m) return {};
  if (binomial(m, k) > limits.max_combinations)
    throw GuardError("choose(" + std::to_string(m) + ", " + std::to_string(k) +
                     ") exceeds the combination guard");

  const auto circuits = broken_circuits(g, limits).broken_circuits;
  std::vector<EdgeSet> out;
  // Lexicographic k-combinations of edge positions.
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    EdgeSet candidate;
    candidate.reserve(static_cast<size_t>(k));
    for (int p : pick) candidate.push_back(g.edges()[static_cast<size_t>(p)].id);
    bool blocked = false;
    for (const EdgeSet& circuit : circuits) {
      if (is_subset(circuit, candidate)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(std::move(candidate));

    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

int64_t nbc_count(const Graph& g, int k, const GuardLimits& limits) {
  if (k < 0 || k > g.edge_count()) return 0;
  return static_cast<int64_t>(nbc_subsets(g, k, limits).size());
}

WhitneyReport whitney_check(const Graph& g, const GuardLimits& limits) {
  const Polynomial p = chromatic_polynomial(g);
  const BrokenCircuitIndex index(g, limits);
  const std::vector<int64_t> counts = index.nbc_counts_by_size();

  WhitneyReport report;
  report.pass = true;
  for (int k = 0; k <= g.vertex_count(); ++k) {
    int64_t nbc = k <= g.edge_count() ? counts[static_cast<size_t>(k)] : 0;
    WhitneyRow row{k, p.ak(k), nbc, p.ak(k) == nbc};
    report.pass = report.pass && row.equal;
    report.per_k.push_back(row);
  }
  return report;
}

BrokenCircuitIndex::BrokenCircuitIndex(const Graph& g, const GuardLimits& limits)
    : g_(&g), m_(g.edge_count()) {
  std::vector<uint32_t> circuits;
  for (uint32_t cycle : cycle_masks(g, limits)) {
    uint32_t top = uint32_t{1} << (31 - std::countl_zero(cycle));
    circuits.push_back(cycle & ~top);
  }
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  circuit_masks_ = std::move(circuits);

  // Upward-closure over the subset lattice: includes_[s] says some broken
  // circuit is a subset of s.
  includes_.assign(size_t{1} << m_, 0);
  for (uint32_t c : circuit_masks_) includes_[c] = 1;
  for (int b = 0; b < m_; ++b) {
    const uint32_t bit = uint32_t{1} << b;
    for (uint32_t s = 0; s < (uint32_t{1} << m_); ++s)
      if (s & bit) includes_[s] |= includes_[s ^ bit];
  }
}

uint32_t BrokenCircuitIndex::mask_of(const EdgeSet& x) const {
  validate_edge_set(*g_, x);
  uint32_t mask = 0;
  for (EdgeId e : x) mask |= uint32_t{1} << g_->position_of(e);
  return mask;
}

EdgeSet BrokenCircuitIndex::set_of(uint32_t mask) const { return mask_to_set(*g_, mask); }

std::vector<int64_t> BrokenCircuitIndex::nbc_counts_by_size() const {
  std::vector<int64_t> counts(static_cast<size_t>(m_) + 1, 0);
  for (uint32_t s = 0; s < (uint32_t{1} << m_); ++s)
    if (!includes_[s]) counts[static_cast<size_t>(std::popcount(s))]++;
  return counts;
}

}  // namespace bctk
