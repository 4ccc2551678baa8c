#include "bctk/lemma_lab.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <future>
#include <random>
#include <stdexcept>

#include "bctk/chromatic.hpp"
#include "bctk/errors.hpp"

namespace bctk {

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L0: return "L0";
    case LemmaId::L1: return "L1";
    case LemmaId::L2a: return "L2a";
    case LemmaId::L2b: return "L2b";
    case LemmaId::L3: return "L3";
    case LemmaId::L4a: return "L4a";
    case LemmaId::L4b: return "L4b";
    case LemmaId::EQ3: return "EQ3";
  }
  return "?";
}

namespace {

void check_quantification_guard(const Graph& g, const LemmaGuards& guards) {
  if (g.edge_count() > guards.max_quantified_edges)
    throw GuardError("subset quantification over " + std::to_string(g.edge_count()) +
                     " edges exceeds the guard of " + std::to_string(guards.max_quantified_edges));
}

std::string set_to_string(const EdgeSet& x) {
  std::string out = "{";
  for (size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(x[i]);
  }
  return out + "}";
}

// For each edge position of g, the position of the same edge id in h, or -1
// when h lost that edge. Requires E(h) to use ids of g.
std::vector<int> position_map(const Graph& g, const Graph& h) {
  std::vector<int> map(static_cast<size_t>(g.edge_count()), -1);
  for (int i = 0; i < g.edge_count(); ++i) {
    EdgeId id = g.edges()[static_cast<size_t>(i)].id;
    if (h.contains_edge(id)) map[static_cast<size_t>(i)] = h.position_of(id);
  }
  return map;
}

// Transports a position mask along a position map; nullopt when some edge has
// no image.
std::optional<uint32_t> remap_mask(uint32_t mask, const std::vector<int>& pmap) {
  uint32_t out = 0;
  for (int i = 0; i < static_cast<int>(pmap.size()); ++i) {
    if (!(mask & (uint32_t{1} << i))) continue;
    if (pmap[static_cast<size_t>(i)] < 0) return std::nullopt;
    out |= uint32_t{1} << pmap[static_cast<size_t>(i)];
  }
  return out;
}

LemmaVerdict pass_verdict(LemmaId id, std::string instance) {
  return LemmaVerdict{id, std::move(instance), true, std::nullopt};
}

LemmaVerdict fail_verdict(LemmaId id, std::string instance, EdgeSet witness, std::string detail) {
  return LemmaVerdict{id, std::move(instance), false,
                      Counterexample{std::move(witness), std::move(detail)}};
}

}  // namespace

LemmaVerdict check_lemma0(const Graph& g, EdgeId e, EdgeId f, const LemmaGuards& guards) {
  if (e >= f || !g.are_parallel(e, f))
    throw std::invalid_argument("lemma 0 requires parallel edges e < f");
  check_quantification_guard(g, guards);

  const std::string instance =
      g.canonical_key() + " e=" + std::to_string(e) + " f=" + std::to_string(f);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const Graph deleted = delete_edge(g, e);
  const BrokenCircuitIndex in_deleted(deleted, guards.limits);
  const auto pmap = position_map(g, deleted);
  const uint32_t e_bit = uint32_t{1} << g.position_of(e);

  for (uint32_t x = 0; x < (uint32_t{1} << g.edge_count()); ++x) {
    const bool lhs = !in_g.mask_includes_broken_circuit(x);
    bool rhs = false;
    if (!(x & e_bit)) rhs = !in_deleted.mask_includes_broken_circuit(*remap_mask(x, pmap));
    if (lhs != rhs)
      return fail_verdict(LemmaId::L0, instance, in_g.set_of(x),
                          "X=" + set_to_string(in_g.set_of(x)) + ": NBC in G is " +
                              (lhs ? "true" : "false") + " but the G-e side is " +
                              (rhs ? "true" : "false"));
  }
  return pass_verdict(LemmaId::L0, instance);
}

LemmaVerdict check_lemma1(const Graph& g, const LemmaGuards& guards) {
  if (g.edge_count() < 1) throw std::invalid_argument("lemma 1 requires at least one edge");
  if (g.has_loop()) throw std::invalid_argument("lemma 1 requires a loop-free graph");
  check_quantification_guard(g, guards);

  const EdgeId e = g.min_edge();
  const std::string instance = g.canonical_key() + " e=" + std::to_string(e);
  const Graph deleted = delete_edge(g, e);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const BrokenCircuitIndex in_deleted(deleted, guards.limits);
  const auto embed = position_map(deleted, g);

  for (uint32_t y = 0; y < (uint32_t{1} << deleted.edge_count()); ++y) {
    const bool in_smaller = in_deleted.mask_includes_broken_circuit(y);
    const bool in_full = in_g.mask_includes_broken_circuit(*remap_mask(y, embed));
    if (in_smaller != in_full)
      return fail_verdict(LemmaId::L1, instance, in_deleted.set_of(y),
                          "Y=" + set_to_string(in_deleted.set_of(y)) +
                              ": includes a broken circuit of G-e: " +
                              (in_smaller ? "true" : "false") + ", of G: " +
                              (in_full ? "true" : "false"));
  }
  return pass_verdict(LemmaId::L1, instance);
}

std::array<LemmaVerdict, 2> check_lemma2(const Graph& g, const LemmaGuards& guards) {
  if (g.edge_count() < 1) throw std::invalid_argument("lemma 2 requires at least one edge");
  if (!g.is_simple()) throw std::invalid_argument("lemma 2 requires a simple graph");
  check_quantification_guard(g, guards);

  const EdgeId e = g.min_edge();
  assert(g.position_of(e) == 0);
  const std::string instance = g.canonical_key() + " e=" + std::to_string(e);
  const Graph contracted = contract(g, e);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const BrokenCircuitIndex in_contracted(contracted, guards.limits);
  const auto pmap = position_map(g, contracted);

  std::array<LemmaVerdict, 2> out{pass_verdict(LemmaId::L2a, instance),
                                  pass_verdict(LemmaId::L2b, instance)};
  for (uint32_t x = 1; x < (uint32_t{1} << g.edge_count()); ++x) {
    if (!(x & 1u)) continue;                             // X must contain e
    if (in_g.mask_includes_broken_circuit(x)) continue;  // X must be NBC in G
    const auto image = remap_mask(x ^ 1u, pmap);
    if (!image) {
      if (out[0].passed)
        out[0] = fail_verdict(LemmaId::L2a, instance, in_g.set_of(x),
                              "X=" + set_to_string(in_g.set_of(x)) +
                                  ": X-{e} is not contained in the contraction's edges");
      continue;
    }
    if (in_contracted.mask_includes_broken_circuit(*image) && out[1].passed)
      out[1] = fail_verdict(LemmaId::L2b, instance, in_g.set_of(x),
                            "X=" + set_to_string(in_g.set_of(x)) +
                                ": X-{e} includes a broken circuit of the contraction");
    if (!out[0].passed && !out[1].passed) break;
  }
  return out;
}

LemmaVerdict check_lemma3(const Graph& g, const LemmaGuards& guards) {
  if (g.edge_count() < 1) throw std::invalid_argument("lemma 3 requires at least one edge");
  if (!g.is_simple()) throw std::invalid_argument("lemma 3 requires a simple graph");
  check_quantification_guard(g, guards);

  const EdgeId e = g.min_edge();
  const std::string instance = g.canonical_key() + " e=" + std::to_string(e);
  const Graph contracted = contract(g, e);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const BrokenCircuitIndex in_contracted(contracted, guards.limits);
  const auto embed = position_map(contracted, g);

  for (uint32_t y = 0; y < (uint32_t{1} << contracted.edge_count()); ++y) {
    if (in_contracted.mask_includes_broken_circuit(y)) continue;
    const uint32_t with_e = *remap_mask(y, embed) | 1u;  // e sits at position 0
    if (in_g.mask_includes_broken_circuit(with_e))
      return fail_verdict(LemmaId::L3, instance, in_contracted.set_of(y),
                          "Y=" + set_to_string(in_contracted.set_of(y)) +
                              ": Y+{e} includes a broken circuit of G");
  }
  return pass_verdict(LemmaId::L3, instance);
}

LemmaVerdict check_lemma4a(const Graph& g, int k, const LemmaGuards& guards) {
  if (g.edge_count() < 1) throw std::invalid_argument("lemma 4a requires at least one edge");
  if (g.has_loop()) throw std::invalid_argument("lemma 4a requires a loop-free graph");
  if (k < 0) throw std::invalid_argument("lemma 4a requires k >= 0");
  check_quantification_guard(g, guards);

  const EdgeId e = g.min_edge();
  const std::string instance =
      g.canonical_key() + " e=" + std::to_string(e) + " k=" + std::to_string(k);
  const Graph deleted = delete_edge(g, e);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const BrokenCircuitIndex in_deleted(deleted, guards.limits);

  int64_t smaller_side = 0;
  for (uint32_t y = 0; y < (uint32_t{1} << deleted.edge_count()); ++y)
    if (std::popcount(y) == k && !in_deleted.mask_includes_broken_circuit(y)) ++smaller_side;

  int64_t full_side = 0;
  for (uint32_t x = 0; x < (uint32_t{1} << g.edge_count()); ++x)
    if (!(x & 1u) && std::popcount(x) == k && !in_g.mask_includes_broken_circuit(x)) ++full_side;

  if (smaller_side != full_side)
    return fail_verdict(LemmaId::L4a, instance, {},
                        "k=" + std::to_string(k) + ": " + std::to_string(smaller_side) +
                            " NBC subsets of G-e vs " + std::to_string(full_side) +
                            " e-avoiding NBC subsets of G");
  return pass_verdict(LemmaId::L4a, instance);
}

LemmaVerdict bijection_beta(const Graph& g, int k, const LemmaGuards& guards) {
  if (g.edge_count() < 1) throw std::invalid_argument("bijection requires at least one edge");
  if (!g.is_simple()) throw std::invalid_argument("bijection requires a simple graph");
  if (k < 1) throw std::invalid_argument("bijection requires k >= 1");
  check_quantification_guard(g, guards);

  const EdgeId e = g.min_edge();
  const Graph contracted = contract(g, e);
  const BrokenCircuitIndex in_g(g, guards.limits);
  const BrokenCircuitIndex in_contracted(contracted, guards.limits);
  const auto pmap = position_map(g, contracted);

  // Domain: NBC k-subsets of E(G) containing e. Codomain: NBC (k-1)-subsets
  // of the contraction.
  std::vector<uint32_t> domain;
  for (uint32_t x = 0; x < (uint32_t{1} << g.edge_count()); ++x)
    if ((x & 1u) && std::popcount(x) == k && !in_g.mask_includes_broken_circuit(x))
      domain.push_back(x);
  std::vector<uint32_t> codomain;
  for (uint32_t y = 0; y < (uint32_t{1} << contracted.edge_count()); ++y)
    if (std::popcount(y) == k - 1 && !in_contracted.mask_includes_broken_circuit(y))
      codomain.push_back(y);

  const std::string instance = g.canonical_key() + " e=" + std::to_string(e) +
                               " k=" + std::to_string(k) +
                               " |A'_k(G)|=" + std::to_string(domain.size()) +
                               " |A_{k-1}(G|e)|=" + std::to_string(codomain.size());

  std::vector<uint32_t> images;
  for (uint32_t x : domain) {
    const auto image = remap_mask(x ^ 1u, pmap);
    if (!image || !std::binary_search(codomain.begin(), codomain.end(), *image))
      return fail_verdict(LemmaId::L4b, instance, in_g.set_of(x),
                          "beta(X) for X=" + set_to_string(in_g.set_of(x)) +
                              " does not land in A_{k-1} of the contraction");
    images.push_back(*image);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return fail_verdict(LemmaId::L4b, instance, {}, "beta maps two domain sets to one image");
  for (uint32_t y : codomain)
    if (!std::binary_search(images.begin(), images.end(), y))
      return fail_verdict(LemmaId::L4b, instance, in_contracted.set_of(y),
                          "Y=" + set_to_string(in_contracted.set_of(y)) + " has no preimage");
  return pass_verdict(LemmaId::L4b, instance);
}

LemmaVerdict check_recurrence(const Graph& g, const LemmaGuards& guards) {
  (void)guards;  // no subset quantification here; only polynomial work
  if (g.edge_count() < 1) throw std::invalid_argument("recurrence requires at least one edge");
  if (!g.is_simple()) throw std::invalid_argument("recurrence requires a simple graph");

  const EdgeId e = g.min_edge();
  const std::string instance = g.canonical_key() + " e=" + std::to_string(e);
  PolynomialCache cache;
  const Polynomial whole = chromatic_polynomial(g, cache);
  const Polynomial without = chromatic_polynomial(delete_edge(g, e), cache);
  const Polynomial merged = chromatic_polynomial(contract(g, e), cache);

  for (int k = 1; k <= g.vertex_count(); ++k) {
    int64_t rhs;
    if (__builtin_add_overflow(without.ak(k), merged.ak(k - 1), &rhs))
      throw OverflowError("coefficient sum overflowed");
    if (whole.ak(k) != rhs)
      return fail_verdict(LemmaId::EQ3, instance, {},
                          "k=" + std::to_string(k) + ": a_k(G)=" + std::to_string(whole.ak(k)) +
                              " but a_k(G-e)+a_{k-1}(G|e)=" + std::to_string(rhs));
  }
  return pass_verdict(LemmaId::EQ3, instance);
}

std::vector<Graph> generate_corpus(const FuzzConfig& config) {
  if (config.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (config.m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  if (config.trials < 0) throw std::invalid_argument("trials must be nonnegative");

  // mt19937_64 plus modulo keeps the byte stream identical on every platform;
  // std::uniform_int_distribution would not.
  std::mt19937_64 rng(config.seed);
  auto draw = [&rng](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };

  std::vector<Graph> corpus;
  corpus.reserve(static_cast<size_t>(config.trials));
  for (int trial = 0; trial < config.trials; ++trial) {
    const int n = 1 + draw(config.n_max);
    int m = draw(config.m_max + 1);

    int64_t distinct_sets = static_cast<int64_t>(n) * (n - 1) / 2 + (config.allow_loops ? n : 0);
    if (!config.allow_parallel) m = static_cast<int>(std::min<int64_t>(m, distinct_sets));
    if (distinct_sets == 0) m = 0;  // single vertex, loops forbidden

    std::vector<Edge> edges;
    for (EdgeId id = 0; id < m; ++id) {
      while (true) {
        VertexId u = draw(n);
        VertexId v = draw(n);
        if (u > v) std::swap(u, v);
        if (!config.allow_loops && u == v) continue;
        if (!config.allow_parallel) {
          bool seen = false;
          for (const Edge& prev : edges) seen = seen || (prev.u == u && prev.v == v);
          if (seen) continue;
        }
        edges.push_back(Edge{id, u, v});
        break;
      }
    }
    corpus.emplace_back(n, std::move(edges));
  }
  return corpus;
}

void enumerate_all_graphs(int n_max, int m_max,
                          const std::function<void(const Graph&)>& fn) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("bounds must be nonnegative");
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::pair<VertexId, VertexId>> sets;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u; v < n; ++v) sets.emplace_back(u, v);

    std::vector<Edge> edges;
    // One graph per multiset of endpoint sets: edge lists are nondecreasing
    // in the canonical endpoint order, ids follow listing order.
    auto rec = [&](auto&& self, size_t first, int next_id) -> void {
      fn(Graph(n, edges));
      if (next_id == m_max) return;
      for (size_t s = first; s < sets.size(); ++s) {
        edges.push_back(Edge{next_id, sets[s].first, sets[s].second});
        self(self, s, next_id + 1);
        edges.pop_back();
      }
    };
    rec(rec, 0, 0);
  }
}

namespace {

constexpr std::array<std::string_view, 9> kCheckOrder = {"L0",  "L1",  "L2a", "L2b", "L3",
                                                         "L4a", "L4b", "EQ3", "whitney"};

std::vector<std::pair<EdgeId, EdgeId>> parallel_pairs(const Graph& g) {
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (edges[i].same_endpoints(edges[j])) pairs.emplace_back(edges[i].id, edges[j].id);
  return pairs;
}

CheckEntry skipped_entry(std::string_view check) {
  return CheckEntry{std::string(check), false, true, std::nullopt};
}

CheckEntry entry_from(std::string_view check, const LemmaVerdict& v) {
  return CheckEntry{std::string(check), v.passed, false, v.counterexample};
}

// Merges one verdict into an aggregate entry: the first failure wins.
void fold(CheckEntry& entry, const LemmaVerdict& v) {
  entry.skipped = false;
  if (!v.passed && entry.passed) {
    entry.passed = false;
    entry.counterexample = v.counterexample;
  }
}

}  // namespace

std::vector<CheckEntry> check_graph(const Graph& g, const LemmaGuards& guards) {
  const bool quantifiable = g.edge_count() <= guards.max_quantified_edges;
  const bool loop_free = !g.has_loop();
  const bool simple = g.is_simple();
  const bool has_edges = g.edge_count() >= 1;
  const auto pairs = parallel_pairs(g);

  std::vector<CheckEntry> entries;
  entries.reserve(kCheckOrder.size());

  // L0 over every parallel pair.
  if (pairs.empty() || !quantifiable) {
    entries.push_back(skipped_entry("L0"));
  } else {
    CheckEntry entry{"L0", true, false, std::nullopt};
    for (const auto& [e, f] : pairs) fold(entry, check_lemma0(g, e, f, guards));
    entries.push_back(std::move(entry));
  }

  if (has_edges && loop_free && quantifiable)
    entries.push_back(entry_from("L1", check_lemma1(g, guards)));
  else
    entries.push_back(skipped_entry("L1"));

  if (has_edges && simple && quantifiable) {
    const auto both = check_lemma2(g, guards);
    entries.push_back(entry_from("L2a", both[0]));
    entries.push_back(entry_from("L2b", both[1]));
    entries.push_back(entry_from("L3", check_lemma3(g, guards)));
  } else {
    entries.push_back(skipped_entry("L2a"));
    entries.push_back(skipped_entry("L2b"));
    entries.push_back(skipped_entry("L3"));
  }

  if (has_edges && loop_free && quantifiable) {
    CheckEntry entry{"L4a", true, false, std::nullopt};
    for (int k = 0; k <= g.edge_count(); ++k) fold(entry, check_lemma4a(g, k, guards));
    entries.push_back(std::move(entry));
  } else {
    entries.push_back(skipped_entry("L4a"));
  }

  if (has_edges && simple && quantifiable) {
    CheckEntry entry{"L4b", true, false, std::nullopt};
    for (int k = 1; k <= g.edge_count(); ++k) fold(entry, bijection_beta(g, k, guards));
    entries.push_back(std::move(entry));
  } else {
    entries.push_back(skipped_entry("L4b"));
  }

  if (has_edges && simple)
    entries.push_back(entry_from("EQ3", check_recurrence(g, guards)));
  else
    entries.push_back(skipped_entry("EQ3"));

  if (g.edge_count() <= guards.limits.max_edges) {
    const WhitneyReport report = whitney_check(g, guards.limits);
    CheckEntry entry{"whitney", report.pass, false, std::nullopt};
    if (!report.pass) {
      for (const WhitneyRow& row : report.per_k) {
        if (row.equal) continue;
        entry.counterexample =
            Counterexample{{},
                           "k=" + std::to_string(row.k) + ": a_k=" + std::to_string(row.a_k) +
                               " but nbc_count=" + std::to_string(row.nbc)};
        break;
      }
    }
    entries.push_back(std::move(entry));
  } else {
    entries.push_back(skipped_entry("whitney"));
  }

  return entries;
}

Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& still_fails) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const Edge& e : g.edges()) {
      Graph candidate = delete_edge(g, e.id);
      if (still_fails(candidate)) {
        g = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return g;
}

int64_t RunSummary::total_failures() const {
  int64_t total = 0;
  for (const Row& row : rows) total += row.fail;
  return total;
}

RunSummary run_all_checks(const std::vector<Graph>& corpus, int threads,
                          const LemmaGuards& guards) {
  if (threads < 1) throw std::invalid_argument("thread count must be positive");

  // Per-graph results, computed in parallel but aggregated in corpus order so
  // the summary does not depend on the thread count.
  std::vector<std::vector<CheckEntry>> results(corpus.size());
  auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) results[i] = check_graph(corpus[i], guards);
  };
  if (threads == 1 || corpus.size() < 2) {
    worker(0, corpus.size());
  } else {
    const size_t used = std::min<size_t>(static_cast<size_t>(threads), corpus.size());
    const size_t chunk = (corpus.size() + used - 1) / used;
    std::vector<std::future<void>> futures;
    for (size_t t = 0; t < used; ++t) {
      const size_t begin = t * chunk;
      const size_t end = std::min(corpus.size(), begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, worker, begin, end));
    }
    for (auto& f : futures) f.get();
  }

  RunSummary summary;
  summary.graphs = static_cast<int64_t>(corpus.size());
  for (std::string_view check : kCheckOrder)
    summary.rows.push_back(RunSummary::Row{std::string(check), 0, 0, 0});

  for (size_t i = 0; i < corpus.size(); ++i) {
    for (size_t c = 0; c < kCheckOrder.size(); ++c) {
      const CheckEntry& entry = results[i][c];
      RunSummary::Row& row = summary.rows[c];
      if (entry.skipped) {
        ++row.skipped;
        continue;
      }
      if (entry.passed) {
        ++row.pass;
        continue;
      }
      ++row.fail;
      const std::string check = entry.check;
      auto fails = [&check, &guards](const Graph& h) {
        for (const CheckEntry& e : check_graph(h, guards))
          if (e.check == check) return !e.skipped && !e.passed;
        return false;
      };
      const Graph minimized = minimize_counterexample(corpus[i], fails);
      std::string detail;
      if (entry.counterexample) {
        detail = entry.counterexample->detail;
        if (!entry.counterexample->witness.empty())
          detail += " witness=" + set_to_string(entry.counterexample->witness);
      }
      summary.failures.push_back(RunSummary::Failure{entry.check, corpus[i].canonical_key(),
                                                     minimized.canonical_key(), detail});
    }
  }
  return summary;
}

}  // namespace bctk
