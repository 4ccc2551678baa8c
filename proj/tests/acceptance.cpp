// Acceptance gate for the whole toolkit. Every criterion prints exactly one
// PASS/FAIL line; the binary exits 0 only when all of them pass. All
// comparisons are exact 64-bit integer equality, tolerance zero.
//
// argv[1] must be the path to the bctk binary (used by the determinism
// criterion).

#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <bctk/broken_circuit.hpp>
#include <bctk/chromatic.hpp>
#include <bctk/graph.hpp>
#include <bctk/lemma_lab.hpp>

using namespace bctk;

namespace {

std::string cli_path;

struct Command {
    int code;
    std::string out;
};

Command run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// Shared corpora. The exhaustive family covers every multigraph up to 5
// vertices and 7 edges; the random family stretches to 7 vertices and 12
// edges. Both stay within the enumeration guards.
std::vector<Graph> exhaustive_corpus() {
    std::vector<Graph> out;
    enumerate_all_graphs(5, 7, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> fuzz_corpus() {
    FuzzConfig cfg;
    cfg.n_max = 7;
    cfg.m_max = 12;
    cfg.trials = 10'000;
    cfg.seed = 20240817;
    return generate_corpus(cfg);
}

bool all_passed = true;

// Runs one criterion; body returns an empty string on success or a short
// failure account. Prints the single line for this criterion.
void criterion(int index, const std::string& name,
               const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    if (detail.empty()) {
        std::cout << "PASS  criterion " << index << ": " << name << " (" << timing
                  << ")\n";
    } else {
        std::cout << "FAIL  criterion " << index << ": " << name << " (" << timing
                  << ") -- " << detail << "\n";
        all_passed = false;
    }
    std::cout.flush();
}

std::string check_whitney_on(const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        WhitneyReport report = whitney_check(g);
        if (report.pass) continue;
        for (const WhitneyRow& row : report.per_k)
            if (!row.equal)
                return g.canonical_key() + " k=" + std::to_string(row.k) +
                       " a_k=" + std::to_string(row.a_k) +
                       " nbc=" + std::to_string(row.nbc);
    }
    return {};
}

std::string check_oracle_on(const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        if (chromatic_polynomial(g) == oracle_polynomial(g)) continue;
        return "engine and oracle disagree on " + g.canonical_key();
    }
    return {};
}

std::string check_identity_on(const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        PolynomialCache cache;
        Polynomial whole = chromatic_polynomial(g, cache);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            Polynomial split = chromatic_polynomial(delete_edge(g, e.id), cache)
                                   .minus(chromatic_polynomial(contract(g, e.id), cache));
            if (whole.dense() != split.dense())
                return g.canonical_key() + " at edge " + std::to_string(e.id);
        }
    }
    return {};
}

std::string check_recurrence_on(const std::vector<Graph>& corpus) {
    for (const Graph& g : corpus) {
        if (!g.is_simple() || g.edge_count() == 0) continue;
        LemmaVerdict v = check_recurrence(g);
        if (!v.passed)
            return v.instance + (v.counterexample ? " " + v.counterexample->detail : "");
    }
    return {};
}

std::string check_lemma_suite_on(const std::vector<Graph>& corpus) {
    RunSummary s = run_all_checks(corpus);
    if (s.total_failures() != 0) {
        const auto& f = s.failures.front();
        return f.check + " failed on " + f.instance + " (minimized " +
               f.minimized_instance + "): " + f.detail;
    }

    // Skips must be explained by an unmet precondition, never anything else:
    // the corpora stay under both the quantification and the whitney guards.
    int64_t no_pair = 0, loopy_or_edgeless = 0, non_simple_or_edgeless = 0;
    for (const Graph& g : corpus) {
        bool pair = g.find_parallel_pair().has_value();
        if (!pair) ++no_pair;
        if (g.edge_count() == 0 || g.has_loop()) ++loopy_or_edgeless;
        if (g.edge_count() == 0 || !g.is_simple()) ++non_simple_or_edgeless;
    }
    auto expect_skip = [&](const std::string& check, int64_t want) -> std::string {
        for (const auto& row : s.rows) {
            if (row.check != check) continue;
            if (row.fail != 0) return check + " has failures";
            if (row.skipped != want)
                return check + " skipped " + std::to_string(row.skipped) +
                       " graphs, preconditions rule out " + std::to_string(want);
            if (row.pass + row.skipped != s.graphs) return check + " rows do not sum";
            return "";
        }
        return "missing row " + check;
    };
    for (const auto& [check, want] :
         std::vector<std::pair<std::string, int64_t>>{
             {"L0", no_pair},
             {"L1", loopy_or_edgeless},
             {"L4a", loopy_or_edgeless},
             {"L2a", non_simple_or_edgeless},
             {"L2b", non_simple_or_edgeless},
             {"L3", non_simple_or_edgeless},
             {"L4b", non_simple_or_edgeless},
             {"EQ3", non_simple_or_edgeless},
             {"whitney", 0}}) {
        std::string err = expect_skip(check, want);
        if (!err.empty()) return err;
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <bctk-binary>\n";
        return 2;
    }
    cli_path = argv[1];

    const std::vector<Graph> exhaustive = exhaustive_corpus();
    const std::vector<Graph> fuzz = fuzz_corpus();
    const std::string scope = "every multigraph with n<=5, m<=7 (" +
                              std::to_string(exhaustive.size()) + " graphs) plus " +
                              std::to_string(fuzz.size()) + " seeded graphs n<=7, m<=12";

    criterion(1, "chromatic coefficients count the NBC subsets on " + scope, [&] {
        std::string err = check_whitney_on(exhaustive);
        return err.empty() ? check_whitney_on(fuzz) : err;
    });

    criterion(2, "deletion-contraction matches the enumeration oracle on " + scope, [&] {
        std::string err = check_oracle_on(exhaustive);
        return err.empty() ? check_oracle_on(fuzz) : err;
    });

    criterion(3, "P(G) = P(G-e) - P(G/e) at every non-loop edge on " + scope, [&] {
        std::string err = check_identity_on(exhaustive);
        return err.empty() ? check_identity_on(fuzz) : err;
    });

    criterion(4, "coefficient recurrence at the minimum edge of every simple graph", [&] {
        std::string err = check_recurrence_on(exhaustive);
        return err.empty() ? check_recurrence_on(fuzz) : err;
    });

    criterion(5, "full lemma suite: zero failures, skips only by precondition", [&] {
        std::string err = check_lemma_suite_on(exhaustive);
        return err.empty() ? check_lemma_suite_on(fuzz) : err;
    });

    criterion(6, "edge-order permutation preserves every NBC count (1000 graphs)", [&] {
        FuzzConfig cfg;
        cfg.n_max = 6;
        cfg.m_max = 10;
        cfg.trials = 1'000;
        cfg.seed = 424242;
        std::mt19937_64 rng(97);
        bool some_listing_changed = false;
        for (const Graph& g : generate_corpus(cfg)) {
            std::vector<std::vector<VertexId>> sets;
            for (const Edge& e : g.edges())
                sets.push_back(e.is_loop() ? std::vector<VertexId>{e.u}
                                           : std::vector<VertexId>{e.u, e.v});
            for (std::size_t i = sets.size(); i > 1; --i)
                std::swap(sets[i - 1], sets[rng() % i]);
            Graph h = build_graph(g.vertex_count(), sets);

            BrokenCircuitIndex original(g), permuted(h);
            if (original.nbc_counts_by_size() != permuted.nbc_counts_by_size())
                return "counts differ for " + g.canonical_key() + " vs " +
                       h.canonical_key();
            if (broken_circuits(g).broken_circuits != broken_circuits(h).broken_circuits)
                some_listing_changed = true;
        }
        if (!some_listing_changed)
            return std::string("no permutation changed any broken-circuit listing");
        return std::string{};
    });

    criterion(7, "fuzz command output is byte-identical across runs and thread counts", [&] {
        const std::string base = "fuzz --n-max 5 --m-max 8 --trials 300 --seed 11";
        Command first = run_cli(base);
        if (first.code != 0)
            return "exit code " + std::to_string(first.code) + " from the first run";
        for (const std::string& variant :
             {base, base + " --threads 2", base + " --threads 4"}) {
            Command again = run_cli(variant);
            if (again.code != 0 || again.out != first.out)
                return "output diverged for '" + variant + "'";
        }
        if (first.out.find("300 graphs, 0 failures") == std::string::npos)
            return "unexpected summary: " + first.out.substr(0, 40);
        return std::string{};
    });

    criterion(8, "degenerate anchors: loop, parallel pair, triangle", [&] {
        Graph loop = build_graph(1, {{0}});
        if (!chromatic_polynomial(loop).is_zero())
            return std::string("loop polynomial is not zero");
        auto loop_bc = broken_circuits(loop).broken_circuits;
        if (loop_bc != std::vector<EdgeSet>{{}})
            return std::string("loop must yield exactly the empty broken circuit");
        for (int k = 0; k <= 1; ++k)
            if (nbc_count(loop, k) != 0)
                return "loop admits an NBC subset at k=" + std::to_string(k);

        Graph pair = build_graph(2, {{0, 1}, {0, 1}});
        if (broken_circuits(pair).broken_circuits != std::vector<EdgeSet>{{0}})
            return std::string("parallel pair must break to its smaller edge");
        if (chromatic_polynomial(pair).dense() != std::vector<int64_t>{0, -1, 1})
            return std::string("parallel pair polynomial is wrong");

        Graph triangle = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
        Polynomial p = chromatic_polynomial(triangle);
        if (p.ak_view() != std::vector<int64_t>{1, 3, 2, 0})
            return std::string("triangle coefficients are wrong");
        BrokenCircuitIndex index(triangle);
        auto counts = index.nbc_counts_by_size();
        for (int k = 0; k <= 3; ++k)
            if (p.ak(k) != counts[static_cast<size_t>(k)])
                return "triangle coefficient a_" + std::to_string(k) +
                       " differs from its NBC count";
        return std::string{};
    });

    std::cout << (all_passed ? "acceptance: all criteria passed"
                             : "acceptance: CRITERIA FAILED")
              << "\n";
    return all_passed ? 0 : 1;
}
