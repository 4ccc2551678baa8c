#pragma once

// GraphFile text format and JSON report builders.
//
// GraphFile: one "n <count>" header line, then zero or more "e <u> <v>" edge
// lines (a loop when u == v), with "#" comment lines and blank lines allowed
// anywhere. Vertices are 0-based; the i-th edge line gets edge id i. The
// renderer emits exactly this shape, so parse(render(g)) == g for graphs with
// densely numbered edges.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bctk/broken_circuit.hpp"
#include "bctk/chromatic.hpp"
#include "bctk/graph.hpp"
#include "bctk/lemma_lab.hpp"

namespace bctk {

using Json = nlohmann::ordered_json;

/// Throws ParseError with a 1-based line number on malformed input.
Graph parse_graph_file(std::istream& in);
Graph parse_graph_file(const std::string& text);
/// ParseError with line 0 when the file cannot be opened.
Graph load_graph_file(const std::filesystem::path& path);

std::string render_graph_file(const Graph& g);

Json poly_report(const Graph& g, const Polynomial& p);
Json bc_report(const Graph& g, const BrokenCircuitReport& report);
Json nbc_report(const Graph& g, int k, int64_t count, const std::vector<EdgeSet>* subsets);
Json whitney_json(const WhitneyReport& report);
Json lemma_entries_json(const std::vector<CheckEntry>& entries);

/// Full verification report: n, m, both coefficient views, broken circuits,
/// NBC counts for k = 0..n, the whitney comparison and one row per lemma
/// check. Key order is fixed for reproducible diffs.
Json verify_report(const Graph& g, const Polynomial& p, const BrokenCircuitReport& circuits,
                   const WhitneyReport& whitney, const std::vector<CheckEntry>& entries);

Json fuzz_report(const FuzzConfig& config, const RunSummary& summary);

}  // namespace bctk
